#pragma once

#include <vector>

#include "cylprod/numeric.hpp"
#include "cylprod/quadrature.hpp"

namespace cylprod {

// L2-normalized Hermite function psi_n(x) = pi^{-1/4} (2^n n!)^{-1/2} e^{-x^2/2} H_n(x),
// evaluated by the forward recurrence
//   psi_{n+1} = x sqrt(2/(n+1)) psi_n - sqrt(n/(n+1)) psi_{n-1},
// which is stable in this normalization. Intended for |x| <= 30 (psi_0
// underflows far outside the classically allowed region).
double hermite_psi(int n, double x);

// psi_0(x) .. psi_{n_max}(x) in one recurrence pass.
std::vector<double> hermite_psi_batch(int n_max, double x);

struct HermiteHG {
    Complex h;
    Complex g;
};

// The Hermite-function pair H_lambda, G_lambda assembled from the confluent
// hypergeometric series:
//   2^{-lambda} H = sqrt(pi)/Gamma((1-lambda)/2) Phi(-lambda/2, 1/2; x^2)
//                   - 2 sqrt(pi)/Gamma(-lambda/2) x Phi((1-lambda)/2, 3/2; x^2)
// and G with the same two blocks weighted by -tan(pi lambda/2) and
// +cot(pi lambda/2). Integer lambda hits a tan/cot pole -> std::domain_error.
HermiteHG hermite_HG(Complex lambda, double x);

// The integral representation of e^{-x^2} (H_lambda^2 + G_lambda^2):
//   2^{lambda+1} pi^{-1} Gamma(lambda+1)
//     * int_0^inf exp(-(2 lambda + 1) t + x^2 tanh t) (cosh t sinh t)^{-1/2} dt.
// The integral as written converges for Re lambda > -1; below that the
// large-t divergence is subtracted analytically (valid down to Re lambda > -2):
//   int = e^{x^2} * B((lambda+1)/2, 1/2)/2
//       + int_0^inf e^{-(2 lambda+1) t} (cosh t sinh t)^{-1/2} e^{x^2}
//         expm1(-2 x^2/(e^{2t}+1)) dt.
Complex hermite_HG_sum_integral(Complex lambda, double x,
                                const quad::QuadratureSpec& spec = {});

}  // namespace cylprod
