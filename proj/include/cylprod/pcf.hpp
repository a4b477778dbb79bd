#pragma once

#include "cylprod/numeric.hpp"

namespace cylprod {

enum class PCFRegime {
    kummer,      // confluent-hypergeometric assembly, |x| <= 4
    integral,    // cancellation-free Laplace-type integral, mid-range |x|
    asymptotic,  // large-|x| expansion, both argument signs
};

struct PCFValue {
    Complex value;
    Complex derivative;  // D'_nu(x) = -(x/2) D_nu(x) + nu D_{nu-1}(x)
    PCFRegime regime;
    // cancellation magnification of the branch that produced `value`:
    // (sum of block magnitudes) / |result|, 1 when the branch is subtraction-free
    double cond = 1.0;
};

// Parabolic cylinder function D_nu(x) for complex order and real argument.
// Routing: the Kummer assembly loses ~e^{x^2/2} ulps to cancellation for
// x > 0 and is restricted to |x| <= 4; the mid band up to x_switch uses the
// positive-integrand integral representation
//   D_nu(x) = e^{-x^2/4}/Gamma(-nu) int_0^inf e^{-xt-t^2/2} t^{-nu-1} dt
// (orders with Re nu >= 0 are reached by raising D_{mu+1} = x D_mu - mu D_{mu-1}
// from two mid-band starters); |x| >= x_switch uses the large-argument
// expansions, with the connection form for negative arguments. Accuracy is
// ~1e-12 relative in the Kummer and integral regimes; the asymptotic branch
// is limited by its smallest term (see the recorded overlap band in the
// default configuration).
PCFValue pcf_D(Complex nu, double x, double x_switch = 8.0);

inline Complex pcf_D_value(Complex nu, double x, double x_switch = 8.0) {
    return pcf_D(nu, x, x_switch).value;
}

// Force a specific branch; used by the regime-overlap calibration tests.
Complex pcf_D_regime(Complex nu, double x, PCFRegime regime);

}  // namespace cylprod
