#pragma once

#include "cylprod/numeric.hpp"

namespace cylprod {

// Gamma function for complex argument, Lanczos approximation with reflection
// for Re z < 1/2. Poles at the non-positive integers are reported as
// std::domain_error. Good to ~1e-13 relative for |z| <= 50.
Complex gamma(Complex z);

inline double gamma(double x) { return gamma(Complex(x, 0.0)).real(); }

// 1/Gamma(z), entire: returns exactly 0 at the poles of Gamma.
Complex rgamma(Complex z);

// B(a, b) = Gamma(a) Gamma(b) / Gamma(a + b)
Complex beta(Complex a, Complex b);

}  // namespace cylprod
