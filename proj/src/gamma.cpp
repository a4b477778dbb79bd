#include "cylprod/gamma.hpp"

#include <array>
#include <cmath>

namespace cylprod {

namespace {

// Lanczos g = 7, n = 9 coefficient set.
constexpr double lanczos_g = 7.0;
constexpr std::array<double, 9> lanczos_c = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

bool near_nonpositive_integer(Complex z) {
    if (std::abs(z.imag()) > 1e-13) return false;
    double r = z.real();
    if (r > 0.5) return false;
    return std::abs(r - std::round(r)) < 1e-13;
}

Complex lanczos_positive(Complex z) {
    // Valid for Re z >= 0.5; argument shifted so the series is evaluated at z-1.
    z -= 1.0;
    Complex acc = lanczos_c[0];
    for (std::size_t k = 1; k < lanczos_c.size(); ++k) {
        acc += lanczos_c[k] / (z + static_cast<double>(k));
    }
    Complex t = z + lanczos_g + 0.5;
    return sqrt_two_pi * std::pow(t, z + 0.5) * std::exp(-t) * acc;
}

}  // namespace

Complex gamma(Complex z) {
    if (!is_finite(z)) {
        throw std::domain_error("gamma: argument must be finite");
    }
    if (near_nonpositive_integer(z)) {
        throw std::domain_error("gamma: pole at non-positive integer argument");
    }
    if (z.real() < 0.5) {
        // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
        Complex s = std::sin(pi * z);
        return ensure_finite(pi / (s * lanczos_positive(1.0 - z)), "gamma");
    }
    return ensure_finite(lanczos_positive(z), "gamma");
}

Complex rgamma(Complex z) {
    if (near_nonpositive_integer(z)) return Complex{0.0, 0.0};
    return 1.0 / gamma(z);
}

Complex beta(Complex a, Complex b) {
    return ensure_finite(gamma(a) * gamma(b) / gamma(a + b), "beta");
}

}  // namespace cylprod
