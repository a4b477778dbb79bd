#pragma once

#include <charconv>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace cylprod {

using Complex = std::complex<double>;

inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr double sqrt_pi = 1.772453850905516027298167483341145183;
inline constexpr double sqrt_two = 1.414213562373095048801688724209698079;
inline constexpr double sqrt_two_pi = 2.506628274631000502415765284811045253;

inline bool is_finite(double v) { return std::isfinite(v); }
inline bool is_finite(const Complex& v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
}

// Throws if a computed quantity left the representable range; `what` names
// the operation for the caller.
template <typename T>
inline const T& ensure_finite(const T& v, const char* what) {
    if (!is_finite(v)) {
        throw std::range_error(std::string(what) + ": result overflowed or is undefined");
    }
    return v;
}

// Parameter constrained to the open right half-plane Re > 0.
struct HalfPlaneParameter {
    Complex value;

    explicit HalfPlaneParameter(Complex z) : value(z) {
        if (!is_finite(z)) {
            throw std::domain_error("half-plane parameter must be finite");
        }
        if (z.real() <= 0.0) {
            throw std::domain_error("half-plane parameter requires Re > 0");
        }
    }
};

// Shortest decimal string that parses back to exactly the same double.
inline std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

inline double rel_deviation(const Complex& a, const Complex& b) {
    double scale = std::max(std::abs(a), std::abs(b));
    if (scale == 0.0) return 0.0;
    return std::abs(a - b) / scale;
}

}  // namespace cylprod
