#include "cylprod/pcf.hpp"

#include <cmath>
#include <stdexcept>

#include "cylprod/gamma.hpp"
#include "cylprod/kummer.hpp"
#include "cylprod/quadrature.hpp"

namespace cylprod {

namespace {

Complex D_kummer(Complex nu, double x, double* cond = nullptr) {
    const double q = 0.5 * x * x;
    const Complex first = rgamma(0.5 * (1.0 - nu)) * kummer_phi(-0.5 * nu, 0.5, q);
    const Complex second =
        sqrt_two * x * rgamma(-0.5 * nu) * kummer_phi(0.5 * (1.0 - nu), 1.5, q);
    const Complex diff = first - second;
    if (cond) {
        *cond = (std::abs(first) + std::abs(second)) / std::max(std::abs(diff), 1e-300);
    }
    return std::pow(Complex{2.0, 0.0}, 0.5 * nu) * sqrt_pi * std::exp(-0.5 * q) * diff;
}

Complex D_integral_negative_order(Complex nu, double x) {
    quad::QuadratureSpec spec;
    spec.rel_tol = 1e-13;
    spec.abs_tol = 1e-280;
    const Complex power = -nu - 1.0;
    auto r = quad::exp_sinh(
        [&](double t) -> Complex {
            const double e = -x * t - 0.5 * t * t;
            if (e < -700.0) return Complex{};
            return std::exp(e) * std::exp(power * std::log(t));
        },
        spec);
    return std::exp(-0.25 * x * x) * rgamma(-nu) * r.value;
}

Complex D_integral(Complex nu, double x) {
    if (nu.real() < 0.0) return D_integral_negative_order(nu, x);
    const int m = static_cast<int>(std::floor(nu.real())) + 1;
    Complex lo = D_integral_negative_order(nu - (m + 1.0), x);
    Complex hi = D_integral_negative_order(nu - static_cast<double>(m), x);
    for (int j = 0; j < m; ++j) {
        const Complex mu = nu - static_cast<double>(m - j);
        const Complex next = x * hi - mu * lo;
        lo = hi;
        hi = next;
    }
    return hi;
}

// sum_s (-1)^s (-nu)_{2s} / (s! (2 x^2)^s), truncated at the smallest term
Complex asym_S1(Complex nu, double ax) {
    Complex term{1.0, 0.0};
    Complex sum = term;
    double prev = 1.0;
    for (int s = 1; s < 60; ++s) {
        term *= -(-nu + (2.0 * s - 2.0)) * (-nu + (2.0 * s - 1.0)) / (s * 2.0 * ax * ax);
        if (std::abs(term) >= prev) break;
        prev = std::abs(term);
        sum += term;
        if (prev < 1e-17 * std::abs(sum)) break;
    }
    return sum;
}

// sum_s (nu+1)_{2s} / (s! (2 x^2)^s), truncated at the smallest term
Complex asym_S2(Complex nu, double ax) {
    Complex term{1.0, 0.0};
    Complex sum = term;
    double prev = 1.0;
    for (int s = 1; s < 60; ++s) {
        term *= (nu + (2.0 * s - 1.0)) * (nu + 2.0 * s) / (s * 2.0 * ax * ax);
        if (std::abs(term) >= prev) break;
        prev = std::abs(term);
        sum += term;
        if (prev < 1e-17 * std::abs(sum)) break;
    }
    return sum;
}

Complex D_asymptotic(Complex nu, double x) {
    const double ax = std::abs(x);
    const Complex decayed =
        std::exp(-0.25 * ax * ax) * std::exp(nu * std::log(ax)) * asym_S1(nu, ax);
    if (x >= 0.0) return decayed;
    const Complex grown = sqrt_two_pi * rgamma(-nu) * std::exp(0.25 * ax * ax) *
                          std::exp((-nu - 1.0) * std::log(ax)) * asym_S2(nu, ax);
    return grown + std::cos(pi * nu) * decayed;
}

Complex D_route(Complex nu, double x, double x_switch, double* cond = nullptr) {
    const double ax = std::abs(x);
    if (ax <= 4.0) return D_kummer(nu, x, cond);
    if (ax < x_switch) return D_integral(nu, x);
    return D_asymptotic(nu, x);
}

}  // namespace

PCFValue pcf_D(Complex nu, double x, double x_switch) {
    if (!is_finite(nu) || !std::isfinite(x)) {
        throw std::domain_error("pcf_D: arguments must be finite");
    }
    PCFValue out;
    const double ax = std::abs(x);
    out.regime = ax <= 4.0 ? PCFRegime::kummer
                           : (ax < x_switch ? PCFRegime::integral : PCFRegime::asymptotic);
    out.value = ensure_finite(D_route(nu, x, x_switch, &out.cond), "pcf_D");
    const Complex below = D_route(nu - 1.0, x, x_switch);
    out.derivative = ensure_finite(-0.5 * x * out.value + nu * below, "pcf_D derivative");
    return out;
}

Complex pcf_D_regime(Complex nu, double x, PCFRegime regime) {
    switch (regime) {
        case PCFRegime::kummer:
            return ensure_finite(D_kummer(nu, x), "pcf_D_regime kummer");
        case PCFRegime::integral:
            return ensure_finite(D_integral(nu, x), "pcf_D_regime integral");
        case PCFRegime::asymptotic:
            return ensure_finite(D_asymptotic(nu, x), "pcf_D_regime asymptotic");
    }
    throw std::domain_error("pcf_D_regime: unknown regime");
}

}  // namespace cylprod
