#include "cylprod/product_integrals.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "cylprod/bessel.hpp"
#include "cylprod/gamma.hpp"
#include "cylprod/pcf.hpp"

namespace cylprod {

namespace {

constexpr double ln_two = 0.693147180559945309417232121458176568;

// log(sinh t) for t > 0 without overflow at large t
double log_sinh(double t) {
    if (t < 0.3) return std::log(std::sinh(t));
    return t + std::log1p(-std::exp(-2.0 * t)) - ln_two;
}

double truncation_T(Complex z, const QuadratureSpec& spec) {
    if (spec.fixed_truncation > 0.0) return spec.fixed_truncation;
    const double tol = std::max(spec.abs_tol, spec.rel_tol);
    return std::max(35.0, (std::abs(std::log(tol)) + 2.0) / z.real());
}

// Shared engine for the three exponential-kernel integrals over (0, inf).
// x2_term(t) supplies the x-dependent part of the exponent.
template <typename X2Term>
EvalResult exponential_kernel_integral(Complex z, const QuadratureSpec& spec,
                                       const char* tag, X2Term&& x2_term,
                                       Complex outer_scale) {
    const Complex half_minus_z = 0.5 - z;
    auto integrand = [&](double t) -> Complex {
        const Complex e = half_minus_z * t + x2_term(t) - 0.5 * log_sinh(t);
        if (e.real() < -745.0) return Complex{};
        return std::exp(e);
    };

    EvalResult r;
    if (spec.scheme.value_or(quad::Scheme::double_exponential) ==
        quad::Scheme::double_exponential) {
        r = quad::exp_sinh(integrand, spec);
    } else {
        const double T = truncation_T(z, spec);
        auto mapped = [&](double u) -> Complex { return integrand(u * u) * 2.0 * u; };
        r = quad::gauss_kronrod_adaptive(mapped, 0.0, std::sqrt(T), spec);
        r.err_estimate += sqrt_two * std::exp(-z.real() * T) / z.real();
    }
    r.value *= outer_scale / sqrt_two;
    r.err_estimate *= std::abs(outer_scale) / sqrt_two;
    r.method = tag;
    return r;
}

EvalResult finite_integral_impl(Complex z, double x, const QuadratureSpec& spec,
                                const char* tag) {
    EvalResult r;
    if (spec.scheme.value_or(quad::Scheme::double_exponential) ==
        quad::Scheme::double_exponential) {
        r = quad::tanh_sinh(
            [&](double s, double dist0, double dist1) -> Complex {
                const Complex e = (z - 1.0) * std::log(dist1) - z * std::log1p(s) -
                                  0.5 * x * x * s - 0.5 * std::log(dist0);
                return std::exp(e);
            },
            0.0, 1.0, spec);
    } else {
        // lower half via s = sigma^2 (regular at 0)
        auto lower = quad::gauss_kronrod_adaptive(
            [&](double sigma) -> Complex {
                const double s = sigma * sigma;
                const Complex e =
                    (z - 1.0) * std::log1p(-s) - z * std::log1p(s) - 0.5 * x * x * s;
                return 2.0 * std::exp(e);
            },
            0.0, std::sqrt(0.5), spec);
        // upper half via 1 - s = e^{-u} (exponential decay in u)
        const double U = ln_two + (std::abs(std::log(std::max(spec.abs_tol, spec.rel_tol))) +
                                   2.0) / z.real();
        auto upper = quad::gauss_kronrod_adaptive(
            [&](double u) -> Complex {
                const double one_minus_s = std::exp(-u);
                const double s = 1.0 - one_minus_s;
                const Complex e = -z * u - z * std::log(2.0 - one_minus_s) -
                                  0.5 * std::log(s) - 0.5 * x * x * s;
                return std::exp(e);
            },
            ln_two, U, spec);
        r.value = lower.value + upper.value;
        r.err_estimate = lower.err_estimate + upper.err_estimate +
                         sqrt_two * std::pow(2.0, -z.real()) *
                             std::exp(-z.real() * U) / z.real();
        r.work = lower.work + upper.work;
    }
    r.method = tag;
    return r;
}

EvalResult shifted_integral_impl(Complex z, double x, const QuadratureSpec& spec,
                                 const char* tag) {
    auto integrand = [&](double r) -> Complex {
        const Complex e = (z - 1.0) * std::log(r) - z * std::log(2.0 + r) -
                          0.5 * x * x * r - 0.5 * std::log1p(r);
        if (e.real() < -745.0) return Complex{};
        return std::exp(e);
    };
    EvalResult out;
    if (x != 0.0 && spec.scheme.value_or(quad::Scheme::double_exponential) ==
                        quad::Scheme::gauss_kronrod) {
        const double tol = std::max(spec.abs_tol, spec.rel_tol);
        const double R = 2.0 * (std::abs(std::log(tol)) + 2.0) / (x * x);
        auto mapped = [&](double v) -> Complex { return integrand(v * v) * 2.0 * v; };
        out = quad::gauss_kronrod_adaptive(mapped, 0.0, std::sqrt(R), spec);
        out.err_estimate += 2.0 * std::exp(-0.5 * x * x * R) / (x * x);
    } else {
        out = quad::exp_sinh(integrand, spec);
    }
    const double scale = std::exp(-0.5 * x * x);
    out.value *= scale;
    out.err_estimate *= scale;
    out.method = tag;
    return out;
}

}  // namespace

EvalResult product_via_tanh_integral(HalfPlaneParameter z, double x,
                                     const QuadratureSpec& spec) {
    const double xsq_half = 0.5 * x * x;
    return exponential_kernel_integral(
        z.value, spec, "tanh_integral",
        [xsq_half](double t) -> Complex { return -xsq_half * std::tanh(0.5 * t); },
        Complex{1.0, 0.0});
}

EvalResult product_via_finite_integral(HalfPlaneParameter z, double x,
                                       const QuadratureSpec& spec) {
    return finite_integral_impl(z.value, x, spec, "finite_integral");
}

EvalResult square_via_coth_integral(HalfPlaneParameter z, double x,
                                    const QuadratureSpec& spec) {
    const double xsq_half = 0.5 * x * x;
    return exponential_kernel_integral(
        z.value, spec, "coth_integral",
        [xsq_half](double t) -> Complex { return -xsq_half / std::tanh(0.5 * t); },
        Complex{1.0, 0.0});
}

EvalResult square_via_shifted_integral(HalfPlaneParameter z, double x,
                                       const QuadratureSpec& spec) {
    return shifted_integral_impl(z.value, x, spec, "shifted_integral");
}

EvalResult combination_integrals(HalfPlaneParameter z, double x, CombinationSign sign,
                                 const QuadratureSpec& spec) {
    if (sign == CombinationSign::minus && x == 0.0) {
        return {Complex{0.0, 0.0}, 0.0, 1, "combination-"};
    }
    EvalResult finite = finite_integral_impl(z.value, x, spec, "finite_integral");
    EvalResult shifted = shifted_integral_impl(z.value, x, spec, "shifted_integral");
    EvalResult out;
    out.value = (sign == CombinationSign::plus) ? shifted.value + finite.value
                                                : shifted.value - finite.value;
    out.err_estimate = finite.err_estimate + shifted.err_estimate;
    out.work = finite.work + shifted.work;
    out.method = (sign == CombinationSign::plus) ? "combination+" : "combination-";
    return out;
}

EvalResult unified_integral(HalfPlaneParameter z, double x, CombinationSign sign,
                            const QuadratureSpec& spec) {
    const double xsq = x * x;
    const char* tag = (sign == CombinationSign::plus) ? "unified+" : "unified-";
    auto x2_term = [xsq, sign](double t) -> Complex {
        if (sign == CombinationSign::plus) {
            return xsq / (std::exp(t) + 1.0);
        }
        return -xsq / std::expm1(t);
    };
    return exponential_kernel_integral(z.value, spec, tag, x2_term,
                                       Complex{std::exp(-0.5 * xsq), 0.0});
}

EvalResult hankel_check_eq5(Complex nu, double x, const QuadratureSpec& spec,
                            double pcf_x_switch) {
    if (nu.real() >= 0.0) {
        throw std::domain_error("hankel_check_eq5: requires Re nu < 0");
    }
    if (std::abs(x) > 4.0) {
        throw std::domain_error("hankel_check_eq5: |x| > 4 outside validated range");
    }
    const double s_max = 12.0;
    std::vector<double> breaks{0.0};
    if (x != 0.0) {
        for (int k = 1;; ++k) {
            const double s = bessel_J0_zero(k) / std::abs(x);
            if (s >= s_max) break;
            breaks.push_back(s);
        }
    }
    breaks.push_back(s_max);

    auto integrand = [&](double s) -> Complex {
        const PCFValue d = pcf_D(nu, s, pcf_x_switch);
        return -2.0 * bessel_J0(x * s) * d.value * d.derivative;
    };
    EvalResult out;
    out.method = "hankel";
    QuadratureSpec panel_spec = spec;
    panel_spec.abs_tol = std::max(spec.abs_tol / breaks.size(), 1e-15);
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        auto panel = quad::gauss_kronrod_adaptive(integrand, breaks[i], breaks[i + 1],
                                                  panel_spec);
        out.value += panel.value;
        out.err_estimate += panel.err_estimate;
        out.work += panel.work;
    }
    out.err_estimate += 1e-15;  // e^{-s_max^2/2} truncation remainder
    return out;
}

AppendixPair appendix_pair(double a, double p, const QuadratureSpec& spec) {
    if (!(a > 0.0) || !(p > 0.0)) {
        throw std::domain_error("appendix_pair: requires a > 0 and p > 0");
    }
    AppendixPair out{};
    auto finite_side = quad::tanh_sinh(
        [&](double xx, double dist0, double dist_a) -> Complex {
            return std::exp(-p * xx) / std::sqrt(dist0 * dist_a * (xx + a));
        },
        0.0, a, spec);
    out.lhs_a = finite_side.value.real();
    auto infinite_side = quad::exp_sinh(
        [&](double r) -> Complex {
            const double e = -p * r;
            if (e < -700.0) return Complex{};
            return std::exp(e) / std::sqrt((a + r) * r * (2.0 * a + r));
        },
        spec);
    out.lhs_b = std::exp(-p * a) * infinite_side.value.real();

    const auto ik = bessel_IK_quarter(0.5 * a * p);
    const double front = 0.5 * std::sqrt(pi * p);
    out.rhs_a = front * ik.k * (ik.i_plus + ik.i_minus);
    out.rhs_b = front * ik.k * (ik.i_minus - ik.i_plus);
    return out;
}

FourierPair fourier_pair(double b, double zp, const QuadratureSpec& spec) {
    if (!(b > 0.0) || !(zp > 0.0)) {
        throw std::domain_error("fourier_pair: requires b > 0 and zp > 0");
    }
    FourierPair out{};
    const double period = pi / b;

    auto sin_integrand = [&](double xx) -> Complex {
        return std::sin(b * xx) / std::sqrt(xx * (xx * xx + zp * zp));
    };
    auto sin_head = quad::tanh_sinh(
        [&](double xx, double dist0, double) -> Complex {
            return std::sin(b * xx) / std::sqrt(dist0 * (xx * xx + zp * zp));
        },
        0.0, period, spec);
    auto sin_tail = quad::oscillatory_sum(
        sin_integrand, [&](int k) { return period * (k + 1); }, 600, spec);
    out.sin_lhs = sin_head.value.real() + sin_tail.value.real();

    auto cos_integrand = [&](double xx) -> Complex {
        return std::cos(b * xx) / std::sqrt(xx * (xx * xx + zp * zp));
    };
    auto cos_head = quad::tanh_sinh(
        [&](double xx, double dist0, double) -> Complex {
            return std::cos(b * xx) / std::sqrt(dist0 * (xx * xx + zp * zp));
        },
        0.0, 0.5 * period, spec);
    auto cos_tail = quad::oscillatory_sum(
        cos_integrand, [&](int k) { return period * (k + 0.5); }, 600, spec);
    out.cos_lhs = cos_head.value.real() + cos_tail.value.real();

    const auto ik = bessel_IK_quarter(0.5 * b * zp);
    const double front = std::sqrt(0.5 * pi * b);
    out.sin_rhs = front * ik.k * ik.i_plus;
    out.cos_rhs = front * ik.k * ik.i_minus;
    return out;
}

EvalResult oracle_product(HalfPlaneParameter z, double x, double pcf_x_switch) {
    const PCFValue plus = pcf_D(-z.value, x, pcf_x_switch);
    const PCFValue minus = pcf_D(-z.value, -x, pcf_x_switch);
    const Complex v = gamma(z.value) * plus.value * minus.value;
    const double err = (plus.cond + minus.cond) * 2e-15 * std::abs(v);
    return {ensure_finite(v, "oracle_product"), err, 2, "oracle_direct"};
}

EvalResult oracle_square(HalfPlaneParameter z, double x, double pcf_x_switch) {
    const PCFValue d = pcf_D(-z.value, x, pcf_x_switch);
    const Complex v = gamma(z.value) * d.value * d.value;
    const double err = d.cond * 4e-15 * std::abs(v);
    return {ensure_finite(v, "oracle_square"), err, 1, "oracle_direct"};
}

}  // namespace cylprod
