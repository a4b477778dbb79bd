#include "cylprod/hermite.hpp"

#include <cmath>
#include <stdexcept>

#include "cylprod/gamma.hpp"
#include "cylprod/kummer.hpp"

namespace cylprod {

double hermite_psi(int n, double x) {
    if (n < 0) throw std::domain_error("hermite_psi: requires n >= 0");
    double prev = 0.0;
    double cur = std::pow(pi, -0.25) * std::exp(-0.5 * x * x);
    for (int k = 0; k < n; ++k) {
        const double next =
            x * std::sqrt(2.0 / (k + 1.0)) * cur - std::sqrt(k / (k + 1.0)) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

std::vector<double> hermite_psi_batch(int n_max, double x) {
    if (n_max < 0) throw std::domain_error("hermite_psi_batch: requires n_max >= 0");
    std::vector<double> out(static_cast<std::size_t>(n_max) + 1);
    out[0] = std::pow(pi, -0.25) * std::exp(-0.5 * x * x);
    if (n_max == 0) return out;
    out[1] = x * sqrt_two * out[0];
    for (int k = 1; k < n_max; ++k) {
        out[k + 1] =
            x * std::sqrt(2.0 / (k + 1.0)) * out[k] - std::sqrt(k / (k + 1.0)) * out[k - 1];
    }
    return out;
}

Complex hermite_HG_sum_integral(Complex lambda, double x, const quad::QuadratureSpec& spec) {
    if (lambda.real() <= -2.0) {
        throw std::domain_error("hermite_HG_sum_integral: requires Re lambda > -2");
    }
    const double xsq = x * x;
    const Complex decay = 2.0 * lambda + 1.0;

    auto log_weight = [](double t) -> double {
        // -(1/2) log(cosh t sinh t), overflow-free
        if (t < 0.3) return -0.5 * (std::log(std::cosh(t)) + std::log(std::sinh(t)));
        const double ln2 = 0.693147180559945309;
        return -0.5 * ((t + std::log1p(std::exp(-2.0 * t)) - ln2) +
                       (t + std::log1p(-std::exp(-2.0 * t)) - ln2));
    };

    Complex integral;
    if (lambda.real() > -0.75) {
        auto r = quad::exp_sinh(
            [&](double t) -> Complex {
                const Complex e = -decay * t + xsq * std::tanh(t) + log_weight(t);
                if (e.real() < -745.0) return Complex{};
                return std::exp(e);
            },
            spec);
        integral = r.value;
    } else {
        const Complex head = 0.5 * beta(0.5 * (lambda + 1.0), Complex{0.5, 0.0});
        auto r = quad::exp_sinh(
            [&](double t) -> Complex {
                const double arg = -2.0 * xsq / (std::exp(2.0 * t) + 1.0);
                if (arg == 0.0) return Complex{};
                // fold the factor (e^arg - 1) into the exponent; it is negative
                const Complex e = -decay * t + log_weight(t) + std::log(-std::expm1(arg));
                if (e.real() < -745.0) return Complex{};
                return -std::exp(e);
            },
            spec);
        integral = std::exp(xsq) * (head + r.value);
    }
    const Complex front = std::pow(Complex{2.0, 0.0}, lambda + 1.0) / pi * gamma(lambda + 1.0);
    return ensure_finite(front * integral, "hermite_HG_sum_integral");
}

HermiteHG hermite_HG(Complex lambda, double x) {
    if (std::abs(lambda.imag()) < 1e-12 &&
        std::abs(lambda.real() - std::round(lambda.real())) < 1e-12) {
        throw std::domain_error("hermite_HG: tan/cot pole at integer lambda");
    }
    const Complex t1 =
        sqrt_pi * rgamma(0.5 * (1.0 - lambda)) * kummer_phi(-0.5 * lambda, 0.5, x * x);
    const Complex t2 = -2.0 * sqrt_pi * rgamma(-0.5 * lambda) * x *
                       kummer_phi(0.5 * (1.0 - lambda), 1.5, x * x);
    const Complex scale = std::pow(Complex{2.0, 0.0}, lambda);
    const Complex half_angle = 0.5 * pi * lambda;
    HermiteHG out;
    out.h = scale * (t1 + t2);
    out.g = scale * (-std::tan(half_angle) * t1 + t2 / std::tan(half_angle));
    return out;
}

}  // namespace cylprod
