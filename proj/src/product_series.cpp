#include "cylprod/product_series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "cylprod/bessel.hpp"

namespace cylprod {

void SeriesSpec::validate() const {
    if (max_terms < 8) throw std::domain_error("SeriesSpec: max_terms < 8");
    if (!(target_tol > 0.0)) throw std::domain_error("SeriesSpec: target_tol <= 0");
}

namespace {

constexpr long window_size = 512;
constexpr int averaging_passes = 12;
constexpr double quarter_root_pi = 0.751125544464942482;  // pi^{-1/4}

// Continuum tail of sum_{n>N} psi_n(xs)^2/(n+z), midpoint-corrected.
Complex tail_monotone(Complex z, double xs, double n_last) {
    const double t0 = n_last + 0.5;
    const double u0 = std::sqrt(2.0 * t0 + 1.0 - xs * xs);
    const Complex c = xs * xs + 2.0 * z - 1.0;
    if (std::abs(c) < 1e-8) {
        return (2.0 / sqrt_pi) * (1.0 - c / (3.0 * u0 * u0)) / u0;
    }
    const Complex rc = std::sqrt(c);
    return (2.0 / sqrt_pi) * std::atan(rc / u0) / rc;
}

// Continuum tail of sum_{n>N} (-1)^n psi_n(xs)^2/(n+z): oscillatory integrals
// int_a^inf cos(alpha v)/v^{2,4} dv with a = sqrt(2N+2), alpha = 2 xs.
Complex tail_alternating(Complex z, double xs, double n_last) {
    const double t0 = n_last + 0.5;
    const double v0 = std::sqrt(2.0 * t0 + 1.0);
    const double alpha = 2.0 * xs;
    const double av = alpha * v0;
    const double i2 = std::cos(av) / v0 - alpha * (0.5 * pi - sin_integral(av));
    const double i4 = std::cos(av) / (3.0 * v0 * v0 * v0) -
                      (alpha / 3.0) * (std::sin(av) / (2.0 * v0 * v0) + 0.5 * alpha * i2);
    return (2.0 / sqrt_pi) * (i2 + (0.5 * xs * xs + 1.0 - 2.0 * z) * i4);
}

struct CheckpointOutcome {
    Complex value;
    double est = 0.0;
    bool used_averaging = false;
};

// window holds w_i ordered oldest..newest; shrinks by one per averaging pass.
CheckpointOutcome average_window(std::vector<Complex> w) {
    CheckpointOutcome out;
    Complex prev = w.back();
    int passes = 0;
    while (passes < averaging_passes && w.size() > 2) {
        for (std::size_t i = 0; i + 1 < w.size(); ++i) w[i] = 0.5 * (w[i] + w[i + 1]);
        w.pop_back();
        ++passes;
        if (passes < averaging_passes && w.size() > 2) prev = w.back();
    }
    out.value = w.back();
    out.est = std::abs(out.value - prev);
    out.used_averaging = passes > 0;
    return out;
}

SeriesResult run_series(Complex z, double x, const SeriesSpec& spec, bool alternating,
                        Complex c0, Complex c1) {
    spec.validate();
    const double xs = std::abs(x) / sqrt_two;
    const double xsq = xs * xs;

    auto tail_at = [&](double n) -> Complex {
        if (alternating) return c0 * tail_alternating(z, xs, n);
        Complex t = c0 * tail_monotone(z, xs, n);
        if (c1 != Complex{}) t += c1 * tail_monotone(z + 1.0, xs, n);
        return t;
    };
    auto systematic_at = [&](double n, double tail_mag) -> double {
        if (alternating) {
            return 0.5 * std::pow(xs, 1.5) / (n * std::sqrt(n)) +
                   tail_mag * (xsq + 2.0 * std::abs(z) + 1.0) / (2.0 * n);
        }
        return tail_mag * (xsq + 2.0 * std::abs(z) + 3.0) / (4.0 * n);
    };

    const bool add_tail = spec.tail_strategy == TailStrategy::semiclassical_tail ||
                          spec.tail_strategy == TailStrategy::both;
    const bool do_average = spec.tail_strategy == TailStrategy::averaging_acceleration ||
                            spec.tail_strategy == TailStrategy::both;

    auto coeff = [&](long n) -> Complex {
        const Complex base = c0 / (z + static_cast<double>(n));
        if (c1 == Complex{}) return base;
        return base + c1 / (z + static_cast<double>(n + 1));
    };

    std::vector<Complex> ring(window_size);
    double psi_prev = 0.0;
    double psi = quarter_root_pi * std::exp(-0.5 * xsq);
    Complex partial = sqrt_pi * psi * psi * coeff(0);
    ring[0] = partial;
    double sign = 1.0;

    SeriesResult best;
    long next_checkpoint = std::min<long>(1024, spec.max_terms - 1);
    for (long n = 1; n < spec.max_terms; ++n) {
        const double next = xs * std::sqrt(2.0 / n) * psi -
                            std::sqrt((n - 1.0) / n) * psi_prev;
        psi_prev = psi;
        psi = next;
        if (alternating) sign = -sign;
        partial += sign * sqrt_pi * psi * psi * coeff(n);
        ring[n % window_size] = partial;

        if (n == next_checkpoint || n == spec.max_terms - 1) {
            const long have = std::min<long>(n + 1, window_size);
            std::vector<Complex> w(have);
            for (long i = 0; i < have; ++i) {
                const long idx = n - have + 1 + i;
                w[i] = ring[idx % window_size];
                if (add_tail) w[i] += tail_at(static_cast<double>(idx));
            }
            const Complex tail_now = tail_at(static_cast<double>(n));
            const double tail_mag = std::abs(tail_now);

            Complex value;
            double est;
            bool accelerated = false;
            if (do_average) {
                auto avg = average_window(std::move(w));
                value = avg.value;
                accelerated = avg.used_averaging;
                est = avg.est + (add_tail ? systematic_at(n, tail_mag) : tail_mag);
            } else if (add_tail) {
                value = partial + tail_now;
                double osc = 0.0;
                for (long i = std::max<long>(0, have - 8); i < have; ++i) {
                    osc = std::max(osc, std::abs(w[i] - value));
                }
                est = osc + systematic_at(n, tail_mag);
            } else {
                value = partial;
                est = tail_mag;
            }
            est += 5e-15 * std::abs(value);

            best.value = value;
            best.terms_used = n + 1;
            best.tail_estimate = est;
            best.accelerated = accelerated;
            if (est <= spec.target_tol * std::abs(value)) return best;
            next_checkpoint = std::min(2 * next_checkpoint, spec.max_terms - 1);
        }
    }
    return best;
}

}  // namespace

SeriesResult product_via_hermite_series(HalfPlaneParameter z, double x,
                                        const SeriesSpec& spec) {
    return run_series(z.value, x, spec, false, Complex{1.0, 0.0}, Complex{});
}

SeriesResult square_via_alternating_series(HalfPlaneParameter z, double x,
                                           const SeriesSpec& spec) {
    return run_series(z.value, x, spec, true, Complex{1.0, 0.0}, Complex{});
}

SeriesResult hermite_pair_series(HalfPlaneParameter z, double x, Complex c0, Complex c1,
                                 const SeriesSpec& spec) {
    return run_series(z.value, x, spec, false, c0, c1);
}

}  // namespace cylprod
