#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "cylprod/errors.hpp"
#include "cylprod/numeric.hpp"

namespace cylprod::quad {

enum class Scheme {
    gauss_kronrod,
    double_exponential,
};

struct QuadratureSpec {
    double rel_tol = 1e-11;
    double abs_tol = 1e-13;
    int max_subdivisions = 400;  // adaptive Gauss-Kronrod interval budget
    int max_levels = 10;         // double-exponential refinement budget
    std::optional<Scheme> scheme;  // unset = per-operation default
    // Semi-infinite Gauss-Kronrod paths truncate where the analytic tail
    // bound drops below abs_tol; a positive value here forces the cut there.
    double fixed_truncation = 0.0;

    void validate() const {
        if (rel_tol < 1e-14) throw std::domain_error("quadrature: rel_tol below 1e-14");
        if (abs_tol <= 0.0) throw std::domain_error("quadrature: abs_tol must be positive");
        if (max_subdivisions < 1) throw std::domain_error("quadrature: max_subdivisions < 1");
        if (max_levels < 2) throw std::domain_error("quadrature: max_levels < 2");
    }
};

struct EvalResult {
    Complex value{};
    double err_estimate = 0.0;
    long work = 0;  // integrand evaluations (or series terms)
    std::string method;
};

namespace detail {

// 15-point Kronrod extension of 7-point Gauss, positive half of the rule.
inline constexpr std::array<double, 8> k15_nodes = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0,
};
inline constexpr std::array<double, 8> k15_weights = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728,
};
inline constexpr std::array<double, 4> g7_weights = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469,
};

template <typename F>
void gk15_panel(F&& f, double a, double b, Complex& integral, double& err, long& work) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    Complex fk = k15_weights[7] * f(mid);
    Complex fg = g7_weights[3] * f(mid);
    work += 1;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * k15_nodes[i];
        const Complex v = f(mid - dx) + f(mid + dx);
        work += 2;
        fk += k15_weights[i] * v;
        if (i % 2 == 1) fg += g7_weights[i / 2] * v;
    }
    integral = fk * half;
    err = std::abs((fk - fg) * half);
}

}  // namespace detail

// Adaptive Gauss-Kronrod on a finite interval. Splits the interval with the
// largest error estimate until the global target is met.
template <typename F>
EvalResult gauss_kronrod_adaptive(F&& f, double a, double b, const QuadratureSpec& spec) {
    spec.validate();
    struct Piece {
        double a, b, err;
        Complex val;
        bool operator<(const Piece& o) const { return err < o.err; }
    };
    long work = 0;
    std::priority_queue<Piece> pieces;
    Complex total{};
    double total_err = 0.0;
    {
        Piece p{a, b, 0.0, {}};
        detail::gk15_panel(f, a, b, p.val, p.err, work);
        total = p.val;
        total_err = p.err;
        pieces.push(p);
    }
    int splits = 0;
    while (total_err > std::max(spec.abs_tol, spec.rel_tol * std::abs(total))) {
        if (splits >= spec.max_subdivisions) {
            throw tolerance_error("gauss_kronrod_adaptive: subdivision budget exhausted",
                                  total, total_err);
        }
        Piece worst = pieces.top();
        pieces.pop();
        total -= worst.val;
        total_err -= worst.err;
        const double mid = 0.5 * (worst.a + worst.b);
        for (auto [lo, hi] : {std::pair{worst.a, mid}, std::pair{mid, worst.b}}) {
            Piece p{lo, hi, 0.0, {}};
            detail::gk15_panel(f, lo, hi, p.val, p.err, work);
            total += p.val;
            total_err += p.err;
            pieces.push(p);
        }
        ++splits;
    }
    return {total, std::max(total_err, 4e-16 * std::abs(total)), work, "gauss_kronrod"};
}

// tanh-sinh rule on (a, b) for integrands with integrable endpoint
// singularities. The integrand receives the abscissa plus its exact distances
// to both endpoints so that factors like (b-x)^(z-1) can be computed without
// cancellation.
template <typename F>
EvalResult tanh_sinh(F&& f, double a, double b, const QuadratureSpec& spec) {
    spec.validate();
    const double half = 0.5 * (b - a);
    long work = 0;

    auto eval_node = [&](double u) -> Complex {
        const double w = 0.5 * pi * std::sinh(u);
        if (std::abs(2.0 * w) > 700.0) return Complex{};
        const double db = 2.0 * half / (std::exp(2.0 * w) + 1.0);   // distance to b
        const double da = 2.0 * half / (std::exp(-2.0 * w) + 1.0);  // distance to a
        if (db <= 0.0 || da <= 0.0) return Complex{};
        const double x = (w >= 0.0) ? (b - db) : (a + da);
        const double cw = 0.5 * pi * std::cosh(u);
        const double ch = std::cosh(w);
        const double weight = half * cw / (ch * ch);
        if (weight == 0.0 || !std::isfinite(weight)) return Complex{};
        ++work;
        return f(x, da, db) * weight;
    };

    const double u_max = 6.0;
    double h = 0.5;
    Complex total = eval_node(0.0);
    // outward sweep; stop a side once contributions stay negligible
    auto sweep = [&](double step, double offset, Complex& acc) {
        int quiet = 0;
        for (double u = offset; u <= u_max; u += step) {
            for (double su : {u, -u}) {
                const Complex c = eval_node(su);
                acc += c;
                if (std::abs(c) < 1e-18 * (std::abs(acc) + 1e-300)) {
                    ++quiet;
                } else {
                    quiet = 0;
                }
            }
            if (quiet >= 6) break;
        }
    };
    sweep(h, h, total);
    Complex integral = total * h;
    double err = std::abs(integral);

    for (int level = 1; level <= spec.max_levels; ++level) {
        Complex mids{};
        sweep(h, 0.5 * h, mids);
        const Complex refined = 0.5 * integral + mids * (0.5 * h);
        err = std::abs(refined - integral);
        integral = refined;
        h *= 0.5;
        if (err <= std::max(spec.abs_tol, spec.rel_tol * std::abs(integral)) && level >= 3) {
            return {integral, std::max(err, 4e-16 * std::abs(integral)), work, "tanh_sinh"};
        }
    }
    throw tolerance_error("tanh_sinh: level budget exhausted", integral, err);
}

// exp-sinh rule on (0, inf) for integrands with an algebraic singularity at 0
// and exponential or algebraic decay at infinity.
template <typename F>
EvalResult exp_sinh(F&& f, const QuadratureSpec& spec) {
    spec.validate();
    long work = 0;

    auto eval_node = [&](double u) -> Complex {
        const double s = 0.5 * pi * std::sinh(u);
        if (std::abs(s) > 700.0) return Complex{};
        const double t = std::exp(s);
        const double weight = t * 0.5 * pi * std::cosh(u);
        if (!std::isfinite(weight) || weight == 0.0) return Complex{};
        ++work;
        return f(t) * weight;
    };

    const double u_max = 6.5;
    double h = 0.5;
    Complex total = eval_node(0.0);
    auto sweep = [&](double step, double offset, Complex& acc) {
        for (double sign : {1.0, -1.0}) {
            int quiet = 0;
            for (double u = offset; u <= u_max; u += step) {
                const Complex c = eval_node(sign * u);
                acc += c;
                if (std::abs(c) < 1e-18 * (std::abs(acc) + 1e-300)) {
                    ++quiet;
                    if (quiet >= 6) break;
                } else {
                    quiet = 0;
                }
            }
        }
    };
    sweep(h, h, total);
    Complex integral = total * h;
    double err = std::abs(integral);

    for (int level = 1; level <= spec.max_levels; ++level) {
        Complex mids{};
        sweep(h, 0.5 * h, mids);
        const Complex refined = 0.5 * integral + mids * (0.5 * h);
        err = std::abs(refined - integral);
        integral = refined;
        h *= 0.5;
        if (err <= std::max(spec.abs_tol, spec.rel_tol * std::abs(integral)) && level >= 3) {
            return {integral, std::max(err, 4e-16 * std::abs(integral)), work, "exp_sinh"};
        }
    }
    throw tolerance_error("exp_sinh: level budget exhausted", integral, err);
}

// Oscillatory integral on (break_0, inf) summed panel-by-panel between sign
// changes; the alternating sequence of partial sums is accelerated by
// iterated pairwise averaging.
template <typename F, typename Breaks>
EvalResult oscillatory_sum(F&& f, Breaks&& break_at, int max_panels,
                           const QuadratureSpec& spec) {
    spec.validate();
    long work = 0;
    QuadratureSpec panel_spec = spec;
    panel_spec.max_subdivisions = 24;

    std::vector<Complex> partials;
    partials.reserve(max_panels);
    Complex running{};
    double panel_scale = 0.0;

    for (int k = 0; k < max_panels; ++k) {
        const double a = break_at(k);
        const double b = break_at(k + 1);
        EvalResult panel = gauss_kronrod_adaptive(f, a, b, panel_spec);
        work += panel.work;
        running += panel.value;
        panel_scale = std::max(panel_scale, std::abs(panel.value));
        partials.push_back(running);

        if (partials.size() >= 8) {
            std::vector<Complex> avg(partials.end() - std::min<std::size_t>(partials.size(), 40),
                                     partials.end());
            Complex prev_last = avg.back();
            double delta = 0.0;
            while (avg.size() > 2) {
                for (std::size_t i = 0; i + 1 < avg.size(); ++i) {
                    avg[i] = 0.5 * (avg[i] + avg[i + 1]);
                }
                avg.pop_back();
                delta = std::abs(avg.back() - prev_last);
                prev_last = avg.back();
            }
            const Complex value = avg.back();
            const double tail_bound = std::abs(running - value);
            const double err = delta + 4e-16 * panel_scale;
            if (err <= std::max(spec.abs_tol, spec.rel_tol * std::abs(value)) &&
                partials.size() >= 12) {
                // the averaging table gains roughly a factor 2 per pass; floor
                // the reported error at what ~20 effective passes leave behind
                return {value, std::max(err, tail_bound * 1e-6), work, "oscillatory_sum"};
            }
        }
    }
    throw tolerance_error("oscillatory_sum: panel budget exhausted",
                          partials.empty() ? Complex{} : partials.back(), 1.0);
}

}  // namespace cylprod::quad
