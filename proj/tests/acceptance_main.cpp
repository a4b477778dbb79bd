// Acceptance gate: one line per criterion, exit 0 only if every line passes.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cylprod/bessel.hpp"
#include "cylprod/gamma.hpp"
#include "cylprod/hermite.hpp"
#include "cylprod/landau.hpp"
#include "cylprod/numeric.hpp"
#include "cylprod/pcf.hpp"
#include "cylprod/product_integrals.hpp"
#include "cylprod/product_series.hpp"

using namespace cylprod;

namespace {

struct Outcome {
    bool ok = true;
    double worst = 0.0;
    std::string note;

    void fold(double dev, double allowed, const std::string& where) {
        if (dev > worst) worst = dev;
        if (dev > allowed && ok) {
            ok = false;
            note = where + " deviation " + format_double(dev) + " > " +
                   format_double(allowed);
        }
    }
};

const std::vector<Complex>& z_grid() {
    static const std::vector<Complex> zs = {{0.25, 0}, {0.5, 0}, {1, 0},
                                            {2.5, 0},  {5, 0},   {1, 2}};
    return zs;
}

const std::vector<double>& x_grid() {
    static const std::vector<double> xs = {0.0, 0.5, -0.5, 1.0, -1.0, 2.0, -2.0, 3.0, -3.0};
    return xs;
}

double rel(Complex a, Complex b) { return rel_deviation(a, b); }

std::string at(Complex z, double x) {
    return "z=" + format_double(z.real()) +
           (z.imag() != 0.0 ? "+" + format_double(z.imag()) + "i" : "") +
           " x=" + format_double(x);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome a1_oracle_grid() {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    for (const Complex& zc : z_grid()) {
        for (double x : x_grid()) {
            const HalfPlaneParameter z{zc};
            const Complex lhs = product_via_tanh_integral(z, x, {}).value;
            const Complex rhs =
                gamma(zc) * pcf_D_value(-zc, x) * pcf_D_value(-zc, -x);
            out.fold(rel(lhs, rhs), 1e-8, at(zc, x));
        }
    }
    const double dt = seconds_since(t0);
    if (dt >= 10.0) {
        out.ok = false;
        out.note = "runtime " + format_double(dt) + "s exceeds 10s";
    }
    return out;
}

Outcome a2_representations() {
    Outcome out;
    for (const Complex& zc : z_grid()) {
        for (double x : x_grid()) {
            const HalfPlaneParameter z{zc};
            const Complex tanh_v = product_via_tanh_integral(z, x, {}).value;
            const Complex fin_v = product_via_finite_integral(z, x, {}).value;
            out.fold(rel(tanh_v, fin_v), 1e-10, "tanh/finite " + at(zc, x));
            const Complex up = unified_integral(z, x, CombinationSign::plus, {}).value;
            out.fold(rel(up, tanh_v), 1e-10, "unified+ " + at(zc, x));
            const Complex um = unified_integral(z, x, CombinationSign::minus, {}).value;
            const Complex coth_v = square_via_coth_integral(z, x, {}).value;
            out.fold(rel(um, coth_v), 1e-10, "unified- " + at(zc, x));
        }
    }
    return out;
}

Outcome a3_beta_identity() {
    Outcome out;
    for (const Complex& zc : z_grid()) {
        const Complex lhs = product_via_tanh_integral(HalfPlaneParameter{zc}, 0.0, {}).value;
        const Complex rhs = 0.5 * beta(0.5 * zc, Complex{0.5, 0});
        out.fold(rel(lhs, rhs), 1e-10, at(zc, 0.0));
    }
    return out;
}

Outcome a4_bessel_half() {
    Outcome out;
    for (double x : {0.5, 1.0, 2.0, 3.0}) {
        const Complex lhs =
            product_via_finite_integral(HalfPlaneParameter{Complex{0.5, 0}}, x, {}).value;
        const auto ik = bessel_IK_quarter(0.25 * x * x);
        const double rhs = sqrt_pi * x * std::pow(2.0, -1.5) * ik.k * (ik.i_plus + ik.i_minus);
        out.fold(rel(lhs, Complex{rhs, 0}), 1e-8, "x=" + format_double(x));
    }
    return out;
}

Outcome a5_erfc() {
    Outcome out;
    for (double x = -3.0; x <= 3.0 + 1e-9; x += 0.5) {
        const Complex lhs =
            product_via_tanh_integral(HalfPlaneParameter{Complex{1, 0}}, x, {}).value;
        const double rhs = 0.5 * pi * std::exp(0.5 * x * x) * std::erfc(x / sqrt_two) *
                           std::erfc(-x / sqrt_two);
        out.fold(rel(lhs, Complex{rhs, 0}), 1e-9, "x=" + format_double(x));
    }
    return out;
}

Outcome a6_series() {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    SeriesSpec spec;
    spec.target_tol = 3e-6;
    spec.max_terms = 120000000;
    for (double zr : {0.25, 1.0, 5.0}) {
        for (double x : x_grid()) {
            const HalfPlaneParameter z{Complex{zr, 0}};
            const Complex series = product_via_hermite_series(z, x, spec).value;
            const Complex oracle = oracle_product(z, x).value;
            out.fold(rel(series, oracle), 1e-5, "product series z=" + format_double(zr) +
                                                    " x=" + format_double(x));
            const Complex alt = square_via_alternating_series(z, x, spec).value;
            const Complex coth_v = square_via_coth_integral(z, x, {}).value;
            out.fold(rel(alt, coth_v), 1e-5, "alternating z=" + format_double(zr) +
                                                 " x=" + format_double(x));
        }
    }
    const double dt = seconds_since(t0);
    if (dt >= 60.0) {
        out.ok = false;
        out.note = "runtime " + format_double(dt) + "s exceeds 60s";
    }
    return out;
}

Outcome a7_square_mesh() {
    Outcome out;
    for (const Complex& zc : z_grid()) {
        for (double x : x_grid()) {
            const HalfPlaneParameter z{zc};
            const Complex coth_v = square_via_coth_integral(z, x, {}).value;
            const Complex shift_v = square_via_shifted_integral(z, x, {}).value;
            out.fold(rel(coth_v, shift_v), 1e-10, "coth/shifted " + at(zc, x));
            const Complex p = product_via_tanh_integral(z, x, {}).value;
            const Complex plus = combination_integrals(z, x, CombinationSign::plus, {}).value;
            const Complex minus =
                combination_integrals(z, x, CombinationSign::minus, {}).value;
            const Complex p_rec = 0.5 * (plus - minus);
            const Complex q_rec = 0.5 * (plus + minus);
            out.fold(rel(p_rec, p), 1e-9, "recombined product " + at(zc, x));
            out.fold(rel(q_rec, coth_v), 1e-9, "recombined square " + at(zc, x));
        }
    }
    return out;
}

Outcome a8_hankel() {
    Outcome out;
    for (double nu : {-0.5, -1.0, -1.7}) {
        for (double x : {0.5, 1.0, 2.0}) {
            const Complex lhs = hankel_check_eq5(Complex{nu, 0}, x, {}).value;
            const Complex rhs = pcf_D_value(Complex{nu, 0}, x) * pcf_D_value(Complex{nu, 0}, -x);
            out.fold(rel(lhs, rhs), 1e-6,
                     "nu=" + format_double(nu) + " x=" + format_double(x));
        }
    }
    return out;
}

Outcome a9_asymptotic() {
    Outcome out;
    const double x = 1.0;
    double prev = 1.0;
    int idx = 0;
    for (double zr : {10.0, 50.0, 250.0}) {
        const Complex exact =
            product_via_tanh_integral(HalfPlaneParameter{Complex{zr, 0}}, x, {}).value;
        const double approx = std::sqrt(2.0 * pi / (x * x + 4.0 * zr - 2.0));
        const double err = std::abs(exact.real() - approx) / std::abs(exact.real());
        if (err >= prev) {
            out.ok = false;
            out.note = "error not decreasing at z=" + format_double(zr);
        }
        if (zr == 50.0 && err > 0.05) {
            out.ok = false;
            out.note = "z=50 error " + format_double(err) + " > 5%";
        }
        out.worst = err;
        prev = err;
        ++idx;
    }
    (void)idx;
    return out;
}

Outcome a10_green_triangle() {
    Outcome out;
    const LandauParams cases[2] = {{0.3, 0.7}, {1.0, 1.0}};
    for (const LandauParams& params : cases) {
        for (double x : {0.0, 0.5, -0.5, 1.5, -1.5}) {
            const Complex closed = j11_closed(params, x, {});
            const Complex ratio = j11_ratio(params, x);
            SeriesSpec sp;
            sp.target_tol = 1e-7;
            sp.max_terms = 2000000;
            const SeriesResult series = j11_series(params, x, sp);
            const double scale = std::abs(closed);
            const double allowed = std::max(1e-6, 3.0 * series.tail_estimate / scale);
            const double dev = std::max({rel(closed, ratio), rel(closed, series.value),
                                         rel(ratio, series.value)});
            out.fold(dev, allowed,
                     "triangle omega=" + format_double(params.omega) +
                         " x=" + format_double(x));
        }

        const double L = std::sqrt(2.0 * 3 + params.delta * params.delta) + 4.0;
        auto make_grid = [&](double h) {
            const long n = static_cast<long>(std::ceil(L / h));
            std::vector<double> g;
            for (long k = -n; k <= n; ++k) g.push_back(k * h);
            return g;
        };
        const auto grid1 = make_grid(0.01);
        const auto grid2 = make_grid(0.005);
        const auto pairs1 = eigen_system(params, 3, grid1);
        const auto pairs2 = eigen_system(params, 3, grid2);
        for (std::size_t k : {std::size_t{0}, pairs1.size() - 2}) {
            const double r1 = eigen_residual(pairs1[k], params, grid1);
            const double r2 = eigen_residual(pairs2[k], params, grid2);
            const double ratio_h = r1 / r2;
            if (ratio_h < 3.5 || ratio_h > 4.5) {
                out.ok = false;
                out.note = "h-halving ratio " + format_double(ratio_h) + " outside [3.5,4.5]";
            }
        }
    }
    for (double x : {-1.0, 0.0, 1.2}) {
        const double res = g0_equation_residual(LandauParams{0.3, 0.7}, x, 1e-3);
        out.fold(res, 1e-5, "ode residual x=" + format_double(x));
    }
    return out;
}

Outcome a11_hermite_pair() {
    Outcome out;
    for (double lambda : {-0.5, -1.3}) {
        const Complex lc{lambda, 0};
        for (double x : {0.0, 0.7, 1.4}) {
            const auto hg = hermite_HG(lc, x);
            const Complex lhs = std::exp(-x * x) * (hg.h * hg.h + hg.g * hg.g);
            const Complex rhs = hermite_HG_sum_integral(lc, x, {});
            out.fold(rel(lhs, rhs), 1e-8,
                     "sum integral lambda=" + format_double(lambda) + " x=" + format_double(x));

            // connection to the parabolic-cylinder pair at argument x*sqrt(2)
            const double y = x * sqrt_two;
            const Complex pow_half = std::pow(Complex{2, 0}, 0.5 * lc);
            const Complex d_pos = pcf_D_value(lc, y);
            const Complex d_neg = pcf_D_value(lc, -y);
            const Complex h_want = pow_half * d_pos;
            const Complex h_got = std::exp(-0.5 * x * x) * hg.h;
            out.fold(rel(h_got, h_want), 1e-8,
                     "H relation lambda=" + format_double(lambda) + " x=" + format_double(x));
            const double sp = std::sin(pi * lambda);
            const double cp = std::cos(pi * lambda);
            const Complex g_want = pow_half / sp * (cp * d_pos - d_neg);
            const Complex g_got = std::exp(-0.5 * x * x) * hg.g;
            out.fold(rel(g_got, g_want), 1e-8,
                     "G relation lambda=" + format_double(lambda) + " x=" + format_double(x));
        }
    }
    return out;
}

Outcome a12_appendix() {
    Outcome out;
    const AppendixPair ap = appendix_pair(1.0, 2.0, {});
    out.fold(std::abs(ap.lhs_a - ap.rhs_a) / std::abs(ap.rhs_a), 1e-7, "finite side");
    out.fold(std::abs(ap.lhs_b - ap.rhs_b) / std::abs(ap.rhs_b), 1e-7, "infinite side");
    const FourierPair fp = fourier_pair(1.0, 1.0, {});
    out.fold(std::abs(fp.sin_lhs - fp.sin_rhs) / std::abs(fp.sin_rhs), 1e-7, "sine side");
    out.fold(std::abs(fp.cos_lhs - fp.cos_rhs) / std::abs(fp.cos_rhs), 1e-7, "cosine side");
    return out;
}

}  // namespace

int main() {
    struct Entry {
        const char* id;
        const char* label;
        std::function<Outcome()> run;
    };
    const std::vector<Entry> entries = {
        {"A1", "integral vs direct oracle on the default grid", a1_oracle_grid},
        {"A2", "representation equalities (tanh/finite/unified)", a2_representations},
        {"A3", "x=0 beta closed form", a3_beta_identity},
        {"A4", "z=1/2 Bessel closed form", a4_bessel_half},
        {"A5", "z=1 erfc closed form", a5_erfc},
        {"A6", "series paths vs integral oracles", a6_series},
        {"A7", "square and combination mesh", a7_square_mesh},
        {"A8", "Hankel-transform identity", a8_hankel},
        {"A9", "large-parameter asymptotic trend", a9_asymptotic},
        {"A10", "solution-matrix equivalence triangle", a10_green_triangle},
        {"A11", "Hermite pair sum and connection relations", a11_hermite_pair},
        {"A12", "Laplace and Fourier Bessel pairs", a12_appendix},
    };

    bool all_ok = true;
    for (const Entry& e : entries) {
        Outcome out;
        try {
            out = e.run();
        } catch (const std::exception& ex) {
            out.ok = false;
            out.note = std::string("exception: ") + ex.what();
        }
        if (out.ok) {
            std::printf("%s %s: pass (max dev %s)\n", e.id, e.label,
                        format_double(out.worst).c_str());
        } else {
            all_ok = false;
            std::printf("%s %s: FAIL (%s)\n", e.id, e.label, out.note.c_str());
        }
        std::fflush(stdout);
    }
    return all_ok ? 0 : 1;
}
