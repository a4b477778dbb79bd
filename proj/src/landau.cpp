#include "cylprod/landau.hpp"

#include <cmath>
#include <stdexcept>

#include "cylprod/hermite.hpp"
#include "cylprod/pcf.hpp"
#include "cylprod/product_integrals.hpp"

namespace cylprod {

namespace {

constexpr Complex iu{0.0, 1.0};

struct WeberPair {
    Complex u_plus;   // order -(lambda_sq + 1)
    Complex u_minus;  // order -lambda_sq
};

WeberPair weber_at(double lambda_sq, double y) {
    return {pcf_D_value(Complex{-lambda_sq - 1.0, 0.0}, y),
            pcf_D_value(Complex{-lambda_sq, 0.0}, y)};
}

}  // namespace

void LandauParams::validate() const {
    if (!std::isfinite(omega) || !std::isfinite(delta)) {
        throw std::domain_error("LandauParams: omega, delta must be finite");
    }
    if (!(lambda_sq() > 0.0)) {
        throw std::domain_error("LandauParams: omega^2 + delta^2 must be positive");
    }
}

std::vector<EigenPair> eigen_system(const LandauParams& params, int n_max,
                                    const std::vector<double>& grid) {
    params.validate();
    if (n_max < 1) throw std::invalid_argument("eigen_system: n_max < 1");
    if (grid.size() < 2) throw std::invalid_argument("eigen_system: grid too short");
    const double need = std::sqrt(2.0 * n_max + params.delta * params.delta) + 4.0;
    if (grid.front() > -need || grid.back() < need) {
        throw std::domain_error("eigen_system: grid too small for n_max (turning point rule)");
    }

    const std::size_t m = grid.size();
    std::vector<EigenPair> out;
    out.reserve(static_cast<std::size_t>(2 * n_max + 1));

    EigenPair ground;
    ground.n = 0;
    ground.s = BranchSign::ground;
    ground.energy = -params.delta;
    ground.upper.assign(m, Complex{});
    ground.lower.resize(m);

    std::vector<std::vector<double>> psi(m);
    for (std::size_t i = 0; i < m; ++i) {
        psi[i] = hermite_psi_batch(n_max, grid[i]);
        ground.lower[i] = psi[i][0];
    }
    out.push_back(std::move(ground));

    for (int n = 1; n <= n_max; ++n) {
        const double e_n = std::sqrt(params.delta * params.delta + 2.0 * n);
        for (int s : {+1, -1}) {
            EigenPair p;
            p.n = n;
            p.s = (s > 0) ? BranchSign::plus : BranchSign::minus;
            p.energy = s * e_n;
            const double c_up = std::sqrt((e_n + s * params.delta) / (2.0 * e_n));
            const Complex c_low = -iu * static_cast<double>(s) *
                                  std::sqrt((e_n - s * params.delta) / (2.0 * e_n));
            p.upper.resize(m);
            p.lower.resize(m);
            for (std::size_t i = 0; i < m; ++i) {
                p.upper[i] = c_up * psi[i][n - 1];
                p.lower[i] = c_low * psi[i][n];
            }
            out.push_back(std::move(p));
        }
    }
    return out;
}

double eigen_residual(const EigenPair& pair, const LandauParams& params,
                      const std::vector<double>& grid) {
    params.validate();
    const std::size_t m = grid.size();
    if (m < 3 || pair.upper.size() != m || pair.lower.size() != m) {
        throw std::invalid_argument("eigen_residual: grid/spinor size mismatch");
    }
    const double h = grid[1] - grid[0];
    if (!(h > 0.0) || h > 0.01) {
        throw std::invalid_argument("eigen_residual: need uniform spacing in (0, 0.01]");
    }
    for (std::size_t i = 1; i + 1 < m; ++i) {
        if (std::abs((grid[i + 1] - grid[i]) - h) > 1e-12) {
            throw std::invalid_argument("eigen_residual: grid not uniform");
        }
    }

    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < m; ++i) {
        const Complex dup = (pair.upper[i + 1] - pair.upper[i - 1]) / (2.0 * h);
        const Complex dlow = (pair.lower[i + 1] - pair.lower[i - 1]) / (2.0 * h);
        const double x = grid[i];
        // H = [[delta, i(x + d/dx)], [-i(x - d/dx), -delta]]
        const Complex r1 = params.delta * pair.upper[i] + iu * (x * pair.lower[i] + dlow) -
                           pair.energy * pair.upper[i];
        const Complex r2 = -iu * (x * pair.upper[i] - dup) - params.delta * pair.lower[i] -
                           pair.energy * pair.lower[i];
        worst = std::max(worst, std::max(std::abs(r1), std::abs(r2)));
    }
    return worst;
}

GreenMatrix build_G0(const LandauParams& params, double x) {
    params.validate();
    const Complex lam_inv = 1.0 / params.lambda();
    const double w = params.lambda_sq();
    const double y = x * sqrt_two;
    const WeberPair right = weber_at(w, y);
    const WeberPair left = weber_at(w, -y);

    // displayed combinations: h1 ± f1 = U+(y) ∓ λ⁻¹U−(y),
    //                         ±i(f2 ∓ h2) = U+(−y) ∓ λ⁻¹U−(−y)
    const Complex sum1 = right.u_plus - lam_inv * right.u_minus;   // h1 + f1
    const Complex dif1 = right.u_plus + lam_inv * right.u_minus;   // h1 - f1
    const Complex h1 = 0.5 * (sum1 + dif1);
    const Complex f1 = 0.5 * (sum1 - dif1);
    const Complex sum2 = iu * (left.u_plus + lam_inv * left.u_minus);   // f2 + h2
    const Complex dif2 = -iu * (left.u_plus - lam_inv * left.u_minus);  // f2 - h2
    const Complex f2 = 0.5 * (sum2 + dif2);
    const Complex h2 = 0.5 * (sum2 - dif2);

    // G0 = sqrt2 * [[h1,f1],[h2,f2]] * u^{-1}, u^{-1} = (1/sqrt2)[[1,-i],[1,i]]
    GreenMatrix g;
    g.g11 = h1 + f1;
    g.g12 = -iu * h1 + iu * f1;
    g.g21 = h2 + f2;
    g.g22 = -iu * h2 + iu * f2;
    return g;
}

double g0_equation_residual(const LandauParams& params, double x, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("g0_equation_residual: h <= 0");
    const GreenMatrix gp = build_G0(params, x + h);
    const GreenMatrix gm = build_G0(params, x - h);
    const GreenMatrix g = build_G0(params, x);

    const Complex d11 = (gp.g11 - gm.g11) / (2.0 * h);
    const Complex d12 = (gp.g12 - gm.g12) / (2.0 * h);
    const Complex d21 = (gp.g21 - gm.g21) / (2.0 * h);
    const Complex d22 = (gp.g22 - gm.g22) / (2.0 * h);

    const Complex m11{0.0, params.omega};
    const Complex m12{x, params.delta};
    const Complex m21{-x, params.delta};
    const Complex m22{0.0, -params.omega};

    const Complex r11 = iu * d11 - (g.g11 * m11 + g.g12 * m21);
    const Complex r12 = iu * d12 - (g.g11 * m12 + g.g12 * m22);
    const Complex r21 = iu * d21 - (g.g21 * m11 + g.g22 * m21);
    const Complex r22 = iu * d22 - (g.g21 * m12 + g.g22 * m22);
    return std::max(std::max(std::abs(r11), std::abs(r12)),
                    std::max(std::abs(r21), std::abs(r22)));
}

Complex j11_ratio(const LandauParams& params, double x) {
    const GreenMatrix g = build_G0(params, x);
    const Complex num = g.g11 * g.g22 + g.g12 * g.g21;
    const Complex den = g.g11 * g.g22 - g.g12 * g.g21;
    const double scale = std::abs(g.g11 * g.g22) + std::abs(g.g12 * g.g21);
    if (std::abs(den) <= 1e-12 * scale) {
        throw std::range_error("j11_ratio: near-singular denominator");
    }
    return iu * pi * num / den;
}

Complex j11_closed(const LandauParams& params, double x, const quad::QuadratureSpec& spec) {
    params.validate();
    const double w = params.lambda_sq();
    const double y = x * sqrt_two;
    const Complex p_hi = product_via_tanh_integral(HalfPlaneParameter{w + 1.0}, y, spec).value;
    const Complex p_lo = product_via_tanh_integral(HalfPlaneParameter{w}, y, spec).value;
    return -iu * std::sqrt(0.5 * pi) *
           (params.lambda() * p_hi + std::conj(params.lambda()) * p_lo);
}

SeriesResult j11_series(const LandauParams& params, double x, const SeriesSpec& spec) {
    params.validate();
    const double w = params.lambda_sq();
    const Complex lam = params.lambda();
    SeriesResult r = hermite_pair_series(HalfPlaneParameter{Complex{w, 0.0}}, x * sqrt_two,
                                         std::conj(lam), lam, spec);
    const Complex front = -iu * std::sqrt(0.5 * pi);
    r.value *= front;
    r.tail_estimate *= std::abs(front);
    return r;
}

}  // namespace cylprod
