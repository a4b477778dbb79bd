#pragma once

#include <vector>

#include "cylprod/numeric.hpp"
#include "cylprod/product_series.hpp"
#include "cylprod/quadrature.hpp"

namespace cylprod {

// Frequency/gap pair; the rescaled spectral parameter is lambda = (omega + i delta)/sqrt(2),
// so lambda_sq = |lambda|^2 = (omega^2 + delta^2)/2. The first-order system matrix M(x)
// keeps the unrescaled omega, delta.
struct LandauParams {
    double omega = 0.0;
    double delta = 0.0;

    Complex lambda() const { return Complex{omega, delta} / sqrt_two; }
    double lambda_sq() const { return 0.5 * (omega * omega + delta * delta); }
    void validate() const;
};

enum class BranchSign { ground, plus, minus };

struct EigenPair {
    int n = 0;
    BranchSign s = BranchSign::ground;
    double energy = 0.0;
    std::vector<Complex> upper;  // sampled on the construction grid
    std::vector<Complex> lower;
};

struct GreenMatrix {
    Complex g11, g12, g21, g22;
    Complex det() const { return g11 * g22 - g12 * g21; }
};

// Ground mode plus the +/- branch pairs for n = 1..n_max, sampled on grid.
// Grid must span the classical turning point of the highest mode plus margin.
std::vector<EigenPair> eigen_system(const LandauParams& params, int n_max,
                                    const std::vector<double>& grid);

// Max-norm of (H Psi - E Psi) with ladder operators discretized by centered
// differences; grid must be uniform with spacing <= 0.01.
double eigen_residual(const EigenPair& pair, const LandauParams& params,
                      const std::vector<double>& grid);

// 2x2 solution matrix assembled from parabolic-cylinder solutions at y = x*sqrt(2)
GreenMatrix build_G0(const LandauParams& params, double x);

// Max entry of i*dG0/dx - G0*M(x), centered differences with step h
double g0_equation_residual(const LandauParams& params, double x, double h = 1e-3);

// Diagonal response component, three independent routes:
Complex j11_ratio(const LandauParams& params, double x);
Complex j11_closed(const LandauParams& params, double x,
                   const quad::QuadratureSpec& spec = {});
SeriesResult j11_series(const LandauParams& params, double x, const SeriesSpec& spec = {});

}  // namespace cylprod
