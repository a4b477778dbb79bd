#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"

#include "cylprod/hermite.hpp"
#include "cylprod/landau.hpp"
#include "cylprod/numeric.hpp"
#include "cylprod/product_series.hpp"

using namespace cylprod;

namespace {

double rel(Complex got, Complex want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

std::vector<double> uniform_grid(double L, double h) {
    const long n = static_cast<long>(std::ceil(L / h));
    std::vector<double> g;
    g.reserve(static_cast<std::size_t>(2 * n + 1));
    for (long k = -n; k <= n; ++k) g.push_back(k * h);
    return g;
}

Complex grid_inner(const std::vector<Complex>& au, const std::vector<Complex>& al,
                   const std::vector<Complex>& bu, const std::vector<Complex>& bl,
                   double h) {
    Complex s{};
    for (std::size_t i = 0; i < au.size(); ++i) {
        s += (std::conj(au[i]) * bu[i] + std::conj(al[i]) * bl[i]) * h;
    }
    return s;
}

}  // namespace

TEST_CASE("params validation") {
    CHECK_THROWS_AS(LandauParams{}.validate(), std::domain_error);
    LandauParams p{0.3, 0.7};
    CHECK_NOTHROW(p.validate());
    CHECK(p.lambda_sq() == doctest::Approx(0.29).epsilon(1e-15));
    CHECK(p.lambda() == Complex{0.3 / sqrt_two, 0.7 / sqrt_two});
}

TEST_CASE("spectrum satisfies E_n^2 - delta^2 = 2n") {
    const LandauParams params{0.4, 0.7};
    const auto grid = uniform_grid(std::sqrt(2.0 * 5 + 0.49) + 4.0, 0.01);
    const auto pairs = eigen_system(params, 5, grid);
    REQUIRE(pairs.size() == 11);
    CHECK(pairs[0].energy == doctest::Approx(-params.delta).epsilon(1e-14));
    for (const auto& p : pairs) {
        if (p.s == BranchSign::ground) continue;
        const double gap = p.energy * p.energy - params.delta * params.delta;
        CHECK(gap == doctest::Approx(2.0 * p.n).epsilon(1e-12));
        if (p.s == BranchSign::plus) CHECK(p.energy > 0);
        if (p.s == BranchSign::minus) CHECK(p.energy < 0);
    }
}

TEST_CASE("eigenvectors are orthonormal on the grid") {
    const LandauParams params{0.3, 0.7};
    const double h = 0.01;
    const auto grid = uniform_grid(std::sqrt(2.0 * 4 + 0.49) + 4.0, h);
    const auto pairs = eigen_system(params, 4, grid);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        for (std::size_t j = i; j < pairs.size(); ++j) {
            const Complex ip = grid_inner(pairs[i].upper, pairs[i].lower, pairs[j].upper,
                                          pairs[j].lower, h);
            const double want = (i == j) ? 1.0 : 0.0;
            CHECK_MESSAGE(std::abs(ip - want) < 1e-7, "i=", i, " j=", j);
        }
    }
}

TEST_CASE("spinor basis is complete against a Gaussian test function") {
    const LandauParams params{1.0, 1.0};
    const double h = 0.005;
    const int n_max = 60;
    const auto grid = uniform_grid(std::sqrt(2.0 * n_max + 1.0) + 4.0, h);
    const auto pairs = eigen_system(params, n_max, grid);

    std::vector<Complex> fu(grid.size()), fl(grid.size());
    double norm2 = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double x = grid[i];
        fu[i] = std::exp(-0.5 * (x - 0.3) * (x - 0.3));
        fl[i] = 0.5 * std::exp(-0.5 * (x + 0.2) * (x + 0.2));
        norm2 += (std::norm(fu[i]) + std::norm(fl[i])) * h;
    }
    double captured = 0.0;
    for (const auto& p : pairs) {
        const Complex c = grid_inner(p.upper, p.lower, fu, fl, h);
        captured += std::norm(c);
    }
    CHECK(captured > 0.98 * norm2);
    CHECK(captured < 1.001 * norm2);
}

TEST_CASE("eigen residual shrinks at second order in the grid spacing") {
    const LandauParams params{0.3, 0.7};
    const auto grid1 = uniform_grid(std::sqrt(2.0 * 3 + 0.49) + 4.0, 0.01);
    const auto grid2 = uniform_grid(std::sqrt(2.0 * 3 + 0.49) + 4.0, 0.005);
    const auto pairs1 = eigen_system(params, 3, grid1);
    const auto pairs2 = eigen_system(params, 3, grid2);
    REQUIRE(pairs1.size() == pairs2.size());
    for (std::size_t k : {std::size_t{0}, std::size_t{3}, pairs1.size() - 1}) {
        const double r1 = eigen_residual(pairs1[k], params, grid1);
        const double r2 = eigen_residual(pairs2[k], params, grid2);
        CHECK(r1 < 1e-3);
        const double ratio = r1 / r2;
        CHECK_MESSAGE(ratio > 3.5, "k=", k, " ratio=", ratio);
        CHECK_MESSAGE(ratio < 4.5, "k=", k, " ratio=", ratio);
    }
}

TEST_CASE("eigen grid preconditions") {
    const LandauParams params{0.3, 0.7};
    const auto small = uniform_grid(2.0, 0.01);
    CHECK_THROWS_AS(eigen_system(params, 5, small), std::domain_error);
    const auto grid = uniform_grid(std::sqrt(2.0 + 0.49) + 4.0, 0.01);
    auto pairs = eigen_system(params, 1, grid);
    auto coarse = uniform_grid(std::sqrt(2.0 + 0.49) + 4.0, 0.05);
    CHECK_THROWS_AS(eigen_residual(pairs[0], params, coarse), std::invalid_argument);
}

TEST_CASE("solution matrix satisfies the first-order system") {
    const LandauParams params{0.3, 0.7};
    for (double x : {-1.0, 0.0, 1.2}) {
        const double r = g0_equation_residual(params, x, 1e-3);
        CHECK_MESSAGE(r <= 1e-5, "x=", x, " r=", r);
    }
    // truncation of the O(h^2) stencil grows with |x|; elsewhere only require
    // the residual to shrink like h^2 and the matrix to stay invertible
    for (const LandauParams& p : {LandauParams{0.3, 0.7}, LandauParams{1.0, 1.0}}) {
        for (double x : {-1.5, -0.5, 0.5, 1.5}) {
            const double r1 = g0_equation_residual(p, x, 1e-3);
            const double r2 = g0_equation_residual(p, x, 5e-4);
            CHECK_MESSAGE(r1 < 1e-4, "omega=", p.omega, " x=", x, " r=", r1);
            CHECK_MESSAGE(r2 < 0.5 * r1, "omega=", p.omega, " x=", x);
            CHECK(std::abs(build_G0(p, x).det()) > 1e-6);
        }
    }
}

TEST_CASE("diagonal response: three routes coincide") {
    const Complex frozen[2][3] = {
        {{-1.7215255359465197, -1.440775571365582},
         {-1.4149458244306904, -1.2733456468023303},
         {-0.35418728248625848, -0.63538872939879744}},
        {{-0.50585507375516895, -2.278308924660685},
         {-0.44701763694894074, -2.1593972385663102},
         {-0.19487907769767242, -1.5654663603275746}},
    };
    const LandauParams cases[2] = {{0.3, 0.7}, {1.0, 1.0}};
    const double xs[3] = {0.0, 0.5, 1.5};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 3; ++j) {
            const Complex ratio = j11_ratio(cases[i], xs[j]);
            const Complex closed = j11_closed(cases[i], xs[j]);
            CHECK_MESSAGE(rel(ratio, frozen[i][j]) < 1e-8, "ratio i=", i, " j=", j);
            CHECK_MESSAGE(rel(closed, frozen[i][j]) < 1e-8, "closed i=", i, " j=", j);
            CHECK(rel(ratio, closed) < 1e-8);

            SeriesSpec sp;
            sp.target_tol = 1e-7;
            sp.max_terms = 2000000;
            const SeriesResult series = j11_series(cases[i], xs[j], sp);
            const double allowed =
                std::max(1e-6, 3.0 * series.tail_estimate / std::abs(closed));
            CHECK_MESSAGE(rel(series.value, closed) < allowed, "series i=", i, " j=", j);
        }
    }
}

TEST_CASE("diagonal response is even in x") {
    const LandauParams params{0.3, 0.7};
    CHECK(rel(j11_closed(params, 1.5), j11_closed(params, -1.5)) < 1e-10);
    CHECK(rel(j11_ratio(params, 0.5), j11_ratio(params, -0.5)) < 1e-10);
}

TEST_CASE("series route is an exact regrouping of the basis sums") {
    // identical truncation makes the identity linear; agreement is then at
    // rounding level, far below the series truncation error itself
    SeriesSpec forced;
    forced.target_tol = 1e-300;
    forced.max_terms = 20000;
    const LandauParams params{0.3, 0.7};
    const double x = 0.5;
    const Complex lambda = params.lambda();
    const double w = params.lambda_sq();
    const double y = x * sqrt_two;

    const SeriesResult lhs = j11_series(params, x, forced);
    auto s_w = product_via_hermite_series(HalfPlaneParameter{Complex{w, 0}}, y, forced);
    auto s_w1 = product_via_hermite_series(HalfPlaneParameter{Complex{w + 1, 0}}, y, forced);
    const Complex rhs = Complex{0, -1} * std::sqrt(0.5 * pi) *
                        (std::conj(lambda) * s_w.value + lambda * s_w1.value);
    CHECK(std::abs(lhs.value - rhs) <= 1e-12 * std::abs(rhs));
}
