#include <cmath>
#include <complex>

#include "doctest.h"

#include "cylprod/gamma.hpp"
#include "cylprod/numeric.hpp"

using cylprod::beta;
using cylprod::Complex;
using cylprod::rgamma;

namespace {
// plain `gamma` collides with the libm function of the same name
Complex gam(Complex z) { return cylprod::gamma(z); }
double gam(double x) { return cylprod::gamma(x); }
double rel(Complex got, Complex want) { return std::abs(got - want) / std::abs(want); }
}  // namespace

TEST_CASE("gamma at real points") {
    CHECK(gam(1.0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(gam(2.0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(gam(5.0) == doctest::Approx(24.0).epsilon(1e-13));
    CHECK(gam(0.5) == doctest::Approx(cylprod::sqrt_pi).epsilon(1e-13));
    CHECK(gam(7.5) == doctest::Approx(1871.254305797788346).epsilon(1e-12));
    // reflection side
    CHECK(gam(-0.5) == doctest::Approx(-2.0 * cylprod::sqrt_pi).epsilon(1e-12));
    CHECK(gam(-2.5) == doctest::Approx(-0.9453087204829418812).epsilon(1e-12));
}

TEST_CASE("gamma at complex points") {
    CHECK(rel(gam(Complex{1, 2}),
              Complex{0.15190400267003614, 0.019804880161854982}) < 1e-12);
    CHECK(rel(gam(Complex{0.5, -1.5}),
              Complex{0.15443097618696284, 0.18052756337372854}) < 1e-12);
    CHECK(rel(gam(Complex{5, 3}),
              Complex{0.016041882741652325, -9.433293289755987}) < 1e-12);
    CHECK(rel(gam(Complex{-1.5, 0.5}),
              Complex{0.93791666278788505, 0.34920566814780487}) < 1e-12);
}

TEST_CASE("gamma recurrence and conjugation") {
    const Complex z{0.3, 0.8};
    CHECK(rel(gam(z + 1.0), z * gam(z)) < 1e-13);
    CHECK(rel(gam(std::conj(z)), std::conj(gam(z))) < 1e-13);
}

TEST_CASE("gamma poles throw") {
    CHECK_THROWS_AS(gam(Complex{0.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(gam(Complex{-3.0, 0.0}), std::domain_error);
}

TEST_CASE("rgamma is zero at poles and matches 1/gamma elsewhere") {
    CHECK(rgamma(Complex{0.0, 0.0}) == Complex{0.0, 0.0});
    CHECK(rgamma(Complex{-7.0, 0.0}) == Complex{0.0, 0.0});
    const Complex z{2.5, -1.0};
    CHECK(rel(rgamma(z), 1.0 / gam(z)) < 1e-13);
}

TEST_CASE("beta closed forms") {
    CHECK(rel(beta(Complex{0.5, 0}, Complex{0.5, 0}), Complex{cylprod::pi, 0}) < 1e-13);
    CHECK(rel(beta(Complex{2.5, 0}, Complex{0.5, 0}),
              Complex{3.0 * cylprod::pi / 8.0, 0}) < 1e-13);
    // B(a, b) = B(b, a)
    const Complex a{1.2, 0.4}, b{0.7, -0.3};
    CHECK(rel(beta(a, b), beta(b, a)) < 1e-13);
}
