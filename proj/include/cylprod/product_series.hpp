#pragma once

#include "cylprod/numeric.hpp"

namespace cylprod {

// How the truncated eigenfunction sum is finished off.
enum class TailStrategy {
    none,                    // raw partial sum
    semiclassical_tail,      // add closed-form tail of the continuum approximation
    averaging_acceleration,  // iterated pairwise averaging of the partial-sum window
    both                     // tail-corrected window, then averaging (default)
};

struct SeriesSpec {
    long max_terms = 200000;
    double target_tol = 1e-9;  // relative, drives adaptive extension
    TailStrategy tail_strategy = TailStrategy::both;

    void validate() const;
};

struct SeriesResult {
    Complex value{};
    long terms_used = 0;
    double tail_estimate = 0.0;  // absolute error bound estimate
    bool accelerated = false;
};

// sqrt(pi) * sum_n psi_n(x/sqrt(2))^2 / (n + z); equals the product form
SeriesResult product_via_hermite_series(HalfPlaneParameter z, double x,
                                        const SeriesSpec& spec = {});

// sqrt(pi) * sum_n (-1)^n psi_n(x/sqrt(2))^2 / (n + z); equals the squared form
SeriesResult square_via_alternating_series(HalfPlaneParameter z, double x,
                                           const SeriesSpec& spec = {});

// sqrt(pi) * sum_n psi_n(x/sqrt(2))^2 * (c0/(n+z) + c1/(n+z+1)), one pass over
// the recurrence; building block for the spectral Green's-function sum
SeriesResult hermite_pair_series(HalfPlaneParameter z, double x, Complex c0, Complex c1,
                                 const SeriesSpec& spec = {});

}  // namespace cylprod
