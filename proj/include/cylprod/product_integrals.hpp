#pragma once

#include "cylprod/numeric.hpp"
#include "cylprod/quadrature.hpp"

namespace cylprod {

using quad::EvalResult;
using quad::QuadratureSpec;

// This module evaluates the canonical products
//   P(z, x) = Gamma(z) D_{-z}(x) D_{-z}(-x)   (opposite arguments)
//   Q(z, x) = Gamma(z) D_{-z}(x)^2            (coinciding arguments)
// through their integral representations. Every operation takes the
// D-function argument x directly; the sqrt(2) rescaling between the series
// and integral pictures is resolved inside product_series, not here.

// P via 2^{-1/2} int_0^inf exp((1/2-z)t - (x^2/2) tanh(t/2)) dt/sqrt(sinh t).
// Default scheme: double-exponential on (0, inf). The Gauss-Kronrod scheme
// substitutes t = u^2 and truncates at T = max(35, (|log tol|+2)/Re z) with
// the analytic tail bound sqrt(2) e^{-Re z T}/Re z folded into err_estimate.
EvalResult product_via_tanh_integral(HalfPlaneParameter z, double x,
                                     const QuadratureSpec& spec);

// P via int_0^1 (1-s)^{z-1} (1+s)^{-z} e^{-x^2 s/2} s^{-1/2} ds.
// Default: tanh-sinh on (0,1) using exact endpoint distances. The
// Gauss-Kronrod scheme splits at 1/2 with s = sigma^2 below and
// 1 - s = e^{-u} above.
EvalResult product_via_finite_integral(HalfPlaneParameter z, double x,
                                       const QuadratureSpec& spec);

// Q via 2^{-1/2} int_0^inf exp((1/2-z)t - (x^2/2) coth(t/2)) dt/sqrt(sinh t).
EvalResult square_via_coth_integral(HalfPlaneParameter z, double x,
                                    const QuadratureSpec& spec);

// Q via int_1^inf (s-1)^{z-1} (s+1)^{-z} e^{-x^2 s/2} s^{-1/2} ds
// (evaluated on r = s-1 with the double-exponential rule).
EvalResult square_via_shifted_integral(HalfPlaneParameter z, double x,
                                       const QuadratureSpec& spec);

enum class CombinationSign { plus, minus };

// The |s-1| kernels over (0, inf): '+' returns Q + P, '-' returns Q - P,
// assembled from the finite and shifted pieces split at s = 1. x = 0 with
// '-' returns exact 0 without quadrature.
EvalResult combination_integrals(HalfPlaneParameter z, double x, CombinationSign sign,
                                 const QuadratureSpec& spec);

// Single-formula variant covering both targets:
//   P or Q = e^{-x^2/2} 2^{-1/2} int_0^inf exp((1/2-z)t +- x^2/(e^t +- 1)) dt/sqrt(sinh t)
// with '+' selecting the opposite-argument product (tanh picture) and '-'
// the coinciding-argument square (coth picture).
EvalResult unified_integral(HalfPlaneParameter z, double x, CombinationSign sign,
                            const QuadratureSpec& spec);

// Consistency check of the Hankel-transform identity
//   D_nu(x) D_nu(-x) = -2 int_0^inf J_0(x s) D_nu(s) D'_nu(s) ds,  Re nu < 0.
// Returns the integral side (the P(z,x)/Gamma(z) scale, z = -nu). The
// integrand's e^{-s^2/2} envelope makes truncation at s = 12 exact to double
// precision; panels split at the zeros of J_0(x s).
EvalResult hankel_check_eq5(Complex nu, double x, const QuadratureSpec& spec,
                            double pcf_x_switch = 8.0);

struct AppendixPair {
    double lhs_a, rhs_a;  // int_0^a e^{-px}/sqrt(x(a^2-x^2)) dx vs Bessel form
    double lhs_b, rhs_b;  // int_a^inf e^{-px}/sqrt(x(x^2-a^2)) dx vs Bessel form
};
AppendixPair appendix_pair(double a, double p, const QuadratureSpec& spec);

struct FourierPair {
    double sin_lhs, sin_rhs;  // int_0^inf sin(bx)/sqrt(x(x^2+zp^2)) dx vs Bessel form
    double cos_lhs, cos_rhs;  // cosine analogue
};
FourierPair fourier_pair(double b, double zp, const QuadratureSpec& spec);

// Direct reference evaluations through the D-function oracle.
EvalResult oracle_product(HalfPlaneParameter z, double x, double pcf_x_switch = 8.0);
EvalResult oracle_square(HalfPlaneParameter z, double x, double pcf_x_switch = 8.0);

}  // namespace cylprod
