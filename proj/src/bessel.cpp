#include "cylprod/bessel.hpp"

#include <cmath>
#include <stdexcept>

#include "cylprod/numeric.hpp"
#include "cylprod/quadrature.hpp"

namespace cylprod {

namespace {

double bessel_I_series(double nu, double w) {
    const double half = 0.5 * w;
    double term = std::pow(half, nu) / std::tgamma(1.0 + nu);
    double sum = term;
    for (int k = 1; k < 200; ++k) {
        term *= half * half / (k * (k + nu));
        sum += term;
        if (term < 1e-17 * sum) break;
    }
    return sum;
}

double bessel_I_asymptotic(double nu, double w) {
    const double mu = 4.0 * nu * nu;
    double term = 1.0;
    double sum = term;
    double prev = std::abs(term);
    for (int k = 1; k < 40; ++k) {
        term *= -(mu - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (8.0 * w * k);
        if (std::abs(term) >= prev) break;
        prev = std::abs(term);
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return std::exp(w) / std::sqrt(2.0 * pi * w) * sum;
}

double bessel_K_quarter_quadrature(double w) {
    const double t_max = std::acosh(745.0 / w);
    quad::QuadratureSpec spec;
    spec.rel_tol = 1e-14;
    spec.abs_tol = 1e-300;
    auto r = quad::gauss_kronrod_adaptive(
        [w](double t) -> Complex { return std::exp(-w * std::cosh(t)) * std::cosh(0.25 * t); },
        0.0, t_max, spec);
    return r.value.real();
}

}  // namespace

BesselIKQuarter bessel_IK_quarter(double w) {
    if (!(w > 0.0)) throw std::domain_error("bessel_IK_quarter: requires w > 0");
    if (w > 700.0) throw std::range_error("bessel_IK_quarter: e^w exceeds double range");
    BesselIKQuarter out{};
    if (w <= 30.0) {
        out.i_plus = bessel_I_series(0.25, w);
        out.i_minus = bessel_I_series(-0.25, w);
    } else {
        out.i_plus = bessel_I_asymptotic(0.25, w);
        out.i_minus = bessel_I_asymptotic(-0.25, w);
    }
    if (w <= 5.0) {
        out.k = pi / sqrt_two * (out.i_minus - out.i_plus);
    } else {
        out.k = bessel_K_quarter_quadrature(w);
    }
    return out;
}

double bessel_J0(double x) {
    const double ax = std::abs(x);
    if (ax <= 12.0) {
        const double q = 0.25 * ax * ax;
        double term = 1.0;
        double sum = term;
        for (int k = 1; k < 60; ++k) {
            term *= -q / (static_cast<double>(k) * k);
            sum += term;
            if (std::abs(term) < 1e-17 * (std::abs(sum) + 1.0)) break;
        }
        return sum;
    }
    // Hankel expansion: J0 = sqrt(2/(pi x)) (P cos(x - pi/4) - Q sin(x - pi/4))
    // with coefficient c_m = prod_{j<=m} (2j-1)^2 / m! against powers of 1/(8x).
    const double u = 1.0 / (8.0 * ax);
    double c = 1.0;
    double p_sum = 1.0, q_sum = 0.0;
    double prev = 1.0;
    for (int m = 1; m < 40; ++m) {
        c *= (2.0 * m - 1.0) * (2.0 * m - 1.0) / m;
        const double term = c * std::pow(u, m);
        if (term >= prev) break;
        prev = term;
        const double signed_term = ((m + 1) / 2 % 2 == 0 ? term : -term);
        if (m % 2 == 0) {
            p_sum += signed_term;
        } else {
            q_sum += signed_term;
        }
        if (term < 1e-17) break;
    }
    const double chi = ax - 0.25 * pi;
    return std::sqrt(2.0 / (pi * ax)) * (p_sum * std::cos(chi) - q_sum * std::sin(chi));
}

double bessel_J0_zero(int k) {
    if (k < 1) throw std::domain_error("bessel_J0_zero: requires k >= 1");
    const double beta = (k - 0.25) * pi;
    const double b8 = 8.0 * beta;
    return beta + 1.0 / b8 - 124.0 / (3.0 * b8 * b8 * b8) +
           120928.0 / (15.0 * b8 * b8 * b8 * b8 * b8);
}

double sin_integral(double y) {
    const double ay = std::abs(y);
    double si;
    if (ay < 16.0) {
        double sin_term = ay;  // ay^{2k+1} / (2k+1)!
        si = ay;
        for (int k = 1; k < 60; ++k) {
            sin_term *= -ay * ay / ((2.0 * k) * (2.0 * k + 1.0));
            si += sin_term / (2.0 * k + 1.0);
            if (std::abs(sin_term) < 1e-17 * (1.0 + std::abs(si))) break;
        }
    } else {
        // Si = pi/2 - f cos - g sin with f ~ sum_j (-1)^j (2j)!/y^{2j+1} and
        // g ~ sum_j (-1)^j (2j+1)!/y^{2j+2}, both truncated at their smallest
        // terms. The ladder t_k = k!/y^k feeds f (even k) and g (odd k).
        double f = 0.0, g = 0.0;
        double t = 1.0;  // k!/y^k
        double prev_f = 1e308, prev_g = 1e308;
        bool f_done = false, g_done = false;
        for (int k = 0; k < 40 && !(f_done && g_done); ++k) {
            const double s = (k / 2 % 2 == 0) ? 1.0 : -1.0;
            if (k % 2 == 0) {
                if (!f_done && t < prev_f) {
                    f += s * t;
                    prev_f = t;
                } else {
                    f_done = true;
                }
            } else {
                if (!g_done && t < prev_g) {
                    g += s * t;
                    prev_g = t;
                } else {
                    g_done = true;
                }
            }
            t *= (k + 1.0) / ay;
        }
        f /= ay;
        g /= ay;
        si = 0.5 * pi - f * std::cos(ay) - g * std::sin(ay);
    }
    return y < 0.0 ? -si : si;
}

}  // namespace cylprod
