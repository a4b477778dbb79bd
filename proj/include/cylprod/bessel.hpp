#pragma once

namespace cylprod {

struct BesselIKQuarter {
    double i_plus;   // I_{+1/4}(w)
    double i_minus;  // I_{-1/4}(w)
    double k;        // K_{1/4}(w)
};

// I_{+-1/4}(w) by the ascending series for w <= 30 and by the large-argument
// expansion beyond. K_{1/4} is assembled from (pi/sqrt(2))(I_- - I_+) while
// the difference is benign (w <= 5, losing at most ~e^{2w} ulps) and switches
// to direct quadrature of the cosh-kernel integral for larger w.
// Domain: 0 < w <= 700; beyond that e^{+-w} leaves double range and
// std::range_error is thrown.
BesselIKQuarter bessel_IK_quarter(double w);

// J_0(x): ascending series for |x| <= 12, Hankel-type expansion beyond
// (truncated at the smallest term; error well under 1e-11 for |x| > 12).
double bessel_J0(double x);

// k-th positive zero of J_0 (k >= 1) from the McMahon expansion; about 1e-3
// absolute at k = 1 and better than 1e-6 from k >= 4. Intended for panel
// boundaries in oscillatory quadrature, where exactness is not required.
double bessel_J0_zero(int k);

// Sine integral Si(y) = int_0^y sin(t)/t dt. Power series for |y| < 16,
// auxiliary-function expansion beyond.
double sin_integral(double y);

}  // namespace cylprod
