#include "cylprod/kummer.hpp"

#include <cmath>
#include <stdexcept>

namespace cylprod {

Complex kummer_phi(Complex a, Complex b, double x) {
    if (std::abs(b.imag()) < 1e-13) {
        const double br = b.real();
        if (br < 0.5 && std::abs(br - std::round(br)) < 1e-13) {
            throw std::domain_error("kummer_phi: b is a non-positive integer");
        }
    }
    Complex term{1.0, 0.0};
    Complex sum = term;
    int quiet = 0;
    for (int k = 0; k < 500; ++k) {
        term *= (a + static_cast<double>(k)) / (b + static_cast<double>(k)) *
                (x / (k + 1.0));
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) {
            if (++quiet >= 3) return ensure_finite(sum, "kummer_phi");
        } else {
            quiet = 0;
        }
    }
    return ensure_finite(sum, "kummer_phi");
}

}  // namespace cylprod
