#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace cylprod {

// An evaluation that ran to its work limit without meeting the requested
// tolerance. Carries the best value reached so callers can still report it.
class tolerance_error : public std::runtime_error {
  public:
    tolerance_error(const std::string& msg, std::complex<double> best, double err)
        : std::runtime_error(msg), best_value(best), err_estimate(err) {}

    std::complex<double> best_value;
    double err_estimate;
};

}  // namespace cylprod
