#pragma once

#include <string>
#include <vector>

#include "cylprod/numeric.hpp"
#include "cylprod/product_series.hpp"
#include "cylprod/quadrature.hpp"

namespace cylprod {

// Shared harness configuration. Precedence: CLI flags > config file > these
// defaults. The file is JSON with the keys documented in the README
// (quadrature.*, series.*, pcf_x_switch, threshold, grid.{z,x,methods}).
struct HarnessConfig {
    quad::QuadratureSpec quadrature{};
    SeriesSpec series{};
    double pcf_x_switch = 8.0;
    double threshold = 1e-8;
    std::vector<Complex> grid_z;
    std::vector<double> grid_x;
    std::vector<std::string> grid_methods;

    void validate() const;
};

HarnessConfig default_config();

// Parse the file at path over the defaults; unknown keys are rejected.
HarnessConfig load_config(const std::string& path);

// "1", "-0.5", "1+2i", "0.5-1.5i", "2i" -> Complex; throws std::invalid_argument.
Complex parse_complex(const std::string& text);

// Serialized config (the report's config_echo), as a JSON object string.
std::string config_echo_json(const HarnessConfig& cfg);

}  // namespace cylprod
