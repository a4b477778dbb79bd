#pragma once

#include <string>
#include <vector>

#include "cylprod/config.hpp"
#include "cylprod/numeric.hpp"

namespace cylprod {

// One evaluated grid cell. Failed evaluations are carried with ok = false and
// the error text; they appear in the JSON report but not in the CSV table.
struct Cell {
    Complex z;
    double x = 0.0;
    std::string method;
    Complex value{};
    double err_estimate = 0.0;
    long work = 0;
    long long wall_ns = 0;
    bool ok = true;
    std::string error;
};

struct DeviationRow {
    Complex z;
    double x = 0.0;
    double max_rel_deviation = 0.0;
};

struct CrossCheckReport {
    std::vector<Cell> cells;  // deterministic order: (method, z.re, z.im, x)
    std::vector<DeviationRow> deviations;
    double max_rel_deviation = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

// 'P' for the opposite-argument product methods, 'Q' for the coinciding-
// argument square methods; deviations are only meaningful within a family.
char method_family(const std::string& method);

void sort_cells(std::vector<Cell>& cells);

// Sorts, groups by (z, x), compares within method families; pass requires
// every cell ok and the global max relative deviation within threshold.
CrossCheckReport build_crosscheck_report(std::vector<Cell> cells, double threshold);

std::string report_to_json(const CrossCheckReport& report, const HarnessConfig& cfg);

// Stable CSV: header + one row per successful cell, shortest round-trip
// float formatting, '.' decimal point, no wall times.
std::string cells_to_csv(const std::vector<Cell>& cells);

struct BenchRow {
    std::string method;
    Complex z;
    double x = 0.0;
    long long median_ns = 0;
    long work = 0;
    double err_estimate = 0.0;
};

std::string bench_to_csv(const std::vector<BenchRow>& rows);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace cylprod
