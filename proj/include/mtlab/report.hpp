#pragma once

#include <map>
#include <string>
#include <vector>

namespace mtlab {

// Tabular experiment output. Cells are doubles; NaN renders as an empty CSV
// cell / JSON null. Numbers are emitted with 17 significant digits so a
// round-trip parse reproduces them exactly.
struct ExperimentReport {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::map<std::string, std::string> metadata;
    bool assertions_passed = true;
    std::vector<std::string> notes;

    void add_row(std::vector<double> row);

    std::string to_csv() const;
    std::string to_json() const;
};

// 17-significant-digit formatting used for every emitted number.
std::string format_double(double v);

// True when the sequence of |gaps| decreases, tolerating at most one
// non-monotone step (quadrature noise).
bool trend_decreasing(const std::vector<double>& gaps, int allowed_violations = 1);

}  // namespace mtlab
