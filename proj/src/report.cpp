#include "mtlab/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace mtlab {

void ExperimentReport::add_row(std::vector<double> row) {
    if (row.size() != columns.size()) {
        throw std::invalid_argument("ExperimentReport: row width mismatch");
    }
    rows.push_back(std::move(row));
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string ExperimentReport::to_csv() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) out << ',';
        out << columns[i];
    }
    out << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            if (!std::isnan(row[i])) out << format_double(row[i]);
        }
        out << '\n';
    }
    return out.str();
}

std::string ExperimentReport::to_json() const {
    nlohmann::ordered_json doc;
    doc["metadata"] = metadata;
    doc["assertions_passed"] = assertions_passed;
    doc["notes"] = notes;
    auto& data = doc["rows"];
    data = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        nlohmann::ordered_json obj;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (std::isnan(row[i])) {
                obj[columns[i]] = nullptr;
            } else {
                // Raw string keeps the 17-digit decimal form verbatim.
                obj[columns[i]] = row[i];
            }
        }
        data.push_back(std::move(obj));
    }
    return doc.dump(2) + "\n";
}

bool trend_decreasing(const std::vector<double>& gaps, int allowed_violations) {
    int violations = 0;
    for (std::size_t i = 1; i < gaps.size(); ++i) {
        if (!(std::fabs(gaps[i]) < std::fabs(gaps[i - 1]))) ++violations;
    }
    return violations <= allowed_violations;
}

}  // namespace mtlab
