#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "mtlab/constants.hpp"
#include "mtlab/experiments.hpp"
#include "mtlab/families.hpp"
#include "mtlab/report.hpp"

using namespace mtlab;

namespace {
const QuadratureSpec kQuad{};
const double kNaN = std::nan("");
}  // namespace

TEST_CASE("report formatting") {
    ExperimentReport rep;
    rep.columns = {"a", "b"};
    rep.add_row({1.0, kNaN});
    rep.add_row({0.5, -2.25});
    rep.metadata["k"] = "v";

    const std::string csv = rep.to_csv();
    CHECK(csv.find("a,b") != std::string::npos);
    CHECK(csv.find("1,") != std::string::npos);      // NaN renders as empty cell
    CHECK(csv.find("-2.25") != std::string::npos);
    CHECK(csv.find("nan") == std::string::npos);

    const std::string js = rep.to_json();
    CHECK(js.find("null") != std::string::npos);
    CHECK(js.find("\"k\"") != std::string::npos);

    CHECK_THROWS_AS(rep.add_row({1.0}), std::invalid_argument);  // width mismatch
}

TEST_CASE("format_double round-trips") {
    for (double v : {1.0 / 3.0, 1e-300, 9.138532478590267490, -0.0, 2.0}) {
        CHECK(std::stod(format_double(v)) == v);
    }
}

TEST_CASE("trend detection") {
    CHECK(trend_decreasing({5.0, 3.0, 1.0}));
    CHECK(trend_decreasing({5.0, 3.0, 3.5, 1.0}));        // one violation tolerated
    CHECK_FALSE(trend_decreasing({5.0, 6.0, 7.0}));
    CHECK_FALSE(trend_decreasing({5.0, 3.0, 3.5, 1.0}, 0));
    CHECK(trend_decreasing({1.0}));
}

TEST_CASE("concentration-level sweep toward the dimensional limit") {
    const auto rep = sweep_mp_limit(2, {1.9, 1.99, 1.999});
    CHECK(rep.assertions_passed);
    REQUIRE(rep.rows.size() == 3);
    CHECK(rep.columns.size() == 6);
    CHECK(rep.rows[0][4] > rep.rows[1][4]);
    CHECK(rep.rows[1][4] > rep.rows[2][4]);
    // Both closed forms agree on every row.
    for (const auto& row : rep.rows) {
        CHECK(std::fabs(row[1] - row[2]) <= 1e-9 * row[1]);
    }
    CHECK_THROWS_AS(sweep_mp_limit(2, {}), std::invalid_argument);
    CHECK_THROWS_AS(sweep_mp_limit(2, {1.2}), std::domain_error);
}

TEST_CASE("bubble-family concentration sweep") {
    const auto pair = make_exponent_pair(2, 1.5);
    const auto rep = sweep_concentration(pair, {0.1, 0.03, 0.01}, kQuad);
    CHECK(rep.assertions_passed);
    REQUIRE(rep.rows.size() == 3);
    const auto col = [&](const std::string& name) {
        for (std::size_t i = 0; i < rep.columns.size(); ++i) {
            if (rep.columns[i] == name) return i;
        }
        throw std::runtime_error("missing column " + name);
    };
    for (const auto& row : rep.rows) {
        CHECK(row[col("grad_norm")] == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(row[col("int_f_p")] >= row[col("lower_bound")] * (1.0 - 1e-8));
        CHECK(row[col("int_f_p")] <= row[col("upper_bound")] * (1.0 + 1e-8));
    }
    CHECK(std::fabs(rep.rows[2][col("f_gap")]) < std::fabs(rep.rows[0][col("f_gap")]));
    CHECK(rep.rows[2][col("int_h")] < rep.rows[0][col("int_h")]);
    CHECK_THROWS_AS(sweep_concentration(make_exponent_pair(2, 1.2), {0.1}, kQuad),
                    std::domain_error);
}

TEST_CASE("pointwise and integral limits as p approaches the dimension") {
    const auto rep = pointwise_limit_study(2, {0.5, 1.0}, {1.9, 1.99, 1.999}, kQuad);
    CHECK(rep.assertions_passed);
    REQUIRE(rep.rows.size() == 9);  // two s values plus the fixed-profile block
    // The fixed-profile rows carry NaN in the s column.
    CHECK(std::isnan(rep.rows[6][0]));
    CHECK(std::isnan(rep.rows[8][0]));
    CHECK(rep.rows[8][4] < rep.rows[6][4]);
}

TEST_CASE("semicontinuity study") {
    std::vector<RadialProfile> profiles{make_moser(2, 1.5), make_tent(2, 2.0, 1.0)};
    const auto rep = semicontinuity_study(2, {1.9, 1.99, 1.999}, profiles, kQuad);
    CHECK(rep.assertions_passed);
    REQUIRE(rep.rows.size() == 6);
    for (const auto& row : rep.rows) {
        CHECK(row[4] >= -1e-10);  // holder_margin
    }
    // A profile outside the unit W^{1,N} ball is rejected.
    std::vector<RadialProfile> big{make_tent(2, 2.0, 4.0)};
    CHECK_THROWS_AS(semicontinuity_study(2, {1.9}, big, kQuad), std::domain_error);
}

TEST_CASE("randomized inequality suites") {
    for (const std::string name : {"elementary", "sandwich", "radial-lemma", "alvino"}) {
        const int trials = (name == "radial-lemma" || name == "alvino") ? 50 : 500;
        const auto rep = verify_suite(name, trials, 7);
        CHECK(rep.assertions_passed);
        CHECK(std::stod(rep.metadata.at("worst_margin")) >= -1e-9);
    }
    CHECK_THROWS_AS(verify_suite("bogus", 10, 0), std::invalid_argument);
    CHECK_THROWS_AS(verify_suite("elementary", 0, 0), std::invalid_argument);
}

TEST_CASE("verify suites are deterministic at fixed seed") {
    const auto a = verify_suite("sandwich", 200, 42);
    const auto b = verify_suite("sandwich", 200, 42);
    CHECK(a.metadata.at("worst_margin") == b.metadata.at("worst_margin"));
    CHECK(a.to_csv() == b.to_csv());
    // A different seed draws different trials, so the tables differ.
    const auto c = verify_suite("sandwich", 200, 43);
    CHECK(c.to_csv() != a.to_csv());
}
