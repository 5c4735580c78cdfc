#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "mtlab/specfun.hpp"

using namespace mtlab::specfun;
namespace specfun = mtlab::specfun;

namespace {

// The classical series for psi, truncated with a tail estimate; slow but
// independent of the production asymptotic-expansion path.
double digamma_series_oracle(double t, int terms = 2000000) {
    double s = -euler_gamma;
    for (int j = 1; j <= terms; ++j) s += 1.0 / j - 1.0 / (t - 1.0 + j);
    // Remaining tail: sum_{j>M} (t-1)/(j(t-1+j)) ~ (t-1)/M.
    return s + (t - 1.0) / terms;
}

}  // namespace

TEST_CASE("gamma at reference points") {
    CHECK(specfun::gamma(1.0) == 1.0);
    CHECK(specfun::gamma(5.0) == 24.0);
    CHECK(specfun::gamma(1.5) == doctest::Approx(0.8862269254527580137).epsilon(1e-12));
    CHECK(specfun::gamma(0.5) == doctest::Approx(std::sqrt(std::acos(-1.0))).epsilon(1e-12));
}

TEST_CASE("gamma agrees with the standard library") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> dist(0.05, 40.0);
    for (int i = 0; i < 1000; ++i) {
        const double t = dist(rng);
        CHECK(specfun::gamma(t) == doctest::Approx(std::tgamma(t)).epsilon(1e-12));
    }
}

TEST_CASE("gamma recurrence") {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> dist(0.1, 30.0);
    for (int i = 0; i < 1000; ++i) {
        const double t = dist(rng);
        CHECK(std::fabs(specfun::gamma(t + 1.0) - t * specfun::gamma(t)) / specfun::gamma(t + 1.0) <= 1e-11);
    }
}

TEST_CASE("log_gamma at reference points") {
    CHECK(log_gamma(1.0) == 0.0);
    CHECK(log_gamma(2.0) == 0.0);
    CHECK(log_gamma(10.0) == doctest::Approx(std::log(362880.0)).epsilon(1e-13));
    CHECK(log_gamma(10.0) == doctest::Approx(12.80182748008146961).epsilon(1e-13));
    CHECK(std::exp(log_gamma(7.3)) == doctest::Approx(specfun::gamma(7.3)).epsilon(1e-11));
}

TEST_CASE("log_gamma convexity") {
    for (double t = 0.2; t < 30.0; t += 0.1) {
        const double second = log_gamma(t + 0.2) - 2.0 * log_gamma(t + 0.1) + log_gamma(t);
        CHECK(second >= -1e-9);
    }
}

TEST_CASE("digamma at reference points") {
    CHECK(digamma(1.0) == doctest::Approx(-euler_gamma).epsilon(1e-12));
    CHECK(digamma(2.0) == doctest::Approx(1.0 - euler_gamma).epsilon(1e-12));
    CHECK(digamma(4.0) - digamma(1.0) == doctest::Approx(11.0 / 6.0).epsilon(1e-12));
}

TEST_CASE("digamma matches the series oracle") {
    for (double t : {0.3, 0.8, 1.0, 1.7, 2.5, 4.2, 7.9}) {
        CHECK(digamma(t) == doctest::Approx(digamma_series_oracle(t)).epsilon(1e-9));
    }
}

TEST_CASE("digamma recurrence") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> dist(0.1, 50.0);
    for (int i = 0; i < 1000; ++i) {
        const double t = dist(rng);
        CHECK(std::fabs(digamma(t + 1.0) - digamma(t) - 1.0 / t) <= 1e-10);
    }
}

TEST_CASE("digamma difference equals the harmonic number") {
    for (int n = 2; n <= 20; ++n) {
        CHECK(std::fabs(digamma(double(n)) - digamma(1.0) - harmonic(n - 1)) <= 1e-10);
    }
}

TEST_CASE("harmonic values") {
    CHECK(harmonic(0) == 0.0);
    CHECK(harmonic(1) == 1.0);
    CHECK(harmonic(3) == doctest::Approx(11.0 / 6.0).epsilon(1e-15));
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(specfun::gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(specfun::gamma(-1.5), std::domain_error);
    CHECK_THROWS_AS(specfun::gamma(std::nan("")), std::domain_error);
    CHECK_THROWS_AS(log_gamma(-0.1), std::domain_error);
    CHECK_THROWS_AS(digamma(0.0), std::domain_error);
    CHECK_THROWS_AS(harmonic(-1), std::domain_error);
}
