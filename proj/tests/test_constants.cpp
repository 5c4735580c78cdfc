#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "mtlab/constants.hpp"
#include "mtlab/families.hpp"
#include "mtlab/radial.hpp"
#include "mtlab/specfun.hpp"

using namespace mtlab;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("exponent pair construction and identities") {
    const auto pair = make_exponent_pair(2, 1.5);
    CHECK(pair.p_star == doctest::Approx(6.0).epsilon(1e-15));
    CHECK(pair.p_conj == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(pair.gamma_exp == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(pair.concentration_valid);

    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int i = 0; i < 500; ++i) {
        const int N = 2 + int(unif(rng) * 5);
        const double p = 1.0 + (N - 1.0) * (0.02 + 0.96 * unif(rng));
        const auto q = make_exponent_pair(N, p);
        CHECK(std::fabs(q.gamma_exp * q.p_conj - q.p_star) <=
              1e-12 * std::fabs(q.p_star));
    }
}

TEST_CASE("exponent pair domain errors and the concentration-range flag") {
    CHECK_THROWS_AS(make_exponent_pair(2, 2.0), std::domain_error);
    CHECK_THROWS_AS(make_exponent_pair(2, 2.5), std::domain_error);
    CHECK_THROWS_AS(make_exponent_pair(2, 1.0), std::domain_error);
    CHECK_THROWS_AS(make_exponent_pair(1, 0.5), std::domain_error);
    CHECK_FALSE(make_exponent_pair(2, 1.2).concentration_valid);
    CHECK_THROWS_AS(concentration_level(make_exponent_pair(2, 1.2)), std::domain_error);
    CHECK_THROWS_AS(concentration_level_gamma_form(make_exponent_pair(2, 1.2)),
                    std::domain_error);
}

TEST_CASE("ball volume and sphere area") {
    CHECK(ball_volume(2) == doctest::Approx(kPi).epsilon(1e-14));
    CHECK(ball_volume(3) == doctest::Approx(4.0 * kPi / 3.0).epsilon(1e-14));
    CHECK(ball_volume(4) == doctest::Approx(kPi * kPi / 2.0).epsilon(1e-14));
    for (int N = 2; N <= 10; ++N) {
        CHECK(sphere_area(N) == doctest::Approx(N * ball_volume(N)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(ball_volume(0), std::domain_error);
}

TEST_CASE("alpha_N") {
    CHECK(alpha_n(2) == doctest::Approx(4.0 * kPi).epsilon(1e-14));
    CHECK(alpha_n(3) == doctest::Approx(3.0 * std::sqrt(4.0 * kPi)).epsilon(1e-14));
    CHECK(alpha_n(4) == doctest::Approx(4.0 * std::cbrt(2.0 * kPi * kPi)).epsilon(1e-14));
    CHECK_THROWS_AS(alpha_n(1), std::domain_error);
}

TEST_CASE("alpha_p closed form and continuity at p = N") {
    // Direct power-space evaluation as an independent route.
    const auto pair = make_exponent_pair(2, 1.5);
    const double direct =
        std::pow(std::pow(alpha_n(2), 0.5) * std::pow(kPi, 1.0 / 1.5 - 0.5), 3.0);
    CHECK(alpha_p(pair) == doctest::Approx(direct).epsilon(1e-13));
    CHECK(alpha_p(pair) == doctest::Approx(78.95683520871486895).epsilon(1e-13));

    const auto pair32 = make_exponent_pair(3, 2.0);
    const double direct32 = std::pow(
        std::pow(alpha_n(3), 2.0 / 3.0) * std::pow(ball_volume(3), 1.0 / 6.0), 2.0);
    CHECK(alpha_p(pair32) == doctest::Approx(direct32).epsilon(1e-13));

    for (int N = 2; N <= 4; ++N) {
        const auto near = make_exponent_pair(N, N - 1e-8);
        CHECK(alpha_p(near) == doctest::Approx(alpha_n(N)).epsilon(1e-6));
    }
}

TEST_CASE("sharp Sobolev constant against the high-precision oracle") {
    CHECK(sobolev_constant(make_exponent_pair(3, 2.0)) ==
          doctest::Approx(2.340492275042011728).epsilon(1e-13));
    CHECK(sobolev_constant(make_exponent_pair(2, 1.5)) ==
          doctest::Approx(2.526183904594745735).epsilon(1e-13));
}

TEST_CASE("Sobolev constant matches the Aubin-Talenti quotient by quadrature") {
    // S_p^{-1} = ||U||_{p*} / ||grad U||_p over R^N, truncated at radius R.
    for (auto [N, p] : {std::pair<int, double>{3, 2.0}, {2, 1.5}}) {
        const auto pair = make_exponent_pair(N, p);
        const AubinTalenti at{pair};
        QuadratureSpec quad;
        quad.panels = 400;
        const double R = 1e5;
        const double grad = std::pow(
            sphere_area(N) * integrate_graded(
                                 [&](double s) {
                                     return std::pow(s, N - 1.0) *
                                            std::pow(std::fabs(at.derivative(s)), p);
                                 },
                                 quad, R),
            1.0 / p);
        const double mass = std::pow(
            sphere_area(N) * integrate_graded(
                                 [&](double s) {
                                     return std::pow(s, N - 1.0) *
                                            std::pow(at.value(s), pair.p_star);
                                 },
                                 quad, R),
            1.0 / pair.p_star);
        CHECK(grad / mass == doctest::Approx(sobolev_constant(pair)).epsilon(1e-3));
    }
}

TEST_CASE("concentration level, both forms") {
    const auto pair = make_exponent_pair(2, 1.5);
    const double mp = concentration_level(pair);
    CHECK(mp == doctest::Approx(9.138532478590267490).epsilon(1e-12));
    CHECK(concentration_level_gamma_form(pair) == doctest::Approx(mp).epsilon(1e-12));
    // Explicit Gamma-ratio arithmetic as a third route.
    const double bracket = specfun::gamma(2.0) /
                           (specfun::gamma(4.0 / 3.0) * specfun::gamma(5.0 / 3.0));
    CHECK(mp == doctest::Approx(kPi * (1.0 + std::pow(bracket, 3.0))).epsilon(1e-12));
    CHECK(concentration_level(make_exponent_pair(3, 2.0)) ==
          doctest::Approx(16.26098736968274831).epsilon(1e-12));
}

TEST_CASE("dual-form agreement on a (N, p) grid") {
    for (int N = 2; N <= 6; ++N) {
        const double lo = 2.0 * N / (N + 1.0);
        for (int i = 0; i < 20; ++i) {
            const double p = lo + (N - lo) * (i + 0.5) / 20.5;
            const auto pair = make_exponent_pair(N, p);
            const double a = concentration_level(pair);
            const double b = concentration_level_gamma_form(pair);
            CHECK(std::fabs(a - b) / a <= 1e-9);
        }
    }
}

TEST_CASE("gamma form stays finite near p = N") {
    const auto pair = make_exponent_pair(2, 2.0 - 1e-6);
    const double v = concentration_level_gamma_form(pair);
    CHECK(std::isfinite(v));
    CHECK(v == doctest::Approx(carleson_chang_limit(2)).epsilon(1e-4));
}

TEST_CASE("Carleson-Chang limit") {
    CHECK(carleson_chang_limit(2) ==
          doctest::Approx(kPi * (1.0 + std::exp(1.0))).epsilon(1e-14));
    CHECK(carleson_chang_limit(2) == doctest::Approx(11.68132687626336030).epsilon(1e-13));
    CHECK(carleson_chang_limit(3) ==
          doctest::Approx(4.0 * kPi / 3.0 * (1.0 + std::exp(1.5))).epsilon(1e-14));
    CHECK(carleson_chang_limit(5) == doctest::Approx(47.53830500281685354).epsilon(1e-13));
    CHECK_THROWS_AS(carleson_chang_limit(1), std::domain_error);
}

TEST_CASE("concentration level converges to the Carleson-Chang limit") {
    const double cc = carleson_chang_limit(2);
    double prev = 1e300;
    for (int k = 1; k <= 6; ++k) {
        const double gap =
            std::fabs(concentration_level(make_exponent_pair(2, 2.0 - std::pow(10.0, -k))) - cc);
        CHECK(gap < prev);
        prev = gap;
    }
    CHECK(prev / cc <= 1e-4);
}

TEST_CASE("digamma limit of the log Gamma-ratio bracket") {
    using specfun::log_gamma;
    for (int N = 2; N <= 5; ++N) {
        const double p = N - 1e-5;
        const double t = (N - p) / p;
        const double bracket =
            log_gamma(double(N)) - log_gamma(N / p) - log_gamma(N + 1.0 - N / p);
        CHECK(bracket / t == doctest::Approx(specfun::harmonic(N - 1)).epsilon(1e-3));
    }
}

TEST_CASE("compute_constants bundles coherently") {
    const auto pair = make_exponent_pair(2, 1.5);
    const auto c = compute_constants(pair);
    CHECK(c.omega == doctest::Approx(2.0 * c.vol_B).epsilon(1e-14));
    CHECK(c.leading ==
          doctest::Approx(std::pow(c.coef, pair.gamma_exp)).epsilon(1e-12));
    CHECK(c.M_p == doctest::Approx(concentration_level(pair)).epsilon(1e-14));
    const auto invalid = compute_constants(make_exponent_pair(2, 1.2));
    CHECK(std::isnan(invalid.M_p));
}
