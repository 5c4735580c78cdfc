#include "mtlab/constants.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "mtlab/specfun.hpp"

namespace mtlab {

namespace {

void require_concentration_range(const ExponentPair& pair, const char* who) {
    if (!pair.concentration_valid) {
        throw std::domain_error(std::string(who) + ": requires p > 2N/(N+1), got p = " +
                                std::to_string(pair.p) + " at N = " + std::to_string(pair.dim));
    }
}

}  // namespace

ExponentPair make_exponent_pair(int N, double p) {
    if (N < 2) throw std::domain_error("make_exponent_pair: N must be >= 2");
    if (!(p > 1.0) || !(p < N) || !std::isfinite(p)) {
        throw std::domain_error("make_exponent_pair: p must lie in (1, N), got p = " +
                                std::to_string(p));
    }
    ExponentPair pair;
    pair.dim = N;
    pair.p = p;
    pair.p_star = N * p / (N - p);
    pair.p_conj = p / (p - 1.0);
    pair.gamma_exp = N * (p - 1.0) / (N - p);
    pair.concentration_valid = p > 2.0 * N / (N + 1.0);
    return pair;
}

double ball_volume(int N) {
    if (N < 1) throw std::domain_error("ball_volume: N must be >= 1");
    return std::pow(std::numbers::pi, 0.5 * N) / specfun::gamma(1.0 + 0.5 * N);
}

double sphere_area(int N) {
    if (N < 1) throw std::domain_error("sphere_area: N must be >= 1");
    return N * ball_volume(N);
}

double alpha_n(int N) {
    if (N < 2) throw std::domain_error("alpha_n: N must be >= 2");
    return N * std::pow(sphere_area(N), 1.0 / (N - 1.0));
}

double alpha_p(const ExponentPair& pair) {
    const int N = pair.dim;
    const double p = pair.p;
    // (alpha_N^{(N-1)/N} |B|^{1/p - 1/N})^{p/(p-1)}, in log space.
    const double log_inner = (N - 1.0) / N * std::log(alpha_n(N)) +
                             (1.0 / p - 1.0 / N) * std::log(ball_volume(N));
    return std::exp(pair.p_conj * log_inner);
}

double sobolev_constant(const ExponentPair& pair) {
    const int N = pair.dim;
    const double p = pair.p;
    const double log_s = 0.5 * std::log(std::numbers::pi) + std::log((double)N) / p +
                         (p - 1.0) / p * std::log((N - p) / (p - 1.0)) +
                         (specfun::log_gamma(N / p) + specfun::log_gamma(N + 1.0 - N / p) -
                          specfun::log_gamma((double)N) - specfun::log_gamma(1.0 + 0.5 * N)) /
                             N;
    if (!std::isfinite(log_s)) throw std::domain_error("sobolev_constant: non-finite exponent");
    return std::exp(log_s);
}

double concentration_level(const ExponentPair& pair) {
    require_concentration_range(pair, "concentration_level");
    const double coef = (pair.dim - pair.p) / (pair.dim * (pair.p - 1.0)) * alpha_p(pair);
    // coef^{gamma} S_p^{-p*} in log space: gamma diverges as p -> N.
    const double log_term =
        pair.gamma_exp * std::log(coef) - pair.p_star * std::log(sobolev_constant(pair));
    return ball_volume(pair.dim) + std::exp(log_term);
}

double concentration_level_gamma_form(const ExponentPair& pair) {
    require_concentration_range(pair, "concentration_level_gamma_form");
    const int N = pair.dim;
    const double p = pair.p;
    const double log_bracket = specfun::log_gamma((double)N) - specfun::log_gamma(N / p) -
                               specfun::log_gamma(N + 1.0 - N / p);
    return ball_volume(N) * (1.0 + std::exp(p / (N - p) * log_bracket));
}

double carleson_chang_limit(int N) {
    if (N < 2) throw std::domain_error("carleson_chang_limit: N must be >= 2");
    return ball_volume(N) * (1.0 + std::exp(specfun::harmonic(N - 1)));
}

ClosedFormConstants compute_constants(const ExponentPair& pair) {
    ClosedFormConstants c;
    c.vol_B = ball_volume(pair.dim);
    c.omega = sphere_area(pair.dim);
    c.alpha_N = alpha_n(pair.dim);
    c.alpha_p = alpha_p(pair);
    c.coef = (pair.dim - pair.p) / (pair.dim * (pair.p - 1.0)) * c.alpha_p;
    c.leading = std::exp(pair.gamma_exp * std::log(c.coef));
    c.S_p = sobolev_constant(pair);
    c.M_p = pair.concentration_valid ? concentration_level(pair)
                              : std::numeric_limits<double>::quiet_NaN();
    c.cc_limit = carleson_chang_limit(pair.dim);
    return c;
}

}  // namespace mtlab
