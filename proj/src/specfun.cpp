#include "mtlab/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mtlab::specfun {

namespace {

void require_positive(double t, const char* who) {
    if (!(t > 0.0) || !std::isfinite(t)) {
        throw std::domain_error(std::string(who) + ": argument must be finite and > 0, got " +
                                std::to_string(t));
    }
}

// Lanczos approximation, g = 7, 9 coefficients. Valid for t >= 0.5;
// smaller arguments go through the recurrence Gamma(t) = Gamma(t+1)/t.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

constexpr double kHalfLogTwoPi = 0.91893853320467274178;  // log(2*pi)/2

double lanczos_sum(double t) {
    double s = kLanczos[0];
    for (int i = 1; i < 9; ++i) s += kLanczos[i] / (t - 1.0 + i);
    return s;
}

// log(Gamma(t)) for t >= 0.5.
double log_gamma_core(double t) {
    const double x = t - 1.0;
    const double base = x + kLanczosG + 0.5;
    return kHalfLogTwoPi + (x + 0.5) * std::log(base) - base + std::log(lanczos_sum(t));
}

}  // namespace

double gamma(double t) {
    require_positive(t, "gamma");
    // Exact integer arguments: product form keeps Gamma(n) = (n-1)! exact
    // up to n = 171 (overflow boundary of double).
    if (t == std::floor(t) && t <= 171.0) {
        double r = 1.0;
        for (double k = 2.0; k < t; ++k) r *= k;
        return r;
    }
    if (t < 0.5) return gamma(t + 1.0) / t;
    return std::exp(log_gamma_core(t));
}

double log_gamma(double t) {
    require_positive(t, "log_gamma");
    if (t == 1.0 || t == 2.0) return 0.0;
    if (t < 0.5) return log_gamma_core(t + 1.0) - std::log(t);
    return log_gamma_core(t);
}

double digamma(double t) {
    require_positive(t, "digamma");
    // Shift into the asymptotic regime, then apply the Bernoulli expansion
    // psi(x) ~ log x - 1/(2x) - sum B_{2k}/(2k x^{2k}).
    double acc = 0.0;
    double x = t;
    while (x < 10.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    // B_2/2 .. B_14/14 over x^{2k}
    const double series = inv2 * (1.0 / 12.0 +
                          inv2 * (-1.0 / 120.0 +
                          inv2 * (1.0 / 252.0 +
                          inv2 * (-1.0 / 240.0 +
                          inv2 * (1.0 / 132.0 +
                          inv2 * (-691.0 / 32760.0 +
                          inv2 * (1.0 / 12.0)))))));
    return acc + std::log(x) - 0.5 * inv - series;
}

double harmonic(int m) {
    if (m < 0) throw std::domain_error("harmonic: argument must be >= 0");
    double s = 0.0;
    for (int k = m; k >= 1; --k) s += 1.0 / k;
    return s;
}

}  // namespace mtlab::specfun
