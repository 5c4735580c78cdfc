#pragma once

namespace mtlab::specfun {

// Euler-Mascheroni constant, 20 digits.
inline constexpr double euler_gamma = 0.57721566490153286061;

struct Precision {
    double rel_tol = 1e-12;
    int max_terms = 100000;
};

// Gamma function for t > 0. Throws std::domain_error otherwise.
double gamma(double t);

// log(Gamma(t)) for t > 0.
double log_gamma(double t);

// Digamma (logarithmic derivative of Gamma) for t > 0.
double digamma(double t);

// Partial harmonic sum 1 + 1/2 + ... + 1/m, harmonic(0) = 0.
double harmonic(int m);

}  // namespace mtlab::specfun
