#pragma once

#include <utility>

#include "mtlab/constants.hpp"

namespace mtlab {

// Pointwise evaluation of F_p(s) = [1 + coef |s|^{p'}]^{gamma} and of the
// correction term H(s) from the two-sided power bound. Immutable after
// construction; evaluation is pure.
class FpEvaluator {
public:
    explicit FpEvaluator(const ExponentPair& pair);

    double f_p(double s) const;
    double operator()(double s) const { return f_p(s); }

    // H(s) = C1 |s|^{p'} + C2 |s|^{p* - p'}. Requires concentration_valid.
    double h_correction(double s) const;

    const ExponentPair& pair() const { return pair_; }
    double coef() const { return coef_; }
    double leading() const { return leading_; }
    double c1() const { return c1_; }
    double c2() const { return c2_; }

private:
    ExponentPair pair_;
    double coef_;     // ((N-p)/(N(p-1))) alpha_p
    double leading_;  // coef^{gamma}
    double c1_;       // gamma 2^{gamma-1} coef
    double c2_;       // gamma 2^{gamma-1} coef^{gamma-1}
};

// Tsallis q-exponential [1 + (1-q) r]^{1/(1-q)}; requires q != 1 and
// 1 + (1-q) r > 0.
double q_exp(double q, double r);

// exp(alpha_N |s|^{N/(N-1)}), the Moser-Trudinger integrand.
double mt_integrand(double s, int N);

// Two-sided bound for (a+b)^g with a, b > 0 and g > 1:
//   a^g + b^g <= (a+b)^g <= a^g + b^g + g 2^{g-1} (a b^{g-1} + a^{g-1} b).
// Returns (lower, upper).
std::pair<double, double> elementary_power_bounds(double a, double b, double g);

}  // namespace mtlab
