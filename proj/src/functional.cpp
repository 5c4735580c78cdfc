#include "mtlab/functional.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mtlab {

namespace {

// Largest exponent exp() can take before overflowing a double.
constexpr double kMaxExpArg = 709.0;

void require_finite(double s, const char* who) {
    if (!std::isfinite(s)) throw std::domain_error(std::string(who) + ": non-finite argument");
}

}  // namespace

FpEvaluator::FpEvaluator(const ExponentPair& pair) : pair_(pair) {
    coef_ = (pair.dim - pair.p) / (pair.dim * (pair.p - 1.0)) * alpha_p(pair);
    const double g = pair.gamma_exp;
    leading_ = std::exp(g * std::log(coef_));
    const double scale = g * std::exp((g - 1.0) * std::log(2.0));
    c1_ = scale * coef_;
    c2_ = scale * std::exp((g - 1.0) * std::log(coef_));
}

double FpEvaluator::f_p(double s) const {
    require_finite(s, "f_p");
    const double inner = coef_ * std::pow(std::fabs(s), pair_.p_conj);
    const double log_val = pair_.gamma_exp * std::log1p(inner);
    if (log_val > kMaxExpArg) {
        throw std::overflow_error("f_p: overflow at s = " + std::to_string(s));
    }
    return std::exp(log_val);
}

double FpEvaluator::h_correction(double s) const {
    require_finite(s, "h_correction");
    if (!pair_.concentration_valid) {
        throw std::domain_error("h_correction: requires p > 2N/(N+1)");
    }
    const double a = std::fabs(s);
    if (a == 0.0) return 0.0;
    return c1_ * std::pow(a, pair_.p_conj) + c2_ * std::pow(a, pair_.p_star - pair_.p_conj);
}

double q_exp(double q, double r) {
    if (q == 1.0) throw std::domain_error("q_exp: q must differ from 1");
    const double inner = (1.0 - q) * r;
    if (1.0 + inner <= 0.0) throw std::domain_error("q_exp: 1 + (1-q) r must be positive");
    const double log_val = std::log1p(inner) / (1.0 - q);
    if (log_val > kMaxExpArg) throw std::overflow_error("q_exp: overflow");
    return std::exp(log_val);
}

double mt_integrand(double s, int N) {
    require_finite(s, "mt_integrand");
    const double arg = alpha_n(N) * std::pow(std::fabs(s), N / (N - 1.0));
    if (arg > kMaxExpArg) {
        throw std::overflow_error("mt_integrand: overflow at s = " + std::to_string(s));
    }
    return std::exp(arg);
}

std::pair<double, double> elementary_power_bounds(double a, double b, double g) {
    if (!(a > 0.0) || !(b > 0.0) || !(g > 1.0)) {
        throw std::domain_error("elementary_power_bounds: need a, b > 0 and g > 1");
    }
    const double ag = std::pow(a, g);
    const double bg = std::pow(b, g);
    const double lower = ag + bg;
    const double cross = a * std::pow(b, g - 1.0) + std::pow(a, g - 1.0) * b;
    const double upper = lower + g * std::pow(2.0, g - 1.0) * cross;
    return {lower, upper};
}

}  // namespace mtlab
