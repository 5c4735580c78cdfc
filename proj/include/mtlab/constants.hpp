#pragma once

namespace mtlab {

// Dimension N and exponent p in (1, N), with the derived exponents used
// throughout: the critical exponent p* = Np/(N-p), the conjugate
// p' = p/(p-1), and gamma = N(p-1)/(N-p).
struct ExponentPair {
    int dim = 2;
    double p = 1.5;
    double p_star = 6.0;
    double p_conj = 3.0;
    double gamma_exp = 2.0;
    // Restriction p > 2N/(N+1) for the concentration analysis; a flag, not a
    // hard error, because F_p itself exists for all p in (1, N).
    bool concentration_valid = true;
};

// Throws std::domain_error unless N >= 2 and 1 < p < N.
ExponentPair make_exponent_pair(int N, double p);

// Closed-form scalars for a given (N, p).
struct ClosedFormConstants {
    double vol_B = 0;      // volume of the unit ball
    double omega = 0;      // surface measure of the unit sphere
    double alpha_N = 0;    // N * omega^{1/(N-1)}
    double alpha_p = 0;
    double coef = 0;       // ((N-p)/(N(p-1))) * alpha_p
    double leading = 0;    // coef^{gamma}
    double S_p = 0;        // sharp Sobolev constant
    double M_p = 0;        // concentration level (NaN if !concentration_valid)
    double cc_limit = 0;   // |B| (1 + e^{H_{N-1}})
};

double ball_volume(int N);                 // N >= 1
double sphere_area(int N);                 // omega_{N-1}, N >= 1
double alpha_n(int N);                     // N >= 2
double alpha_p(const ExponentPair& pair);
double sobolev_constant(const ExponentPair& pair);
double concentration_level(const ExponentPair& pair);             // needs concentration_valid
double concentration_level_gamma_form(const ExponentPair& pair);  // needs concentration_valid
double carleson_chang_limit(int N);        // N >= 2

ClosedFormConstants compute_constants(const ExponentPair& pair);

}  // namespace mtlab
