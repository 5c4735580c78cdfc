#pragma once

#include "mtlab/constants.hpp"
#include "mtlab/radial.hpp"

namespace mtlab {

// Aubin-Talenti profile U(s) = (1 + s^{p'})^{-(N-p)/p} on [0, inf).
struct AubinTalenti {
    ExponentPair pair;
    double value(double s) const;
    double derivative(double s) const;
};

// Rescaled, boundary-corrected, gradient-normalized Aubin-Talenti bubble
//   W(r) = K eps^{-(N-p)/p} (U(r/eps) - U(1/eps)),  K = 1/||grad U||_{L^p(B_{1/eps})}.
struct ModifiedAT {
    RadialProfile profile;
    double epsilon = 0;
    double K = 0;
    double tail = 0;  // eps^{-(N-p)/p} U(1/eps)
};

ModifiedAT make_modified_at(const ExponentPair& pair, double epsilon, const QuadratureSpec& quad);

// Truncated-log plateau profile: v = c t on [0, e^{-t}], v = c log(1/r)
// outside, with c = (omega_{N-1} t)^{-1/N} so ||grad v||_{L^N(B)} = 1.
RadialProfile make_moser(int N, double t);

// Two-bubble sequence u_n = C_n (phi(r) + n^{(N-p)/p} psi(n r)) with psi
// zero-extended outside the ball and C_n normalizing the gradient p-norm.
// phi and psi must be piecewise linear with ||grad||_p^p = 1/2 each.
struct TwoBubble {
    RadialProfile profile;
    double C_n = 0;
};

TwoBubble make_two_bubble(const ExponentPair& pair, int n, const RadialProfile& phi,
                          const RadialProfile& psi, const QuadratureSpec& quad);

// Tent profile a (1 - r) with ||grad||_{L^p(B)}^p = energy_p.
RadialProfile make_tent(int N, double p, double energy_p);

}  // namespace mtlab
