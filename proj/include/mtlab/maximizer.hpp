#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mtlab/constants.hpp"
#include "mtlab/radial.hpp"

namespace mtlab {

// Exploratory ascent on sup ∫ F_p(u) over the unit gradient-norm ball,
// discretized on piecewise-linear radial profiles. The constraint is
// enforced by rescaling every candidate to unit norm (F_p is monotone in
// |s|, so the optimum sits on the boundary).
struct MaximizerConfig {
    int knots = 64;
    int max_iters = 500;
    double step_init = 0.2;
    double step_shrink = 0.5;
    double tol = 1e-10;
    std::uint64_t seed = 12345;
    std::vector<std::string> inits = {"tent", "moser-like", "aubin-talenti", "random"};
    double at_epsilon = 1e-2;  // concentration scale of the aubin-talenti start
};

struct StartResult {
    std::string init;
    double value = 0;
    double init_value = 0;  // objective at the (feasible) starting point
    std::string label;      // converged | concentrating | iteration-capped
};

struct MaximizeOutcome {
    RadialProfile profile;  // best profile found, unit gradient norm
    double value = 0;
    std::vector<double> trace;  // objective per accepted iteration, winning start
    std::string winning_init;
    std::string label;
    std::vector<StartResult> starts;
};

MaximizeOutcome maximize(const ExponentPair& pair, const MaximizerConfig& cfg,
                         const QuadratureSpec& quad);

// Central-difference gradient of the rescaled objective with respect to the
// knot values (boundary value excluded, it is pinned to zero).
std::vector<double> finite_diff_gradient(const std::vector<double>& knots,
                                         const std::vector<double>& values,
                                         const ExponentPair& pair, const QuadratureSpec& quad,
                                         double h);

// The rescaled objective itself: ∫ F_p(v / ||grad v||_p) dx.
double rescaled_objective(const std::vector<double>& knots, const std::vector<double>& values,
                          const ExponentPair& pair, const QuadratureSpec& quad);

}  // namespace mtlab
