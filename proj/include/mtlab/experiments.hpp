#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mtlab/constants.hpp"
#include "mtlab/radial.hpp"
#include "mtlab/report.hpp"

namespace mtlab {

struct SweepSpec {
    int dim = 2;
    std::vector<double> grid;
    QuadratureSpec quad;
    std::uint64_t seed = 0;
};

// Gap |M_p - CC(N)| along a p grid approaching N. Asserts a decreasing
// trend and a terminal gap at most half the initial one.
ExperimentReport sweep_mp_limit(int N, const std::vector<double>& p_grid);

// The concentrating bubble family W_eps: gradient norm, critical-power mass
// against S_p^{-p*}, the F_p integral against M_p inside the integrated
// two-sided bound, and the vanishing correction integral.
ExperimentReport sweep_concentration(const ExponentPair& pair, const std::vector<double>& eps_grid,
                                     const QuadratureSpec& quad);

// Pointwise F_p(s) -> exp(alpha_N |s|^{N/(N-1)}) along a p grid, plus the
// same limit for the integral over a fixed smooth profile (s column NaN).
ExperimentReport pointwise_limit_study(int N, const std::vector<double>& s_values,
                                       const std::vector<double>& p_grid,
                                       const QuadratureSpec& quad);

// Lower-semicontinuity mechanics: the Holder norm inequality and the
// rescaled functional approaching the exponential integral as p -> N.
ExperimentReport semicontinuity_study(int N, const std::vector<double>& p_grid,
                                      const std::vector<RadialProfile>& profiles,
                                      const QuadratureSpec& quad);

// Randomized inequality suites: "elementary", "sandwich", "radial-lemma",
// "alvino". Passes iff every normalized margin is >= -1e-9.
ExperimentReport verify_suite(const std::string& name, int trials, std::uint64_t seed);

}  // namespace mtlab
