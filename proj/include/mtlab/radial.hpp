#pragma once

#include <functional>
#include <vector>

#include "mtlab/constants.hpp"
#include "mtlab/functional.hpp"

namespace mtlab {

// Composite Gauss-Legendre rule on a power-graded panel mesh refined
// toward r = 0, where concentrating profiles live.
struct QuadratureSpec {
    int panels = 200;
    int nodes_per_panel = 16;  // Gauss-Legendre order, in [2, 64]
    double grading = 2.0;      // panel edges at (j/panels)^grading
    double cutoff = 1e-12;     // floor for the smallest nonzero edge
};

// Radial function v(r) on [0, 1] with zero boundary trace. Either an
// analytic pair (value, derivative) or a piecewise-linear interpolant.
class RadialProfile {
public:
    using Fn = std::function<double(double)>;

    // Optional breakpoints mark derivative kinks in (0, 1); quadrature panels
    // are aligned with them.
    static RadialProfile analytic(Fn value, Fn derivative, std::vector<double> breakpoints = {});
    // Knots 0 = r_0 < ... < r_K = 1 with v(r_K) = 0.
    static RadialProfile piecewise_linear(std::vector<double> knots, std::vector<double> values);

    double value(double r) const;
    double derivative(double r) const;  // right-sided at interior knots

    bool is_piecewise_linear() const { return pwl_; }
    const std::vector<double>& knots() const { return knots_; }
    const std::vector<double>& knot_values() const { return values_; }
    const std::vector<double>& breakpoints() const { return breakpoints_; }

    // Empty profile; usable only as a placeholder to assign into.
    RadialProfile() = default;

private:
    bool pwl_ = false;
    Fn value_;
    Fn derivative_;
    std::vector<double> knots_;
    std::vector<double> values_;
    std::vector<double> slopes_;
    std::vector<double> breakpoints_;
};

// Gauss-Legendre nodes and weights on [-1, 1]; n in [2, 64].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

// Integral of f over [0, length] on the graded mesh, panels summed pairwise
// so the result is reproducible bit-for-bit at fixed mesh.
double integrate_graded(const std::function<double(double)>& f, const QuadratureSpec& quad,
                        double length = 1.0);

// omega_{N-1} * int_0^1 r^{N-1} g(v(r)) dr. Piecewise-linear profiles are
// integrated segment by segment so kinks never cross a panel.
double integrate_radial(const RadialProfile& u, int N,
                        const std::function<double(double)>& g, const QuadratureSpec& quad);

// (omega_{N-1} int_0^1 r^{N-1} |v'|^p dr)^{1/p}; closed form per segment for
// piecewise-linear profiles. Accepts p in (1, N] so W^{1,N} families fit too.
double grad_norm(const RadialProfile& u, int N, double p, const QuadratureSpec& quad);
double grad_p_norm(const RadialProfile& u, const ExponentPair& pair, const QuadratureSpec& quad);

double lq_norm(const RadialProfile& u, double q, int N, const QuadratureSpec& quad);

double integrate_f_p(const RadialProfile& u, const FpEvaluator& ev, const QuadratureSpec& quad);
double integrate_mt(const RadialProfile& u, int N, const QuadratureSpec& quad);
double integrate_h(const RadialProfile& u, const FpEvaluator& ev, const QuadratureSpec& quad);

// Both forms of the pointwise radial bound at one radius, with margins
// (bound minus attained value; >= 0 means the inequality holds).
struct RadialLemmaRow {
    double radius = 0;
    double lhs = 0;        // |v(r)|
    double bound = 0;      // explicit right-hand side
    double margin = 0;     // bound - lhs
    double fp_value = 0;   // F_p(v(r)/||grad u||_p)
    double fp_bound = 0;   // r^{-N}
    double fp_margin = 0;
    double identity_err = 0;  // |F_p(bound/||grad u||_p) - r^{-N}| / r^{-N}
};

std::vector<RadialLemmaRow> radial_lemma_check(const RadialProfile& u, const ExponentPair& pair,
                                               const std::vector<double>& radii,
                                               const QuadratureSpec& quad);

}  // namespace mtlab
