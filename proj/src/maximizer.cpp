#include "mtlab/maximizer.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "mtlab/families.hpp"
#include "mtlab/functional.hpp"

namespace mtlab {

namespace {

// Knot grid graded toward the origin, r_i = (i/K)^2.
std::vector<double> make_knots(int K) {
    std::vector<double> knots(K + 1);
    for (int i = 0; i <= K; ++i) knots[i] = std::pow(double(i) / K, 2.0);
    return knots;
}

RadialProfile build(const std::vector<double>& knots, std::vector<double> values) {
    values.push_back(0.0);
    return RadialProfile::piecewise_linear(knots, std::move(values));
}

// Radius of the knot below which half the gradient p-energy sits.
double half_energy_radius(const RadialProfile& u, const ExponentPair& pair) {
    const auto& knots = u.knots();
    const auto& vals = u.knot_values();
    std::vector<double> seg(knots.size() - 1);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        const double slope = (vals[i + 1] - vals[i]) / (knots[i + 1] - knots[i]);
        seg[i] = std::pow(std::fabs(slope), pair.p) *
                 (std::pow(knots[i + 1], double(pair.dim)) - std::pow(knots[i], double(pair.dim)));
        total += seg[i];
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < seg.size(); ++i) {
        acc += seg[i];
        if (acc >= 0.5 * total) return knots[i + 1];
    }
    return 1.0;
}

struct AscentResult {
    std::vector<double> values;
    double value = 0;
    std::vector<double> trace;
    std::string label;
};

AscentResult ascend(const std::vector<double>& knots, std::vector<double> values,
                    const ExponentPair& pair, const MaximizerConfig& cfg,
                    const QuadratureSpec& quad) {
    AscentResult res;
    double obj = rescaled_objective(knots, values, pair, quad);
    res.trace.push_back(obj);
    double step = cfg.step_init;
    res.label = "iteration-capped";
    const double mesh_floor = knots[1];

    for (int it = 0; it < cfg.max_iters; ++it) {
        const auto grad = finite_diff_gradient(knots, values, pair, quad, 1e-6);
        double gnorm = 0.0;
        for (double g : grad) gnorm = std::max(gnorm, std::fabs(g));
        if (gnorm == 0.0) {
            res.label = "converged";
            break;
        }
        bool accepted = false;
        while (step > 1e-14) {
            std::vector<double> trial = values;
            for (std::size_t i = 0; i < trial.size(); ++i) trial[i] += step / gnorm * grad[i];
            double trial_obj;
            try {
                trial_obj = rescaled_objective(knots, trial, pair, quad);
            } catch (const std::overflow_error&) {
                step *= cfg.step_shrink;
                continue;
            }
            if (trial_obj > obj) {
                values = std::move(trial);
                if (!(trial_obj - obj > cfg.tol)) {
                    obj = trial_obj;
                    res.trace.push_back(obj);
                    res.label = "converged";
                    accepted = true;
                    break;
                }
                obj = trial_obj;
                res.trace.push_back(obj);
                step *= 1.5;
                accepted = true;
                break;
            }
            step *= cfg.step_shrink;
        }
        if (!accepted || res.label == "converged") {
            if (!accepted) res.label = "converged";
            break;
        }
        // Mass escaping below the first mesh cell marks a concentrating run.
        const double scale = grad_norm(build(knots, values), pair.dim, pair.p, quad);
        if (scale > 0.0 && half_energy_radius(build(knots, values), pair) <= mesh_floor) {
            res.label = "concentrating";
            break;
        }
        if (res.label == "converged") break;
        res.label = "iteration-capped";
    }
    res.values = std::move(values);
    res.value = obj;
    return res;
}

}  // namespace

double rescaled_objective(const std::vector<double>& knots, const std::vector<double>& values,
                          const ExponentPair& pair, const QuadratureSpec& quad) {
    RadialProfile u = build(knots, values);
    const double g = grad_p_norm(u, pair, quad);
    if (g == 0.0) throw std::domain_error("rescaled_objective: zero gradient norm");
    std::vector<double> scaled(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) scaled[i] = values[i] / g;
    const FpEvaluator ev(pair);
    return integrate_f_p(build(knots, std::move(scaled)), ev, quad);
}

std::vector<double> finite_diff_gradient(const std::vector<double>& knots,
                                         const std::vector<double>& values,
                                         const ExponentPair& pair, const QuadratureSpec& quad,
                                         double h) {
    if (!(h > 0.0)) throw std::domain_error("finite_diff_gradient: h must be > 0");
    std::vector<double> grad(values.size());
    std::vector<double> work = values;
    for (std::size_t i = 0; i < values.size(); ++i) {
        work[i] = values[i] + h;
        const double up = rescaled_objective(knots, work, pair, quad);
        work[i] = values[i] - h;
        const double down = rescaled_objective(knots, work, pair, quad);
        work[i] = values[i];
        grad[i] = (up - down) / (2.0 * h);
    }
    return grad;
}

MaximizeOutcome maximize(const ExponentPair& pair, const MaximizerConfig& cfg,
                         const QuadratureSpec& quad) {
    if (cfg.knots < 3) throw std::invalid_argument("maximize: knots must be >= 3");
    if (!(cfg.tol > 0.0)) throw std::invalid_argument("maximize: tol must be > 0");
    const auto knots = make_knots(cfg.knots);
    const int K = cfg.knots;

    MaximizeOutcome out;
    out.value = -1.0;
    std::mt19937_64 rng(cfg.seed);

    for (const auto& init : cfg.inits) {
        std::vector<double> values(K);  // v at knots 0..K-1, boundary pinned to 0
        if (init == "tent") {
            for (int i = 0; i < K; ++i) values[i] = 1.0 - knots[i];
        } else if (init == "moser-like") {
            const double t = 2.0;
            for (int i = 0; i < K; ++i) {
                values[i] = knots[i] > 0.0 ? std::min(t, std::log(1.0 / knots[i])) : t;
            }
        } else if (init == "aubin-talenti") {
            const ModifiedAT w = make_modified_at(pair, cfg.at_epsilon, quad);
            for (int i = 0; i < K; ++i) values[i] = w.profile.value(knots[i]);
        } else if (init == "random") {
            std::uniform_real_distribution<double> unif(0.1, 1.0);
            for (int i = 0; i < K; ++i) values[i] = unif(rng);
        } else {
            throw std::invalid_argument("maximize: unknown init '" + init + "'");
        }
        AscentResult res = ascend(knots, std::move(values), pair, cfg, quad);
        out.starts.push_back({init, res.value, res.trace.front(), res.label});
        if (res.value > out.value) {
            out.value = res.value;
            out.trace = res.trace;
            out.winning_init = init;
            out.label = res.label;
            RadialProfile u = build(knots, res.values);
            const double g = grad_p_norm(u, pair, quad);
            std::vector<double> scaled(res.values.size());
            for (std::size_t i = 0; i < scaled.size(); ++i) scaled[i] = res.values[i] / g;
            out.profile = build(knots, std::move(scaled));
        }
    }
    return out;
}

}  // namespace mtlab
