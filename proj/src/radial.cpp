#include "mtlab/radial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace mtlab {

namespace {

void validate(const QuadratureSpec& quad) {
    if (quad.panels < 1) throw std::invalid_argument("QuadratureSpec: panels must be >= 1");
    if (quad.nodes_per_panel < 2 || quad.nodes_per_panel > 64) {
        throw std::invalid_argument("QuadratureSpec: nodes_per_panel must be in [2, 64]");
    }
    if (!(quad.grading >= 1.0)) throw std::invalid_argument("QuadratureSpec: grading must be >= 1");
}

double pairwise_sum(const double* v, std::size_t n) {
    if (n <= 8) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += v[i];
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(v, half) + pairwise_sum(v + half, n - half);
}

double pairwise_sum(const std::vector<double>& v) { return pairwise_sum(v.data(), v.size()); }

double panel_integral(const std::function<double(double)>& f, double a, double b,
                      const std::vector<double>& nodes, const std::vector<double>& weights) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    std::vector<double> terms(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        terms[i] = weights[i] * f(mid + half * nodes[i]);
    }
    return half * pairwise_sum(terms);
}

std::vector<double> graded_edges(const QuadratureSpec& quad, double length) {
    std::vector<double> edges;
    edges.reserve(quad.panels + 1);
    edges.push_back(0.0);
    for (int j = 1; j <= quad.panels; ++j) {
        double e = length * std::pow(double(j) / quad.panels, quad.grading);
        if (e < quad.cutoff && quad.cutoff < length) e = quad.cutoff;
        if (e > edges.back()) edges.push_back(e);
    }
    edges.back() = length;
    return edges;
}

// Integrate f over segments [edges[i], edges[i+1]], each split into `sub`
// equal subpanels.
double integrate_over_edges(const std::function<double(double)>& f,
                            const std::vector<double>& edges, int order, int sub) {
    std::vector<double> nodes, weights;
    gauss_legendre(order, nodes, weights);
    std::vector<double> parts;
    parts.reserve((edges.size() - 1) * sub);
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        const double a = edges[i];
        const double w = (edges[i + 1] - a) / sub;
        for (int k = 0; k < sub; ++k) {
            parts.push_back(panel_integral(f, a + k * w, a + (k + 1) * w, nodes, weights));
        }
    }
    return pairwise_sum(parts);
}

// Graded edges on [0, 1] merged with the profile's kink locations.
std::vector<double> analytic_edges(const RadialProfile& u, const QuadratureSpec& quad) {
    std::vector<double> edges = graded_edges(quad, 1.0);
    if (!u.breakpoints().empty()) {
        edges.insert(edges.end(), u.breakpoints().begin(), u.breakpoints().end());
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    }
    return edges;
}

}  // namespace

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    if (n < 2 || n > 64) throw std::invalid_argument("gauss_legendre: order must be in [2, 64]");
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            // Legendre P_n and derivative by the three-term recurrence.
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
}

RadialProfile RadialProfile::analytic(Fn value, Fn derivative, std::vector<double> breakpoints) {
    if (!value || !derivative) throw std::invalid_argument("RadialProfile: null callable");
    for (double b : breakpoints) {
        if (!(b > 0.0) || !(b < 1.0)) {
            throw std::invalid_argument("RadialProfile: breakpoints must lie in (0, 1)");
        }
    }
    std::sort(breakpoints.begin(), breakpoints.end());
    RadialProfile u;
    u.pwl_ = false;
    u.value_ = std::move(value);
    u.derivative_ = std::move(derivative);
    u.breakpoints_ = std::move(breakpoints);
    return u;
}

RadialProfile RadialProfile::piecewise_linear(std::vector<double> knots,
                                              std::vector<double> values) {
    if (knots.size() < 2 || knots.size() != values.size()) {
        throw std::invalid_argument("RadialProfile: need matching knots/values, >= 2 points");
    }
    if (knots.front() != 0.0 || knots.back() != 1.0) {
        throw std::invalid_argument("RadialProfile: knots must span [0, 1]");
    }
    if (values.back() != 0.0) {
        throw std::invalid_argument("RadialProfile: boundary value must be 0");
    }
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        if (!(knots[i] < knots[i + 1])) {
            throw std::invalid_argument("RadialProfile: knots must be strictly increasing");
        }
    }
    for (double v : values) {
        if (!std::isfinite(v)) throw std::invalid_argument("RadialProfile: non-finite value");
    }
    RadialProfile u;
    u.pwl_ = true;
    u.knots_ = std::move(knots);
    u.values_ = std::move(values);
    u.slopes_.resize(u.knots_.size() - 1);
    for (std::size_t i = 0; i + 1 < u.knots_.size(); ++i) {
        u.slopes_[i] = (u.values_[i + 1] - u.values_[i]) / (u.knots_[i + 1] - u.knots_[i]);
    }
    return u;
}

double RadialProfile::value(double r) const {
    if (!pwl_) return value_(r);
    if (r <= 0.0) return values_.front();
    if (r >= 1.0) return values_.back();
    const auto it = std::upper_bound(knots_.begin(), knots_.end(), r);
    const std::size_t i = std::size_t(it - knots_.begin()) - 1;
    return values_[i] + slopes_[i] * (r - knots_[i]);
}

double RadialProfile::derivative(double r) const {
    if (!pwl_) return derivative_(r);
    if (r <= 0.0) return slopes_.front();
    if (r >= 1.0) return slopes_.back();
    const auto it = std::upper_bound(knots_.begin(), knots_.end(), r);
    return slopes_[std::size_t(it - knots_.begin()) - 1];
}

double integrate_graded(const std::function<double(double)>& f, const QuadratureSpec& quad,
                        double length) {
    validate(quad);
    return integrate_over_edges(f, graded_edges(quad, length), quad.nodes_per_panel, 1);
}

double integrate_radial(const RadialProfile& u, int N,
                        const std::function<double(double)>& g, const QuadratureSpec& quad) {
    validate(quad);
    const double omega = sphere_area(N);
    const auto f = [&](double r) { return std::pow(r, N - 1.0) * g(u.value(r)); };
    if (!u.is_piecewise_linear()) {
        return omega * integrate_over_edges(f, analytic_edges(u, quad), quad.nodes_per_panel, 1);
    }
    // Align panels with knots so the integrand is smooth on every panel.
    const int segments = int(u.knots().size()) - 1;
    const int sub = std::max(1, quad.panels / segments);
    return omega * integrate_over_edges(f, u.knots(), quad.nodes_per_panel, sub);
}

double grad_norm(const RadialProfile& u, int N, double p, const QuadratureSpec& quad) {
    if (!(p > 1.0) || !(p <= N)) throw std::domain_error("grad_norm: p must lie in (1, N]");
    const double omega = sphere_area(N);
    if (u.is_piecewise_linear()) {
        // |v'| constant per segment: integral of r^{N-1} is exact.
        const auto& knots = u.knots();
        const auto& vals = u.knot_values();
        std::vector<double> parts(knots.size() - 1);
        for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
            const double slope = (vals[i + 1] - vals[i]) / (knots[i + 1] - knots[i]);
            parts[i] = std::pow(std::fabs(slope), p) *
                       (std::pow(knots[i + 1], double(N)) - std::pow(knots[i], double(N))) / N;
        }
        return std::pow(omega * pairwise_sum(parts), 1.0 / p);
    }
    const auto f = [&](double r) {
        const double d = u.derivative(r);
        if (!std::isfinite(d)) {
            throw std::domain_error("grad_norm: non-finite derivative at r = " +
                                    std::to_string(r));
        }
        return std::pow(r, N - 1.0) * std::pow(std::fabs(d), p);
    };
    validate(quad);
    return std::pow(
        omega * integrate_over_edges(f, analytic_edges(u, quad), quad.nodes_per_panel, 1),
        1.0 / p);
}

double grad_p_norm(const RadialProfile& u, const ExponentPair& pair, const QuadratureSpec& quad) {
    return grad_norm(u, pair.dim, pair.p, quad);
}

double lq_norm(const RadialProfile& u, double q, int N, const QuadratureSpec& quad) {
    if (!(q >= 1.0)) throw std::domain_error("lq_norm: q must be >= 1");
    const double integral = integrate_radial(
        u, N,
        [&](double v) {
            if (!std::isfinite(v)) throw std::domain_error("lq_norm: non-finite value");
            return std::pow(std::fabs(v), q);
        },
        quad);
    return std::pow(integral, 1.0 / q);
}

double integrate_f_p(const RadialProfile& u, const FpEvaluator& ev, const QuadratureSpec& quad) {
    double current_r = 0.0;
    const double omega = sphere_area(ev.pair().dim);
    const int N = ev.pair().dim;
    const auto f = [&](double r) {
        current_r = r;
        return std::pow(r, N - 1.0) * ev.f_p(u.value(r));
    };
    try {
        if (!u.is_piecewise_linear()) {
            return omega * integrate_over_edges(f, analytic_edges(u, quad), quad.nodes_per_panel, 1);
        }
        const int sub = std::max(1, quad.panels / (int(u.knots().size()) - 1));
        return omega * integrate_over_edges(f, u.knots(), quad.nodes_per_panel, sub);
    } catch (const std::overflow_error&) {
        throw std::overflow_error("integrate_f_p: integrand overflow at r = " +
                                  std::to_string(current_r));
    }
}

double integrate_mt(const RadialProfile& u, int N, const QuadratureSpec& quad) {
    double current_r = 0.0;
    const double omega = sphere_area(N);
    const auto f = [&](double r) {
        current_r = r;
        return std::pow(r, N - 1.0) * mt_integrand(u.value(r), N);
    };
    try {
        if (!u.is_piecewise_linear()) {
            return omega * integrate_over_edges(f, analytic_edges(u, quad), quad.nodes_per_panel, 1);
        }
        const int sub = std::max(1, quad.panels / (int(u.knots().size()) - 1));
        return omega * integrate_over_edges(f, u.knots(), quad.nodes_per_panel, sub);
    } catch (const std::overflow_error&) {
        throw std::overflow_error("integrate_mt: integrand overflow at r = " +
                                  std::to_string(current_r));
    }
}

double integrate_h(const RadialProfile& u, const FpEvaluator& ev, const QuadratureSpec& quad) {
    return integrate_radial(u, ev.pair().dim, [&](double v) { return ev.h_correction(v); }, quad);
}

std::vector<RadialLemmaRow> radial_lemma_check(const RadialProfile& u, const ExponentPair& pair,
                                               const std::vector<double>& radii,
                                               const QuadratureSpec& quad) {
    const int N = pair.dim;
    const double p = pair.p;
    const double gnorm = grad_p_norm(u, pair, quad);
    if (gnorm == 0.0) throw std::domain_error("radial_lemma_check: zero gradient norm");
    const FpEvaluator ev(pair);
    // A = (|B|^{1/p - 1/N} alpha_N^{(N-1)/N})^{-1}
    const double A = std::exp(-((1.0 / p - 1.0 / N) * std::log(ball_volume(N)) +
                                (N - 1.0) / N * std::log(alpha_n(N))));
    std::vector<RadialLemmaRow> rows;
    rows.reserve(radii.size());
    for (double r : radii) {
        if (!(r > 0.0) || !(r < 1.0)) {
            throw std::domain_error("radial_lemma_check: radii must lie in (0, 1)");
        }
        RadialLemmaRow row;
        row.radius = r;
        row.lhs = std::fabs(u.value(r));
        const double t = N * (p - 1.0) / (N - p) * (std::pow(r, -(N - p) / (p - 1.0)) - 1.0);
        row.bound = A * std::pow(t, (p - 1.0) / p) * gnorm;
        row.margin = row.bound - row.lhs;
        row.fp_value = ev.f_p(u.value(r) / gnorm);
        row.fp_bound = std::pow(r, double(-N));
        row.fp_margin = row.fp_bound - row.fp_value;
        row.identity_err = std::isfinite(row.bound)
                               ? std::fabs(ev.f_p(row.bound / gnorm) - row.fp_bound) / row.fp_bound
                               : 0.0;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace mtlab
