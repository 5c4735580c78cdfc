#include "mtlab/families.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace mtlab {

double AubinTalenti::value(double s) const {
    const double m = (pair.dim - pair.p) / pair.p;
    return std::pow(1.0 + std::pow(s, pair.p_conj), -m);
}

double AubinTalenti::derivative(double s) const {
    if (s == 0.0) return 0.0;
    const double m = (pair.dim - pair.p) / pair.p;
    return -(pair.dim - pair.p) / (pair.p - 1.0) * std::pow(s, pair.p_conj - 1.0) *
           std::pow(1.0 + std::pow(s, pair.p_conj), -m - 1.0);
}

ModifiedAT make_modified_at(const ExponentPair& pair, double epsilon,
                            const QuadratureSpec& quad) {
    if (!(epsilon > 0.0) || !(epsilon < 1.0)) {
        throw std::domain_error("make_modified_at: epsilon must lie in (0, 1)");
    }
    const AubinTalenti at{pair};
    const int N = pair.dim;
    const double p = pair.p;
    const double R = 1.0 / epsilon;
    // ||grad U||_{L^p(B_R)} on the same graded mesh scaled to [0, R]; this
    // makes grad_p_norm of the result consistent to machine precision.
    const double integral = integrate_graded(
        [&](double s) { return std::pow(s, N - 1.0) * std::pow(std::fabs(at.derivative(s)), p); },
        quad, R);
    const double grad_u = std::pow(sphere_area(N) * integral, 1.0 / p);
    if (!std::isfinite(grad_u) || grad_u <= 0.0) {
        throw std::runtime_error("make_modified_at: quadrature failure computing K");
    }
    ModifiedAT w;
    w.epsilon = epsilon;
    w.K = 1.0 / grad_u;
    const double scale = std::pow(epsilon, -(N - p) / p);
    w.tail = scale * at.value(R);
    const double K = w.K;
    const double boundary = at.value(R);
    w.profile = RadialProfile::analytic(
        [at, K, scale, epsilon, boundary](double r) {
            return K * scale * (at.value(r / epsilon) - boundary);
        },
        [at, K, scale, epsilon](double r) {
            return K * scale / epsilon * at.derivative(r / epsilon);
        });
    return w;
}

RadialProfile make_moser(int N, double t) {
    if (N < 2) throw std::domain_error("make_moser: N must be >= 2");
    if (!(t > 0.0)) throw std::domain_error("make_moser: t must be > 0");
    const double c = std::pow(sphere_area(N) * t, -1.0 / N);
    const double edge = std::exp(-t);
    return RadialProfile::analytic(
        [c, t, edge](double r) { return r <= edge ? c * t : c * std::log(1.0 / r); },
        [c, edge](double r) { return r <= edge ? 0.0 : -c / r; }, {edge});
}

TwoBubble make_two_bubble(const ExponentPair& pair, int n, const RadialProfile& phi,
                          const RadialProfile& psi, const QuadratureSpec& quad) {
    if (n < 1) throw std::domain_error("make_two_bubble: n must be >= 1");
    if (!phi.is_piecewise_linear() || !psi.is_piecewise_linear()) {
        throw std::invalid_argument("make_two_bubble: phi and psi must be piecewise linear");
    }
    const double ephi = std::pow(grad_p_norm(phi, pair, quad), pair.p);
    const double epsi = std::pow(grad_p_norm(psi, pair, quad), pair.p);
    if (std::fabs(ephi - 0.5) > 1e-8 || std::fabs(epsi - 0.5) > 1e-8) {
        throw std::domain_error("make_two_bubble: phi and psi must carry half the energy each");
    }
    const double lift = std::pow(double(n), (pair.dim - pair.p) / pair.p);
    // Union of phi's knots with psi's knots shrunk by 1/n; the sum is exactly
    // piecewise linear on that grid.
    std::vector<double> knots = phi.knots();
    for (double k : psi.knots()) knots.push_back(k / n);
    std::sort(knots.begin(), knots.end());
    knots.erase(std::unique(knots.begin(), knots.end(),
                            [](double a, double b) { return std::fabs(a - b) < 1e-15; }),
                knots.end());
    std::vector<double> values(knots.size());
    for (std::size_t i = 0; i < knots.size(); ++i) {
        const double r = knots[i];
        const double inner = r * n <= 1.0 ? lift * psi.value(r * n) : 0.0;
        values[i] = phi.value(r) + inner;
    }
    values.back() = 0.0;
    RadialProfile raw = RadialProfile::piecewise_linear(knots, values);
    const double cn = 1.0 / grad_p_norm(raw, pair, quad);
    for (double& v : values) v *= cn;
    TwoBubble tb;
    tb.C_n = cn;
    tb.profile = RadialProfile::piecewise_linear(std::move(knots), std::move(values));
    return tb;
}

RadialProfile make_tent(int N, double p, double energy_p) {
    if (!(energy_p > 0.0)) throw std::domain_error("make_tent: energy must be > 0");
    const double a = std::pow(energy_p / ball_volume(N), 1.0 / p);
    return RadialProfile::piecewise_linear({0.0, 1.0}, {a, 0.0});
}

}  // namespace mtlab
