#include "nlbs/corrector1d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace nlbs {

namespace {

// Classification of one shot at trial eigenvalue lambda:
//   +1  u' reached alpha while still strictly convex (lambda too big)
//   -1  u'' hit zero (with x + a u' >= 0) or the domain ran out first
//       (lambda too small)
struct ShotResult {
    int sign = 0;
    double x_stop = 0.0;
    double v_stop = 0.0;
};

struct Shooter {
    double a, alpha, sigma, x_max;
    double fixed_step;
    std::size_t max_steps;

    double c(double lambda) const { return 2.0 * lambda / (sigma * sigma) - a; }

    double rhs(double cc, double x, double v) const {
        const double w = x + a * v;
        return (cc - w * w) / (a * a);
    }

    // adaptive step: resolve both the saturation scale and the w-scale
    double step_size(double cc, double x, double v) const {
        if (fixed_step > 0.0) return fixed_step;
        const double vp = std::max(rhs(cc, x, v), 1e-12);
        const double sat_scale = (alpha - v) / vp + 1e-6;          // x-distance to saturation
        const double w = x + a * v;
        const double wp = std::abs(1.0 + a * rhs(cc, x, v)) + 1e-12;
        const double w_scale = (std::sqrt(cc) - std::abs(w)) / wp + 1e-6;  // to the |w|=sqrt(c) event
        double h = 5e-4 * std::min(sat_scale, std::max(w_scale, 1e-3));
        return std::clamp(h, 1e-9, 0.05 * (1.0 + std::abs(a) * alpha));
    }

    ShotResult shoot(double lambda) const {
        const double cc = c(lambda);
        if (cc <= 0.0) return {-1, 0.0, 0.0};
        double x = 0.0, v = 0.0;
        const double sqc = std::sqrt(cc);
        for (std::size_t it = 0; it < max_steps; ++it) {
            if (v >= alpha) return {+1, x, v};
            const double w = x + a * v;
            if (w >= sqc) return {-1, x, v};  // u'' <= 0 on the outward branch
            if (x >= x_max) return {-1, x, v};
            const double h = step_size(cc, x, v);
            const double k1 = rhs(cc, x, v);
            const double k2 = rhs(cc, x + 0.5 * h, v + 0.5 * h * k1);
            const double k3 = rhs(cc, x + 0.5 * h, v + 0.5 * h * k2);
            const double k4 = rhs(cc, x + h, v + h * k3);
            v += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            x += h;
        }
        throw NoConvergence("solve_eigen_1d: ODE step budget exhausted");
    }
};

}  // namespace

double Eigen1D::value(double xx) const {
    double ax = std::abs(xx);
    if (ax >= x_max) return u.back() + alpha * (ax - x_max);
    const double t = ax / x_max * static_cast<double>(x.size() - 1);
    const auto i = static_cast<std::size_t>(t);
    const double f = t - static_cast<double>(i);
    if (i + 1 >= u.size()) return u.back();
    return u[i] * (1.0 - f) + u[i + 1] * f;
}

double Eigen1D::slope(double xx) const {
    const double h = x_max / static_cast<double>(x.size() - 1);
    const double s = (value(std::abs(xx) + h) - value(std::abs(xx) - h)) / (2.0 * h);
    return xx >= 0.0 ? s : -s;
}

Eigen1D solve_eigen_1d(double a, double alpha, double sigma, const ShootingConfig& cfg) {
    if (!(alpha > 0.0) || !(sigma > 0.0))
        throw std::domain_error("solve_eigen_1d: alpha and sigma must be positive");
    if (std::abs(a) > cfg.a_max)
        throw std::domain_error("solve_eigen_1d: |a| exceeds configured a_max");

    Eigen1D out;
    out.a = a;
    out.alpha = alpha;
    out.sigma = sigma;
    out.x_max = cfg.x_max_factor * (1.0 + std::abs(a) * alpha);

    const int ns = std::max(cfg.n_samples, 16);
    out.x.resize(ns);
    out.u.resize(ns);
    const double hs = out.x_max / static_cast<double>(ns - 1);
    for (int i = 0; i < ns; ++i) out.x[i] = i * hs;

    if (a == 0.0) {
        // the constraint branch is active everywhere except the origin
        out.lambda1 = 0.0;
        out.free_boundary = 0.0;
        for (int i = 0; i < ns; ++i) out.u[i] = alpha * out.x[i];
        out.growth_defect = 0.0;
        return out;
    }

    Shooter sh{a, alpha, sigma, out.x_max, cfg.fixed_step, cfg.max_ode_steps};
    double lo = sigma * sigma * a / 2.0 - 1.0;
    double hi = sigma * sigma *
                (a + a * a + std::pow(out.x_max + std::abs(a) * alpha, 2)) / 2.0;
    const int slo = sh.shoot(lo).sign;
    const int shi_ = sh.shoot(hi).sign;
    if (slo >= 0 || shi_ <= 0)
        throw NoConvergence("solve_eigen_1d: no sign change in the lambda bracket [" +
                            std::to_string(lo) + ", " + std::to_string(hi) + "]");
    for (int it = 0; it < cfg.max_bisect && (hi - lo) > cfg.rtol; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (sh.shoot(mid).sign > 0) hi = mid;
        else lo = mid;
    }
    out.bracket_width = hi - lo;
    if (out.bracket_width > 10.0 * cfg.rtol)
        throw NoConvergence("solve_eigen_1d: bisection stalled at width " +
                            std::to_string(out.bracket_width));
    out.lambda1 = 0.5 * (lo + hi);

    // final pass: integrate v and u together, sample u on the output grid
    const double cc = sh.c(out.lambda1);
    const double sqc = std::sqrt(std::max(cc, 0.0));
    double x = 0.0, v = 0.0, u = 0.0;
    int isamp = 1;
    out.u[0] = 0.0;
    double xstar = -1.0;
    for (std::size_t it = 0; it < cfg.max_ode_steps && isamp < ns; ++it) {
        if (v >= alpha || x + a * v >= sqc || x >= out.x_max) {
            xstar = x;
            break;
        }
        double h = sh.step_size(cc, x, v);
        // land exactly on pending sample points
        if (x + h >= out.x[isamp]) h = out.x[isamp] - x;
        if (h <= 0.0) h = 1e-12;
        const double k1 = sh.rhs(cc, x, v);
        const double k2 = sh.rhs(cc, x + 0.5 * h, v + 0.5 * h * k1);
        const double k3 = sh.rhs(cc, x + 0.5 * h, v + 0.5 * h * k2);
        const double k4 = sh.rhs(cc, x + h, v + h * k3);
        const double vn = v + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        u += 0.5 * h * (v + vn);  // trapezoid on u' = v
        v = vn;
        x += h;
        while (isamp < ns && x >= out.x[isamp] - 1e-15) {
            out.u[isamp] = u;
            ++isamp;
        }
    }
    if (xstar < 0.0) xstar = x;
    out.free_boundary = xstar;
    if (xstar + a * alpha < -1e-9)
        throw NoConvergence(
            "solve_eigen_1d: trajectory re-enters |u'| < alpha after saturation (a < 0 regime)");
    // beyond the free boundary u' = alpha exactly
    const double ustar = u;
    for (int i = isamp; i < ns; ++i) out.u[i] = ustar + alpha * (out.x[i] - xstar);
    out.growth_defect = alpha * out.x_max - out.u.back();
    return out;
}

double scale_identity_check(double a, double alpha, double sigma, const ShootingConfig& cfg) {
    const Eigen1D lhs = solve_eigen_1d(a, alpha, sigma, cfg);
    ShootingConfig c2 = cfg;
    c2.a_max = std::max(cfg.a_max, std::abs(alpha * alpha * a) * 1.01 + 1.0);
    const Eigen1D rhs = solve_eigen_1d(alpha * alpha * a, 1.0, sigma, c2);
    return std::abs(lhs.lambda1 - rhs.lambda1 / (alpha * alpha));
}

Lambda1Curve Lambda1Curve::build(double a_lo, double a_hi, int per_decade, double rtol) {
    Lambda1Curve out;
    std::vector<double> pos;
    const double decades = std::log10(a_hi / a_lo);
    const int npos = std::max(2, static_cast<int>(decades * per_decade) + 1);
    for (int i = 0; i < npos; ++i)
        pos.push_back(a_lo * std::pow(a_hi / a_lo, static_cast<double>(i) / (npos - 1)));

    ShootingConfig cfg;
    cfg.rtol = rtol;
    cfg.a_max = a_hi * 1.01;
    for (auto it = pos.rbegin(); it != pos.rend(); ++it) out.nodes_.push_back(-*it);
    out.nodes_.push_back(0.0);
    for (double v : pos) out.nodes_.push_back(v);
    out.values_.resize(out.nodes_.size());
    for (std::size_t i = 0; i < out.nodes_.size(); ++i) {
        // relative bisection target for the huge-|a| nodes
        ShootingConfig c = cfg;
        c.rtol = std::max(rtol, rtol * std::abs(out.nodes_[i]));
        out.values_[i] = solve_eigen_1d(out.nodes_[i], 1.0, 1.0, c).lambda1;
    }
    return out;
}

double Lambda1Curve::operator()(double a) const {
    if (nodes_.empty()) throw SolverError("Lambda1Curve: empty");
    if (a <= nodes_.front())  // extend by the end chord (convex minorant direction)
        return values_.front() +
               (values_[1] - values_[0]) / (nodes_[1] - nodes_[0]) * (a - nodes_[0]);
    if (a >= nodes_.back()) {
        const std::size_t m = nodes_.size();
        return values_[m - 1] + (values_[m - 1] - values_[m - 2]) /
                                    (nodes_[m - 1] - nodes_[m - 2]) * (a - nodes_[m - 1]);
    }
    const auto it = std::upper_bound(nodes_.begin(), nodes_.end(), a);
    const std::size_t i = static_cast<std::size_t>(it - nodes_.begin()) - 1;
    const double f = (a - nodes_[i]) / (nodes_[i + 1] - nodes_[i]);
    return values_[i] * (1.0 - f) + values_[i + 1] * f;
}

double Lambda1Curve::slope(double a) const {
    if (nodes_.size() < 2) throw SolverError("Lambda1Curve: empty");
    std::size_t i;
    if (a <= nodes_.front()) i = 0;
    else if (a >= nodes_.back()) i = nodes_.size() - 2;
    else i = static_cast<std::size_t>(std::upper_bound(nodes_.begin(), nodes_.end(), a) -
                                      nodes_.begin()) - 1;
    return (values_[i + 1] - values_[i]) / (nodes_[i + 1] - nodes_[i]);
}

}  // namespace nlbs
