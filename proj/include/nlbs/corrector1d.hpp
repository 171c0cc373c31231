#pragma once

#include <cstddef>
#include <vector>

#include "nlbs/errors.hpp"

namespace nlbs {

struct ShootingConfig {
    double rtol = 1e-8;       // bisection bracket width target on lambda
    double a_max = 50.0;      // |a| precondition bound
    double x_max_factor = 10.0;  // x_max = factor * (1 + |a| * alpha)
    double fixed_step = 0.0;  // > 0 forces a fixed RK4 step (oracle mode)
    int max_bisect = 200;
    std::size_t max_ode_steps = 50'000'000;
    int n_samples = 2048;  // u samples on [0, x_max]
};

/// Solution of the scalar eigenvalue ODE
///   max( lambda - (sigma^2/2)(a + a^2 u'' + (x + a u')^2), |u'| - alpha ) = 0
/// with u(x)/|x| -> alpha. u is even; samples cover x in [0, x_max] with
/// u(0) = 0 (mirror for negative x).
struct Eigen1D {
    double lambda1 = 0.0;
    double a = 0.0;
    double alpha = 1.0;
    double sigma = 1.0;
    double free_boundary = 0.0;  // x*: first saturation of |u'| at alpha
    double x_max = 0.0;
    std::vector<double> x;  // ascending, x[0] = 0
    std::vector<double> u;
    double growth_defect = 0.0;  // alpha * x_max - u(x_max) (>= 0)
    double bracket_width = 0.0;  // final bisection width

    double value(double xx) const;   // even extension, linear growth beyond x_max
    double slope(double xx) const;   // sampled derivative (odd)
};

Eigen1D solve_eigen_1d(double a, double alpha, double sigma, const ShootingConfig& cfg = {});

/// | lambda1(a, alpha) - lambda1(alpha^2 a, 1) / alpha^2 |
double scale_identity_check(double a, double alpha, double sigma = 1.0,
                            const ShootingConfig& cfg = {});

/// Piecewise-linear interpolant of a |-> lambda1(a, 1) (sigma = 1) on a
/// sign-symmetric log-spaced grid. Convexity of lambda1 makes the chords an
/// upper estimate; the node spacing keeps the gap small.
class Lambda1Curve {
public:
    Lambda1Curve() = default;
    /// Builds nodes on +-[a_lo, a_hi] (log-spaced, per_decade nodes) plus 0.
    static Lambda1Curve build(double a_lo = 1e-4, double a_hi = 1e6, int per_decade = 24,
                              double rtol = 1e-8);

    double operator()(double a) const;        // lambda1(a, 1)
    double slope(double a) const;             // local chord slope
    double scaled(double a, double alpha) const {  // lambda1(a, alpha)
        return (*this)(alpha * alpha * a) / (alpha * alpha);
    }
    bool empty() const { return nodes_.empty(); }
    double a_hi() const { return nodes_.empty() ? 0.0 : nodes_.back(); }

private:
    std::vector<double> nodes_;   // ascending
    std::vector<double> values_;
};

}  // namespace nlbs
