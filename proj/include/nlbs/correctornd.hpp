#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nlbs/grid.hpp"
#include "nlbs/symmat.hpp"

namespace nlbs {

struct NdSolverConfig {
    double tol = 1e-6;            // policy residual target (sup norm)
    int max_iter = 200;           // Howard iterations
    std::int64_t direct_limit = 100000;  // unknowns above this use the iterative solver
    double linear_tol = 1e-10;    // iterative linear solve residual
    double u_change_tol = 1e-10;  // sup-norm stop on successive iterates
};

/// One discounted obstacle solve: policy iteration on
///   max_i( delta u - (1/2)tr(Sigma A) - (1/2)tr(A Sigma A D^2 u)
///          - (1/2)|sigma^t (x + A Du)|^2 ,  |u_{x_i}| - 1 ) = 0
/// with outward saturated transport on the box faces.
struct DiscountedSolve {
    double delta = 0.0;
    GridFn u;
    double lambda_delta = 0.0;  // delta * u(0)
    int iterations = 0;
    double residual_sup = 0.0;
    std::vector<std::int8_t> policy;  // 0 = PDE, 1 + 2*i + s = transport (axis i, sign s)
    double k_super = 0.0;             // supersolution constant for this A
    // invariant diagnostics
    double lipschitz_excess = 0.0;    // max over axis pairs of |du| - h
    double convexity_defect = 0.0;    // max midpoint-convexity violation
};

struct CorrectorSolution {
    SymMatrix A;
    Eigen::MatrixXd sigma;
    double lambda = 0.0;
    GridFn u;             // normalized u(0) = 0
    GridMask contact_mask;  // all centered |d_i u| < 1 - h
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    std::vector<std::pair<double, double>> delta_trace;  // (delta, lambda_delta)
    double cone_constant = 0.0;      // C in u >= (sum|x_i| - C)^+
    double growth_margin = 0.0;      // max over outer shell of |u/sum|x_i| - 1|
    bool degenerate = false;         // det A == 0
    bool domain_too_small = false;
    bool extrapolation_suspect = false;
    std::string solver_settings;     // settings snapshot (JSON string)
};

Eigen::MatrixXd second_order_coefficient(const SymMatrix& a, const VolModel& vol);  // A Sigma A
/// min_i (M_ii - sum_{j != i} |M_ij|); negative means the 7-point stencil
/// cannot form an M-matrix for this coefficient.
double stencil_dominance_margin(const SymMatrix& a, const VolModel& vol);

double supersolution_constant(const SymMatrix& a, const VolModel& vol);  // K in the upper barrier
double subsolution_constant(const SymMatrix& a, const VolModel& vol, const BoxGrid& grid);
double cone_constant(const SymMatrix& a, const VolModel& vol, const BoxGrid& grid);

DiscountedSolve solve_discounted(const SymMatrix& a, const VolModel& vol, const BoxGrid& grid,
                                 double delta, const NdSolverConfig& cfg = {},
                                 const GridFn* warm_start = nullptr);

/// Default auto-sized radius, snapped so R/h is integral.
double auto_radius(const SymMatrix& a, const VolModel& vol, double spacing);

struct VanishingDiscountConfig {
    std::vector<double> delta_seq = {0.2, 0.1, 0.05, 0.025};
    NdSolverConfig solver;
    double mollify_radius_factor = 2.0;  // radius = factor * h for the bracket
    int max_domain_doublings = 2;
    bool compute_bracket = true;
};

CorrectorSolution vanishing_discount(const SymMatrix& a, const VolModel& vol, const BoxGrid& grid,
                                     const VanishingDiscountConfig& cfg = {});

struct SandwichReport {
    double k_sub = 0.0;
    double k_super = 0.0;
    double lower_margin = 0.0;  // min over nodes of u - lower barrier (>= -tol passing)
    double upper_margin = 0.0;  // min over nodes of upper barrier - u
    bool pass = false;
};

/// Explicit barrier check on a discounted solve; throws SandwichViolation on failure.
SandwichReport sandwich_check(const DiscountedSolve& ds, const SymMatrix& a, const VolModel& vol,
                              double tol = 1e-6);

struct PenalizedConfig {
    double eps_pen = 0.01;
    double delta = 0.025;
    double newton_tol = 1e-9;
    int max_newton = 80;
};

/// Smooth penalized companion solve; Dirichlet boundary data taken from
/// `boundary` on the box faces. Requires det A != 0.
GridFn penalized_solve(const SymMatrix& a, const VolModel& vol, const BoxGrid& grid,
                       const PenalizedConfig& cfg, const GridFn& boundary);

struct BracketResult {
    double lo = 0.0;
    double hi = 0.0;
    std::int64_t admissible_nodes = 0;
};

BracketResult minmax_bracket(const CorrectorSolution& sol, const SymMatrix& a, const VolModel& vol,
                             double mollify_radius);

struct ComplementarityReport {
    double max_branch_residual = 0.0;  // sup over nodes of max-branch (should be <= tol)
    double min_branch_residual = 0.0;  // inf over nodes of max-branch (should be >= -tol)
};

ComplementarityReport complementarity_report(const DiscountedSolve& ds, const SymMatrix& a,
                                             const VolModel& vol);

GridMask contact_mask_of(const GridFn& u);

}  // namespace nlbs
