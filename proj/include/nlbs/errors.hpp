#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace nlbs {

// Base for all solver-side failures (CLI maps these to exit code 3).
struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NoConvergence : SolverError {
    NoConvergence(const std::string& what, std::vector<double> residual_history = {})
        : SolverError(what), residuals(std::move(residual_history)) {}
    std::vector<double> residuals;
};

struct DomainTooSmall : SolverError {
    using SolverError::SolverError;
};

// Assembled policy operator failed the nonpositive-offdiagonal /
// weak-diagonal-dominance row check.
struct MMatrixViolation : SolverError {
    using SolverError::SolverError;
};

struct BracketDegenerate : SolverError {
    using SolverError::SolverError;
};

struct SandwichViolation : SolverError {
    SandwichViolation(const std::string& what, std::vector<double> node, double margin_)
        : SolverError(what), worst_node(std::move(node)), margin(margin_) {}
    std::vector<double> worst_node;
    double margin = 0.0;
};

struct BoundViolation : SolverError {
    BoundViolation(const std::string& what, std::vector<double> node, double margin_)
        : SolverError(what), worst_node(std::move(node)), margin(margin_) {}
    std::vector<double> worst_node;
    double margin = 0.0;
};

struct DegenerateInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace nlbs
