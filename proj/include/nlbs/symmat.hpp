#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <functional>

#include "nlbs/errors.hpp"

namespace nlbs {

/// Symmetric matrix argument of the eigenvalue map, n in {1,2,3}.
class SymMatrix {
public:
    SymMatrix() : m_(Eigen::MatrixXd::Zero(1, 1)) {}
    explicit SymMatrix(const Eigen::MatrixXd& m);
    static SymMatrix zero(int n);
    static SymMatrix identity(int n);
    static SymMatrix diag(std::initializer_list<double> d);
    static SymMatrix scalar(double a) { return SymMatrix(Eigen::MatrixXd::Constant(1, 1, a)); }

    int n() const { return static_cast<int>(m_.rows()); }
    double operator()(int i, int j) const { return m_(i, j); }
    const Eigen::MatrixXd& mat() const { return m_; }
    double trace() const { return m_.trace(); }
    double opnorm() const;  // spectral norm |A|

private:
    Eigen::MatrixXd m_;
};

/// Eigen-decomposition with ascending eigenvalues and a deterministic
/// sign convention: first nonzero component of each eigenvector positive.
struct SpectralDecomp {
    Eigen::VectorXd eigenvalues;   // ascending
    Eigen::MatrixXd eigenvectors;  // orthonormal columns
};

SpectralDecomp spectral_decompose(const SymMatrix& a);

/// Market volatility loading: nonsingular sigma with derived quantities.
class VolModel {
public:
    explicit VolModel(const Eigen::MatrixXd& sigma);
    static VolModel identity(int n) { return VolModel(Eigen::MatrixXd::Identity(n, n)); }
    static VolModel scalar(double s) { return VolModel(Eigen::MatrixXd::Constant(1, 1, s)); }

    int n() const { return static_cast<int>(sigma_.rows()); }
    const Eigen::MatrixXd& sigma() const { return sigma_; }
    const Eigen::MatrixXd& Sigma() const { return big_sigma_; }  // sigma sigma^t
    double opnorm_sigma() const { return opnorm_sigma_; }
    double opnorm_sigma_inv() const { return opnorm_sigma_inv_; }
    double sigma_min() const { return 1.0 / opnorm_sigma_inv_; }

private:
    Eigen::MatrixXd sigma_;
    Eigen::MatrixXd big_sigma_;
    double opnorm_sigma_ = 0.0;
    double opnorm_sigma_inv_ = 0.0;
};

/// Sum of f over the spectrum: tr f(A). Propagates std::domain_error from f.
double trace_apply(const std::function<double(double)>& f, const SymMatrix& a);

enum class PsdVerdict : std::uint8_t {
    ordered,       // B - A is PSD
    reverse,       // A - B is PSD (and not both)
    incomparable,  // indefinite difference
};

/// Partial-order test, tolerance 1e-10 on the smallest eigenvalue of B - A.
PsdVerdict psd_order(const SymMatrix& a, const SymMatrix& b);
bool psd_leq(const SymMatrix& a, const SymMatrix& b);

struct HarmonicMeanReport {
    bool hypothesis_holds = false;   // a <= b c (b+c)^{-1} (parallel-sum form)
    bool conclusion_holds = false;   // sampled trace inequality passed
    double worst_sample_margin = 0;  // max over samples of lhs - rhs (<= tol when passing)
    int samples = 0;
};

/// Checks a <= bc(b+c)^{-1} for PSD b, c, and when it holds validates the
/// trace inequality tr[(A1+A2)^2 a] <= tr[b A1^2] + tr[c A2^2] on seeded
/// random samples.
HarmonicMeanReport harmonic_mean_check(const SymMatrix& a, const SymMatrix& b,
                                       const SymMatrix& c, int samples = 100,
                                       std::uint64_t seed = 20240801, double tol = 1e-9);

/// U A U^t for the permutation U sending axis i to perm[i].
SymMatrix permute_conjugate(const SymMatrix& a, const std::vector<int>& perm);

}  // namespace nlbs
