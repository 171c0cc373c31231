#include "nlbs/symmat.hpp"

#include <cmath>
#include <random>

namespace nlbs {

SymMatrix::SymMatrix(const Eigen::MatrixXd& m) : m_(m) {
    if (m.rows() != m.cols() || m.rows() < 1 || m.rows() > 3)
        throw DegenerateInput("SymMatrix: dimension must be 1, 2 or 3");
    if ((m - m.transpose()).cwiseAbs().maxCoeff() != 0.0)
        throw DegenerateInput("SymMatrix: entries must be exactly symmetric");
}

SymMatrix SymMatrix::zero(int n) { return SymMatrix(Eigen::MatrixXd::Zero(n, n)); }
SymMatrix SymMatrix::identity(int n) { return SymMatrix(Eigen::MatrixXd::Identity(n, n)); }

SymMatrix SymMatrix::diag(std::initializer_list<double> d) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<int>(d.size()), static_cast<int>(d.size()));
    int i = 0;
    for (double v : d) m(i, i) = v, ++i;
    return SymMatrix(m);
}

double SymMatrix::opnorm() const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m_, Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().maxCoeff();
}

SpectralDecomp spectral_decompose(const SymMatrix& a) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a.mat());
    SpectralDecomp d{es.eigenvalues(), es.eigenvectors()};
    // ascending is Eigen's convention already; fix signs
    for (int k = 0; k < d.eigenvectors.cols(); ++k) {
        for (int i = 0; i < d.eigenvectors.rows(); ++i) {
            double v = d.eigenvectors(i, k);
            if (v != 0.0) {
                if (v < 0.0) d.eigenvectors.col(k) = -d.eigenvectors.col(k);
                break;
            }
        }
    }
    return d;
}

VolModel::VolModel(const Eigen::MatrixXd& sigma) : sigma_(sigma) {
    if (sigma.rows() != sigma.cols() || sigma.rows() < 1 || sigma.rows() > 3)
        throw DegenerateInput("VolModel: sigma must be square, n in {1,2,3}");
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(sigma);
    const double smax = svd.singularValues()(0);
    const double smin = svd.singularValues()(svd.singularValues().size() - 1);
    const int n = static_cast<int>(sigma.rows());
    if (std::abs(sigma.determinant()) <= 1e-12 * std::pow(smax, n))
        throw DegenerateInput("VolModel: sigma is numerically singular");
    opnorm_sigma_ = smax;
    opnorm_sigma_inv_ = 1.0 / smin;
    big_sigma_ = sigma * sigma.transpose();
    big_sigma_ = 0.5 * (big_sigma_ + big_sigma_.transpose().eval());
}

double trace_apply(const std::function<double(double)>& f, const SymMatrix& a) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a.mat(), Eigen::EigenvaluesOnly);
    double s = 0.0;
    for (int i = 0; i < es.eigenvalues().size(); ++i) s += f(es.eigenvalues()(i));
    return s;
}

PsdVerdict psd_order(const SymMatrix& a, const SymMatrix& b) {
    if (a.n() != b.n()) throw DegenerateInput("psd_order: dimension mismatch");
    constexpr double tol = 1e-10;
    Eigen::MatrixXd d = b.mat() - a.mat();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(d, Eigen::EigenvaluesOnly);
    const double lo = es.eigenvalues().minCoeff();
    const double hi = es.eigenvalues().maxCoeff();
    if (lo >= -tol) return PsdVerdict::ordered;
    if (hi <= tol) return PsdVerdict::reverse;
    return PsdVerdict::incomparable;
}

bool psd_leq(const SymMatrix& a, const SymMatrix& b) {
    return psd_order(a, b) == PsdVerdict::ordered;
}

namespace {

bool is_psd(const Eigen::MatrixXd& m, double tol) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff() >= -tol;
}

Eigen::MatrixXd random_sym(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m(i, j) = m(j, i) = g(rng);
    return m;
}

}  // namespace

HarmonicMeanReport harmonic_mean_check(const SymMatrix& a, const SymMatrix& b,
                                       const SymMatrix& c, int samples, std::uint64_t seed,
                                       double tol) {
    const int n = a.n();
    if (b.n() != n || c.n() != n) throw DegenerateInput("harmonic_mean_check: dimension mismatch");
    if (!is_psd(b.mat(), 1e-10) || !is_psd(c.mat(), 1e-10))
        throw DegenerateInput("harmonic_mean_check: b, c must be PSD");

    constexpr double kReg = 1e-10;
    Eigen::MatrixXd s = b.mat() + c.mat() + 2.0 * kReg * Eigen::MatrixXd::Identity(n, n);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(s);
    if (!lu.isInvertible())
        throw DegenerateInput("harmonic_mean_check: b + c singular after regularization");

    // parallel sum b(b+c)^{-1}c, symmetrized against roundoff
    Eigen::MatrixXd bb = b.mat() + kReg * Eigen::MatrixXd::Identity(n, n);
    Eigen::MatrixXd cc = c.mat() + kReg * Eigen::MatrixXd::Identity(n, n);
    Eigen::MatrixXd pm = bb * lu.solve(cc);
    pm = 0.5 * (pm + pm.transpose().eval());

    HarmonicMeanReport rep;
    rep.hypothesis_holds = is_psd(pm - a.mat(), 1e-10);
    if (!rep.hypothesis_holds) return rep;

    std::mt19937_64 rng(seed);
    rep.samples = samples;
    double worst = -std::numeric_limits<double>::infinity();
    for (int k = 0; k < samples; ++k) {
        Eigen::MatrixXd a1 = random_sym(n, rng);
        Eigen::MatrixXd a2 = random_sym(n, rng);
        Eigen::MatrixXd sum = a1 + a2;
        const double lhs = (sum * sum * a.mat()).trace();
        const double rhs = (b.mat() * a1 * a1).trace() + (c.mat() * a2 * a2).trace();
        worst = std::max(worst, lhs - rhs);
    }
    rep.worst_sample_margin = worst;
    rep.conclusion_holds = worst <= tol;
    return rep;
}

SymMatrix permute_conjugate(const SymMatrix& a, const std::vector<int>& perm) {
    const int n = a.n();
    if (static_cast<int>(perm.size()) != n) throw DegenerateInput("permute_conjugate: bad permutation size");
    std::vector<bool> seen(n, false);
    for (int v : perm) {
        if (v < 0 || v >= n || seen[v]) throw DegenerateInput("permute_conjugate: not a permutation");
        seen[v] = true;
    }
    Eigen::MatrixXd u = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) u(perm[i], i) = 1.0;
    Eigen::MatrixXd m = u * a.mat() * u.transpose();
    m = 0.5 * (m + m.transpose().eval());
    return SymMatrix(m);
}

}  // namespace nlbs
