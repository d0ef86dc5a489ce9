#pragma once

#include <random>
#include <stdexcept>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "lct/metric.hpp"

namespace lct {

// Phase-space pairing Omega_eta = [[0, eta], [-eta, 0]], a 2D x 2D real matrix.
inline Mat omega_matrix(const Metric& metric) {
  const int d = metric.dim();
  Mat om = Mat::Zero(2 * d, 2 * d);
  om.block(0, d, d, d) = metric.eta();
  om.block(d, 0, d, d) = -metric.eta();
  return om;
}

// Linear canonical transformation over a pseudo-Euclidean metric, stored as
// the four D x D blocks of M = [[a, c], [b, d]].  Row vectors (<p> <x>)
// transform by right-multiplication with M; covariance blocks transform by
// congruence M^T C M.
struct LctMatrix {
  Metric metric;
  Mat a, b, c, d;

  LctMatrix(const Metric& m, Mat a_, Mat b_, Mat c_, Mat d_)
      : metric(m), a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
    const int dd = metric.dim();
    auto ok = [dd](const Mat& x) { return x.rows() == dd && x.cols() == dd; };
    if (!ok(a) || !ok(b) || !ok(c) || !ok(d))
      throw std::invalid_argument("LctMatrix: block dimensions inconsistent with metric");
  }

  Mat assembled() const {
    const int dd = metric.dim();
    Mat m(2 * dd, 2 * dd);
    m.block(0, 0, dd, dd) = a;
    m.block(0, dd, dd, dd) = c;
    m.block(dd, 0, dd, dd) = b;
    m.block(dd, dd, dd, dd) = d;
    return m;
  }

  static LctMatrix from_assembled(const Metric& metric, const Mat& m) {
    const int dd = metric.dim();
    if (m.rows() != 2 * dd || m.cols() != 2 * dd)
      throw std::invalid_argument("LctMatrix: assembled matrix has wrong size");
    return LctMatrix(metric, m.block(0, 0, dd, dd), m.block(dd, 0, dd, dd),
                     m.block(0, dd, dd, dd), m.block(dd, dd, dd, dd));
  }

  static LctMatrix identity(const Metric& metric) {
    const int dd = metric.dim();
    return LctMatrix(metric, Mat::Identity(dd, dd), Mat::Zero(dd, dd), Mat::Zero(dd, dd),
                     Mat::Identity(dd, dd));
  }
};

struct MeanVector {
  Vec p_means;
  Vec x_means;

  MeanVector(Vec p, Vec x) : p_means(std::move(p)), x_means(std::move(x)) {
    if (p_means.size() != x_means.size())
      throw std::invalid_argument("MeanVector: p and x lengths differ");
    if (!p_means.allFinite() || !x_means.allFinite())
      throw std::invalid_argument("MeanVector: entries must be finite");
  }

  int dim() const { return static_cast<int>(p_means.size()); }
};

// Second central moments: momentum block P, coordinate block X, symmetrized
// cross block rho.  rho is not symmetric in general for D > 1.
struct CovarianceBlocks {
  Mat P, X, rho;

  CovarianceBlocks(Mat P_, Mat X_, Mat rho_)
      : P(std::move(P_)), X(std::move(X_)), rho(std::move(rho_)) {
    const auto d = P.rows();
    if (P.cols() != d || X.rows() != d || X.cols() != d || rho.rows() != d || rho.cols() != d)
      throw std::invalid_argument("CovarianceBlocks: inconsistent block dimensions");
  }

  int dim() const { return static_cast<int>(P.rows()); }

  // [[P, rho], [rho^T, X]]
  Mat assembled() const {
    const int d = dim();
    Mat m(2 * d, 2 * d);
    m.block(0, 0, d, d) = P;
    m.block(0, d, d, d) = rho;
    m.block(d, 0, d, d) = rho.transpose();
    m.block(d, d, d, d) = X;
    return m;
  }
};

inline double symplectic_residual(const LctMatrix& m) {
  const Mat om = omega_matrix(m.metric);
  const Mat a = m.assembled();
  return (a.transpose() * om * a - om).cwiseAbs().maxCoeff();
}

inline bool is_symplectic(const LctMatrix& m, double tol) {
  return symplectic_residual(m) < tol;
}

inline LctMatrix compose(const LctMatrix& m1, const LctMatrix& m2) {
  if (m1.metric != m2.metric) throw std::invalid_argument("compose: metric mismatch");
  return LctMatrix::from_assembled(m1.metric, m1.assembled() * m2.assembled());
}

// Symplectic inverse M^{-1} = Omega^{-1} M^T Omega = -Omega M^T Omega
// (Omega^2 = -I), avoiding a general matrix inversion.
inline LctMatrix inverse(const LctMatrix& m) {
  if (!is_symplectic(m, 1e-8)) throw std::invalid_argument("inverse: input is not symplectic");
  const Mat om = omega_matrix(m.metric);
  return LctMatrix::from_assembled(m.metric, -om * m.assembled().transpose() * om);
}

// Deterministic sampler over Sp(2D+, 2D-): exponential of the Lie-algebra
// element Omega_eta * S with S symmetric, entries uniform in [-0.5, 0.5].
inline LctMatrix random_lct(const Metric& metric, unsigned long long seed) {
  const int n = 2 * metric.dim();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  Mat s(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) s(i, j) = s(j, i) = 0.5 * uni(rng);
  const Mat gen = omega_matrix(metric) * s;
  return LctMatrix::from_assembled(metric, gen.exp());
}

// One-parameter family of transformations mixing p and x through a harmonic
// rotation: blocks (a, b, c, d) = (cos t, mw sin t, -sin t / mw, cos t) on the
// 1D metric (0, 1).
inline LctMatrix special_rotation_lct(double theta, double m_omega) {
  if (!(m_omega > 0.0)) throw std::invalid_argument("special_rotation_lct: m_omega must be > 0");
  Mat a(1, 1), b(1, 1), c(1, 1), d(1, 1);
  a << std::cos(theta);
  b << m_omega * std::sin(theta);
  c << -std::sin(theta) / m_omega;
  d << std::cos(theta);
  return LctMatrix(Metric(0, 1), a, b, c, d);
}

inline MeanVector transform_means(const MeanVector& v, const LctMatrix& m) {
  const int d = m.metric.dim();
  if (v.dim() != d) throw std::invalid_argument("transform_means: dimension mismatch");
  Eigen::RowVectorXd row(2 * d);
  row.head(d) = v.p_means.transpose();
  row.tail(d) = v.x_means.transpose();
  Eigen::RowVectorXd out = row * m.assembled();
  return MeanVector(out.head(d).transpose(), out.tail(d).transpose());
}

inline CovarianceBlocks transform_covariance(const CovarianceBlocks& c, const LctMatrix& m) {
  const int d = m.metric.dim();
  if (c.dim() != d) throw std::invalid_argument("transform_covariance: dimension mismatch");
  const Mat a = m.assembled();
  const Mat out = a.transpose() * c.assembled() * a;
  // Re-symmetrize the diagonal blocks to kill roundoff asymmetry; the cross
  // block is genuinely non-symmetric for D > 1 and is left as computed.
  Mat p = out.block(0, 0, d, d);
  Mat x = out.block(d, d, d, d);
  p = 0.5 * (p + p.transpose()).eval();
  x = 0.5 * (x + x.transpose()).eval();
  return CovarianceBlocks(p, x, out.block(0, d, d, d));
}

// Determinant of the assembled covariance matrix (1D: P*X - rho^2), an LCT
// invariant.
inline double covariance_invariant(const CovarianceBlocks& c) { return c.assembled().determinant(); }

// Covariance factorization triple (a, b_factor, c) with a * b_factor = I/2.
struct FactorTriple {
  CMat a;
  CMat b_factor;
  CMat c;
};

namespace detail {

// Lower-triangular factor L = [[bf, 0], [2*a*c*bf, a]] whose congruence with
// diag(eta, eta) reassembles the covariance matrix.
inline CMat factor_lower(const FactorTriple& f) {
  const int d = static_cast<int>(f.a.rows());
  CMat l = CMat::Zero(2 * d, 2 * d);
  l.block(0, 0, d, d) = f.b_factor;
  l.block(d, 0, d, d) = 2.0 * f.a * f.c * f.b_factor;
  l.block(d, d, d, d) = f.a;
  return l;
}

// Inverse-side factor F = [[a, 0], [-c, bf]]; L^{-1} = 2F.
inline CMat factor_inverse_side(const FactorTriple& f) {
  const int d = static_cast<int>(f.a.rows());
  CMat g = CMat::Zero(2 * d, 2 * d);
  g.block(0, 0, d, d) = f.a;
  g.block(d, 0, d, d) = -f.c;
  g.block(d, d, d, d) = f.b_factor;
  return g;
}

}  // namespace detail

// Unitary part of an LCT acting on the reduced (whitened) operators: with the
// covariance factors of the source state and of the transformed state, the
// matrix g = 2 L M F' has the block form [[Pi, -Theta], [Theta, Pi]] and
// Omega = Pi - i*Theta is the induced pseudo-unitary rotation.
inline CMat unitary_factor(const LctMatrix& m, const FactorTriple& factors,
                           const FactorTriple& factors_out) {
  const int d = m.metric.dim();
  if (factors.a.rows() != d || factors_out.a.rows() != d)
    throw std::invalid_argument("unitary_factor: factor dimensions mismatch");
  if (std::abs(factors.a.determinant()) < 1e-300 ||
      std::abs(factors_out.a.determinant()) < 1e-300)
    throw std::invalid_argument("unitary_factor: singular factor matrices");
  const CMat g = 2.0 * detail::factor_lower(factors) * m.assembled() *
                 detail::factor_inverse_side(factors_out);
  const CMat pi = g.block(0, 0, d, d);
  const CMat theta = g.block(d, 0, d, d);
  return pi - Complex(0, 1) * theta;
}

}  // namespace lct
