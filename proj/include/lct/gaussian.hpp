#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "lct/metric.hpp"
#include "lct/symplectic.hpp"

namespace lct {

// Minimal-uncertainty Gaussian state: means, covariance blocks, metric, and
// the derived complex quadratic-form parameter B of its wavefunction.
struct GaussianState {
  Metric metric;
  MeanVector means;
  CovarianceBlocks cov;
  CMat b;  // cached B matrix
};

namespace detail {

// Momentum block of a minimal-uncertainty covariance:
// P = (1/4) eta X^{-1} eta + rho X^{-1} rho^T.
inline Mat minimal_p_block(const Metric& metric, const Mat& x, const Mat& rho) {
  const Mat eta = metric.eta();
  const Mat xinv = x.inverse();
  Mat p = 0.25 * eta * xinv * eta + rho * xinv * rho.transpose();
  return 0.5 * (p + p.transpose()).eval();
}

}  // namespace detail

// Residual of the minimal-uncertainty condition on the P block.
inline double minimal_residual(const GaussianState& s) {
  return (s.cov.P - detail::minimal_p_block(s.metric, s.cov.X, s.cov.rho)).cwiseAbs().maxCoeff();
}

// B = (1/4)(eta + 2i rho) X^{-1} eta; reduces to 1/(4X) - i rho/(2X) in the
// 1D eta = -1 convention.
inline CMat b_matrix_from_blocks(const Metric& metric, const Mat& x, const Mat& rho) {
  const int d = metric.dim();
  if (x.rows() != d) throw std::invalid_argument("b_matrix: dimension mismatch");
  Eigen::FullPivLU<Mat> lu(x);
  if (!lu.isInvertible()) throw std::invalid_argument("b_matrix: singular X");
  const Mat xinv = lu.inverse();
  const Mat eta = metric.eta();
  return 0.25 * (eta.cast<Complex>() + Complex(0, 2) * rho.cast<Complex>()) *
         xinv.cast<Complex>() * eta.cast<Complex>();
}

inline CMat b_matrix(const GaussianState& s) { return s.b; }

inline GaussianState make_minimal_state(const MeanVector& means, const Mat& x, const Mat& rho,
                                        const Metric& metric) {
  const int d = metric.dim();
  if (means.dim() != d || x.rows() != d || x.cols() != d || rho.rows() != d || rho.cols() != d)
    throw std::invalid_argument("make_minimal_state: dimension mismatch");
  if ((x - x.transpose()).cwiseAbs().maxCoeff() > 1e-12 * (1.0 + x.cwiseAbs().maxCoeff()))
    throw std::invalid_argument("make_minimal_state: X must be symmetric");
  Eigen::FullPivLU<Mat> lu(x);
  if (!lu.isInvertible()) throw std::invalid_argument("make_minimal_state: singular X");
  const Mat p = detail::minimal_p_block(metric, x, rho);
  return GaussianState{metric, means, CovarianceBlocks(p, x, rho),
                       b_matrix_from_blocks(metric, x, rho)};
}

// Covariance factorization C = L^T diag(eta,eta) L with
// L = [[bf, 0], [2 a c bf, a]]:  a is the principal square root of eta*X
// (for definite metrics this is the real/imaginary root pattern sqrt(X) per
// positive direction, i*sqrt(X) per negative one), bf = a^{-1}/2, and c is
// solved from the cross block, c = X^{-1} rho^T a.
inline FactorTriple factorize_covariance(const GaussianState& s) {
  const Metric& metric = s.metric;
  const int d = metric.dim();
  if (minimal_residual(s) > 1e-8)
    throw std::invalid_argument("factorize_covariance: state is not minimal-uncertainty");
  const CMat eta_x = (metric.eta() * s.cov.X).cast<Complex>();
  const CMat a = eta_x.sqrt();
  Eigen::FullPivLU<CMat> lu(a);
  if (!lu.isInvertible()) throw std::invalid_argument("factorize_covariance: singular factor");
  const CMat bf = 0.5 * lu.inverse();
  const CMat c = s.cov.X.inverse().cast<Complex>() * s.cov.rho.transpose().cast<Complex>() * a;
  FactorTriple f{a, bf, c};

  // Reassembly guard: L^T diag(eta, eta) L must reproduce the covariance.
  CMat e = CMat::Zero(2 * d, 2 * d);
  e.block(0, 0, d, d) = metric.eta().cast<Complex>();
  e.block(d, d, d, d) = metric.eta().cast<Complex>();
  const CMat l = detail::factor_lower(f);
  const CMat re = l.transpose() * e * l;
  if ((re - s.cov.assembled().cast<Complex>()).cwiseAbs().maxCoeff() > 1e-9)
    throw std::runtime_error("factorize_covariance: reassembly check failed");
  return f;
}

// Reassemble covariance blocks from a factor triple (test oracle helper).
inline CovarianceBlocks reassemble_covariance(const FactorTriple& f, const Metric& metric) {
  const int d = metric.dim();
  CMat e = CMat::Zero(2 * d, 2 * d);
  e.block(0, 0, d, d) = metric.eta().cast<Complex>();
  e.block(d, d, d, d) = metric.eta().cast<Complex>();
  const CMat l = detail::factor_lower(f);
  const CMat re = l.transpose() * e * l;
  return CovarianceBlocks(re.block(0, 0, d, d).real(), re.block(d, d, d, d).real(),
                          re.block(0, d, d, d).real());
}

inline GaussianState apply_lct(const GaussianState& s, const LctMatrix& m) {
  if (s.metric != m.metric) throw std::invalid_argument("apply_lct: metric mismatch");
  const MeanVector means = transform_means(s.means, m);
  const CovarianceBlocks cov = transform_covariance(s.cov, m);
  GaussianState out{s.metric, means, cov, b_matrix_from_blocks(s.metric, cov.X, cov.rho)};
  if (minimal_residual(out) > 1e-9)
    throw std::runtime_error("apply_lct: minimal-uncertainty invariant drifted");
  return out;
}

// Coordinate wavefunction
//   psi(x) = [(2 pi)^D |det X|]^{-1/4}
//            * exp(-(x-<x>)^T B (x-<x>) - i <p_mu> x^mu)
// with the raised index in the phase (x^mu = eta^{mu nu} x_nu) and the global
// phase fixed to zero.
inline std::vector<Complex> wavefunction_eval(const GaussianState& s,
                                              const std::vector<Vec>& points) {
  const int d = s.metric.dim();
  const Mat re_b = s.b.real();
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (re_b + re_b.transpose()));
  if (es.eigenvalues().minCoeff() <= 0.0)
    throw std::invalid_argument("wavefunction_eval: Re(B) must be positive definite");
  const double norm = std::pow(std::pow(2.0 * M_PI, d) * std::abs(s.cov.X.determinant()), -0.25);
  const Vec phase_vec = s.metric.eta() * s.means.p_means;  // p^mu components
  std::vector<Complex> out;
  out.reserve(points.size());
  for (const Vec& x : points) {
    if (x.size() != d) throw std::invalid_argument("wavefunction_eval: point dimension mismatch");
    const CVec dx = (x - s.means.x_means).cast<Complex>();
    const Complex quad = (dx.transpose() * s.b * dx)(0, 0);
    out.push_back(norm * std::exp(-quad - Complex(0, 1) * phase_vec.dot(x)));
  }
  return out;
}

// Overlap <z1|z2> of two 1D coherent states sharing the same real B
// (rho = 0 regime):
//   exp(-(dp)^2/(8B) - (dx)^2/(8A) - i dp (x1+x2)/2),  dp = p1-p2, A = X.
inline Complex coherent_overlap(const GaussianState& s1, const GaussianState& s2) {
  if (s1.metric.dim() != 1 || s2.metric.dim() != 1)
    throw std::invalid_argument("coherent_overlap: 1D states required");
  const Complex b1 = s1.b(0, 0), b2 = s2.b(0, 0);
  if (std::abs(b1 - b2) > 1e-12 || std::abs(b1.imag()) > 1e-12)
    throw std::invalid_argument("coherent_overlap: states must share the same real B");
  const double bb = b1.real();
  const double aa = s1.cov.X(0, 0);
  const double dp = s1.means.p_means(0) - s2.means.p_means(0);
  const double dx = s1.means.x_means(0) - s2.means.x_means(0);
  const double xsum = s1.means.x_means(0) + s2.means.x_means(0);
  return std::exp(Complex(-dp * dp / (8.0 * bb) - dx * dx / (8.0 * aa), -0.5 * dp * xsum));
}

}  // namespace lct
