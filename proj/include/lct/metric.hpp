#pragma once

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace lct {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using Complex = std::complex<double>;

// Diagonal pseudo-Euclidean metric of signature (d_plus, d_minus):
// eta = diag(+1 x d_plus, -1 x d_minus).  The positive directions come
// first; this ordering is fixed globally.
class Metric {
 public:
  Metric(int d_plus, int d_minus) : plus_(d_plus), minus_(d_minus) {
    if (d_plus < 0 || d_minus < 0 || d_plus + d_minus < 1)
      throw std::invalid_argument("Metric: signature counts must be nonnegative, dim >= 1");
  }

  int dim() const { return plus_ + minus_; }
  int d_plus() const { return plus_; }
  int d_minus() const { return minus_; }

  // Sign eta_{mumu} of direction mu.
  double sign(int mu) const {
    if (mu < 0 || mu >= dim()) throw std::invalid_argument("Metric::sign: index out of range");
    return mu < plus_ ? 1.0 : -1.0;
  }

  Mat eta() const {
    Mat e = Mat::Zero(dim(), dim());
    for (int i = 0; i < dim(); ++i) e(i, i) = sign(i);
    return e;
  }

  bool operator==(const Metric& o) const { return plus_ == o.plus_ && minus_ == o.minus_; }
  bool operator!=(const Metric& o) const { return !(*this == o); }

 private:
  int plus_;
  int minus_;
};

}  // namespace lct
