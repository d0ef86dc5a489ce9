#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "lct/metric.hpp"
#include "lct/symplectic.hpp"

namespace lct {

// Truncated multi-mode Fock space with per-mode cutoff n_max; basis ordered
// lexicographically by (n_0, ..., n_{D-1}) with n_0 the most significant.
struct FockSpace {
  int n_modes;
  int n_max;

  FockSpace(int modes, int cutoff) : n_modes(modes), n_max(cutoff) {
    if (modes < 1 || cutoff < 1) throw std::invalid_argument("FockSpace: modes, n_max >= 1");
  }

  long dim() const {
    long d = 1;
    for (int k = 0; k < n_modes; ++k) d *= (n_max + 1);
    return d;
  }

  std::vector<int> occupation(long index) const {
    std::vector<int> n(n_modes);
    for (int k = n_modes - 1; k >= 0; --k) {
      n[k] = static_cast<int>(index % (n_max + 1));
      index /= (n_max + 1);
    }
    return n;
  }

  long index(const std::vector<int>& n) const {
    long idx = 0;
    for (int k = 0; k < n_modes; ++k) idx = idx * (n_max + 1) + n[k];
    return idx;
  }

  bool operator==(const FockSpace& o) const {
    return n_modes == o.n_modes && n_max == o.n_max;
  }
};

struct FockOperator {
  FockSpace space;
  CMat matrix;
};

// Annihilation operator for one mode: <n - e_mu| z_mu |n> = sqrt(n_mu).
inline FockOperator annihilation(const FockSpace& space, int mode) {
  if (mode < 0 || mode >= space.n_modes)
    throw std::invalid_argument("annihilation: mode out of range");
  const long dim = space.dim();
  CMat m = CMat::Zero(dim, dim);
  for (long col = 0; col < dim; ++col) {
    std::vector<int> n = space.occupation(col);
    if (n[mode] == 0) continue;
    const double amp = std::sqrt(static_cast<double>(n[mode]));
    n[mode] -= 1;
    m(space.index(n), col) = amp;
  }
  return FockOperator{space, m};
}

inline FockOperator creation(const FockSpace& space, int mode) {
  FockOperator a = annihilation(space, mode);
  return FockOperator{space, a.matrix.adjoint()};
}

// LCT-invariant quadratic operator z+; diagonal in the occupation basis with
// entries |n|/2 + D/4 (built diagonally so the truncated top level carries
// the exact spectrum too).
inline FockOperator invariant_zplus(const FockSpace& space) {
  const long dim = space.dim();
  CMat m = CMat::Zero(dim, dim);
  for (long i = 0; i < dim; ++i) {
    const std::vector<int> n = space.occupation(i);
    long total = 0;
    for (int v : n) total += v;
    m(i, i) = 0.5 * total + 0.25 * space.n_modes;
  }
  return FockOperator{space, m};
}

// Quasi-particle number operator K = 2 z+ - (D/2) I, eigenvalues |n|.
inline FockOperator bosonic_number(const FockSpace& space) {
  FockOperator zp = invariant_zplus(space);
  return FockOperator{space,
                      2.0 * zp.matrix - 0.5 * space.n_modes *
                          CMat::Identity(space.dim(), space.dim())};
}

// 1D dispersion operator N11+ = 4 P11 z+, eigenvalues (2n+1) P11.
inline FockOperator dispersion_operator(const FockSpace& space, double p11) {
  if (space.n_modes != 1) throw std::invalid_argument("dispersion_operator: D = 1 required");
  if (!(p11 > 0.0)) throw std::invalid_argument("dispersion_operator: P11 must be > 0");
  FockOperator zp = invariant_zplus(space);
  return FockOperator{space, 4.0 * p11 * zp.matrix};
}

// Hamiltonian <p>^2/(2m) + 4 P11 z+ / m; eigenvalues <p>^2/(2m) + (2|n|+D) P11/m.
inline FockOperator covariant_hamiltonian(const FockSpace& space, double p_mean, double mass,
                                          double p11) {
  if (!(mass > 0.0)) throw std::invalid_argument("covariant_hamiltonian: mass must be > 0");
  FockOperator zp = invariant_zplus(space);
  const long dim = space.dim();
  return FockOperator{space, (p_mean * p_mean / (2.0 * mass)) * CMat::Identity(dim, dim) +
                                 (4.0 * p11 / mass) * zp.matrix};
}

// Normalized oscillator eigenfunction
//   psi_n(x) = (2B/pi)^{1/4} H_n(u) / sqrt(2^n n!) * exp(-B (x-<x>)^2 + i <p> x),
// u = sqrt(2B) (x - <x>), with the Hermite factor evaluated through the
// normalized three-term recurrence to avoid overflow.
inline Complex hermite_wavefunction(int n, double b, double p_mean, double x_mean, double x) {
  if (n < 0) throw std::invalid_argument("hermite_wavefunction: n >= 0 required");
  if (!(b > 0.0)) throw std::invalid_argument("hermite_wavefunction: B must be > 0");
  const double u = std::sqrt(2.0 * b) * (x - x_mean);
  // h_k = H_k(u) / sqrt(2^k k!)
  double hm1 = 1.0, h = 1.0;
  if (n >= 1) h = std::sqrt(2.0) * u;
  for (int k = 2; k <= n; ++k) {
    const double next = u * std::sqrt(2.0 / k) * h - std::sqrt((k - 1.0) / k) * hm1;
    hm1 = h;
    h = next;
  }
  const double norm = std::pow(2.0 * b / M_PI, 0.25);
  return norm * h * std::exp(Complex(-b * (x - x_mean) * (x - x_mean), p_mean * x));
}

// Uniform periodic 1D grid.
struct Grid1D {
  double x_min, x_max;
  int n_points;

  Grid1D(double lo, double hi, int n) : x_min(lo), x_max(hi), n_points(n) {
    if (!(hi > lo) || n < 64) throw std::invalid_argument("Grid1D: need x_max > x_min, n >= 64");
  }

  double length() const { return x_max - x_min; }
  double dx() const { return length() / n_points; }

  Vec points() const {
    Vec p(n_points);
    for (int i = 0; i < n_points; ++i) p(i) = x_min + i * dx();
    return p;
  }
};

struct GridOperator {
  Grid1D grid;
  CMat matrix;
};

namespace detail {

// Spectral momentum operator -i d/dx on the periodic grid, assembled through
// the explicit unitary DFT matrix (Nyquist mode mapped to zero).
inline CMat grid_momentum(const Grid1D& g) {
  const int n = g.n_points;
  CMat f(n, n);
  const double s = 1.0 / std::sqrt(static_cast<double>(n));
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      f(j, k) = s * std::exp(Complex(0, -2.0 * M_PI * j * k / n));
  Vec kappa(n);
  for (int k = 0; k < n; ++k) {
    int freq = (k <= n / 2) ? k : k - n;
    if (2 * k == n) freq = 0;
    kappa(k) = 2.0 * M_PI * freq / g.length();
  }
  return f.adjoint() * kappa.cast<Complex>().asDiagonal() * f;
}

}  // namespace detail

// Position-space realization of z+ for a 1D minimal-uncertainty triple:
//   z+ = (1/2) [ X (p-<p>)^2 - rho ((p-<p>)(x-<x>) + (x-<x>)(p-<p>)) + P (x-<x>)^2 ],
// P derived from the minimal-uncertainty condition.
inline GridOperator grid_zplus(double x_var, double rho, const MeanVector& means,
                               const Grid1D& grid) {
  if (means.dim() != 1) throw std::invalid_argument("grid_zplus: 1D means required");
  if (!(x_var > 0.0)) throw std::invalid_argument("grid_zplus: X must be > 0");
  const double p_var = (0.25 + rho * rho) / x_var;
  const int n = grid.n_points;
  const CMat p = detail::grid_momentum(grid) -
                 means.p_means(0) * CMat::Identity(n, n);
  CMat x = CMat::Zero(n, n);
  const Vec pts = grid.points();
  for (int i = 0; i < n; ++i) x(i, i) = pts(i) - means.x_means(0);
  const CMat op =
      0.5 * (x_var * p * p - rho * (p * x + x * p) + p_var * x * x);
  return GridOperator{grid, op};
}

struct QuadSpec {
  int nodes = 201;
  double p_halfwidth;
  double x_halfwidth;
};

// Phase-space completeness check: integrates |<z|psi>|^2 dp dx / (2 pi) over
// the window, with <z| the ground coherent state of parameter B centered at
// (p0, x0).  psi is sampled on the grid and assumed normalized.
inline double resolution_of_identity_check(const CVec& psi, const Grid1D& grid, double b,
                                           const QuadSpec& quad) {
  if (psi.size() != grid.n_points)
    throw std::invalid_argument("resolution_of_identity_check: sample/grid size mismatch");
  const Vec pts = grid.points();
  const double dx = grid.dx();
  // Boundary guard: the window must actually contain the state.
  const double edge = std::max(std::abs(psi(0)), std::abs(psi(psi.size() - 1)));
  if (edge > 1e-8) throw std::invalid_argument("resolution_of_identity_check: grid too narrow");
  const int m = quad.nodes;
  const double dp0 = 2.0 * quad.p_halfwidth / (m - 1);
  const double dx0 = 2.0 * quad.x_halfwidth / (m - 1);
  double total = 0.0;
  for (int ip = 0; ip < m; ++ip) {
    const double p0 = -quad.p_halfwidth + ip * dp0;
    const double wp = (ip == 0 || ip == m - 1) ? 0.5 : 1.0;
    for (int ix = 0; ix < m; ++ix) {
      const double x0 = -quad.x_halfwidth + ix * dx0;
      const double wx = (ix == 0 || ix == m - 1) ? 0.5 : 1.0;
      Complex overlap = 0.0;
      for (int i = 0; i < grid.n_points; ++i)
        overlap += std::conj(hermite_wavefunction(0, b, p0, x0, pts(i))) * psi(i) * dx;
      total += wp * wx * std::norm(overlap);
    }
  }
  return total * dp0 * dx0 / (2.0 * M_PI);
}

}  // namespace lct
