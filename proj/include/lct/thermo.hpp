#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "lct/fock.hpp"

namespace lct {

// Single-particle 3D partition function of the isotropic spectrum
// (2n1+2n2+2n3+3) B/m:  Z = 1/(8 sinh^3(beta B / m)).
inline double partition_single_3d(double beta, double b, double m) {
  if (!(beta > 0.0 && b > 0.0 && m > 0.0))
    throw std::invalid_argument("partition_single_3d: positive arguments required");
  const double s = std::sinh(beta * b / m);
  return 1.0 / (8.0 * s * s * s);
}

inline double partition_single_1d(double beta, double b, double m) {
  if (!(beta > 0.0 && b > 0.0 && m > 0.0))
    throw std::invalid_argument("partition_single_1d: positive arguments required");
  return 1.0 / (2.0 * std::sinh(beta * b / m));
}

// Thermal de Broglie wavelength lambda = h sqrt(beta / (2 pi m)).
inline double thermal_wavelength(double kT, double m, double h) {
  if (!(kT > 0.0 && m > 0.0 && h > 0.0))
    throw std::invalid_argument("thermal_wavelength: positive arguments required");
  return h * std::sqrt(1.0 / (kT * 2.0 * M_PI * m));
}

// Momentum-variance scale fixed by thermodynamics:
// B = m lambda_th / (2 beta V^{1/3}) = hbar sqrt(2 pi m kT) / (4 pi V^{1/3}).
inline double variance_from_thermo(double kT, double v, double m, double h) {
  if (!(kT > 0.0 && v > 0.0 && m > 0.0 && h > 0.0))
    throw std::invalid_argument("variance_from_thermo: positive arguments required");
  const double beta = 1.0 / kT;
  return m * thermal_wavelength(kT, m, h) / (2.0 * beta * std::cbrt(v));
}

// Effective oscillator frequency omega = 2B/(m hbar) = sqrt(kT/(2 pi m)) / V^{1/3}
// (natural units hbar = 1, h = 2 pi).
inline double effective_frequency(double kT, double v, double m) {
  if (!(kT > 0.0 && v > 0.0 && m > 0.0))
    throw std::invalid_argument("effective_frequency: positive arguments required");
  return std::sqrt(kT / (2.0 * M_PI * m)) / std::cbrt(v);
}

// log Z_N = N log Z - log Gamma(N+1) for N indiscernible particles.
inline double log_partition_n(long n, double beta, double b, double m) {
  if (n < 1) throw std::invalid_argument("log_partition_n: N >= 1 required");
  return n * std::log(partition_single_3d(beta, b, m)) - std::lgamma(static_cast<double>(n) + 1.0);
}

// Dimensionless correction variable x = beta B / m = lambda_th / (2 V^{1/3}).
inline double correction_variable(double kT, double v, double m, double h) {
  return thermal_wavelength(kT, m, h) / (2.0 * std::cbrt(v));
}

// Quantum-corrected state equation P = (N kT / V) * x coth x.
inline double pressure(long n, double kT, double v, double m, double h) {
  if (n < 1 || !(kT > 0.0 && v > 0.0 && m > 0.0 && h > 0.0))
    throw std::invalid_argument("pressure: positive arguments required");
  const double x = correction_variable(kT, v, m, h);
  return (n * kT / v) * x / std::tanh(x);
}

// Helmholtz free energy F = -kT log Z_N with B tied to (T, V) through the
// variance relation.
inline double free_energy(long n, double kT, double v, double m, double h) {
  const double b = variance_from_thermo(kT, v, m, h);
  return -kT * log_partition_n(n, 1.0 / kT, b, m);
}

// Diagonal canonical density matrix in the 3D occupation basis, stored as its
// weight vector (a dense matrix at the truncations required for a 1e-12 tail
// would be hundreds of megabytes).
struct CanonicalDensity {
  FockSpace space;
  Vec weights;  // q_n ordered per FockSpace indexing, sum = 1
  double entropy_over_k;
};

inline CanonicalDensity canonical_density_and_entropy(double beta, double b, double m,
                                                      int n_max) {
  if (!(beta > 0.0 && b > 0.0 && m > 0.0) || n_max < 1)
    throw std::invalid_argument("canonical_density_and_entropy: positive arguments required");
  const double x = beta * b / m;
  // Tail estimate: weight beyond the cutoff is bounded by ~e^{-2 x n_max}/Z-ish.
  if (std::exp(-2.0 * x * n_max) > 1e-12)
    throw std::invalid_argument("canonical_density_and_entropy: truncation too small for tail < 1e-12");
  FockSpace space(3, n_max);
  const long dim = space.dim();
  Vec q(dim);
  for (long i = 0; i < dim; ++i) {
    const std::vector<int> n = space.occupation(i);
    q(i) = std::exp(-x * (2.0 * (n[0] + n[1] + n[2]) + 3.0));
  }
  q /= q.sum();
  double s = 0.0;
  for (long i = 0; i < dim; ++i)
    if (q(i) > 0.0) s -= q(i) * std::log(q(i));
  return CanonicalDensity{space, q, s};
}

// Closed-form entropy of the same ensemble, S/k = beta U + log Z with
// U = -d log Z / d beta = 3 (B/m) coth(beta B/m).
inline double entropy_closed_form(double beta, double b, double m) {
  const double x = beta * b / m;
  return 3.0 * x / std::tanh(x) + std::log(partition_single_3d(beta, b, m));
}

// 1D coherent-frame trace of e^{-beta H}:
//   Z = (1/2 pi) Int <z| e^{-beta H} |z> dp dx,
// evaluated by tensor trapezoid quadrature in the rescaled variables
// u = sqrt(B) x0, v = p0/(2 sqrt(B)) (dp dx = 2 du dv), with the coherent
// state expanded in the occupation basis: |<n|z>|^2 = e^{-r^2} r^{2n} / n!.
struct TraceQuadSpec {
  int nodes = 241;
  double radius = 8.0;  // window half-width in the rescaled variables
};

inline double coherent_trace_partition(double beta, double b, double m,
                                       const TraceQuadSpec& quad = TraceQuadSpec{}) {
  if (!(beta > 0.0 && b > 0.0 && m > 0.0))
    throw std::invalid_argument("coherent_trace_partition: positive arguments required");
  const double x = beta * b / m;
  // Occupation cutoff: Boltzmann weight e^{-2xn} and the Poisson factor both
  // decay; keep terms until the largest possible contribution is negligible.
  const double r2max = 2.0 * quad.radius * quad.radius;
  int n_max = 8;
  while (std::exp(-2.0 * x * n_max) * 1.0 > 1e-16 && n_max < 4000) ++n_max;
  n_max = std::max(n_max, static_cast<int>(3.0 * r2max) + 16);
  std::vector<double> boltz(n_max + 1), lfact(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    boltz[n] = std::exp(-x * (2.0 * n + 1.0));
    lfact[n] = std::lgamma(n + 1.0);
  }
  const int mnodes = quad.nodes;
  const double step = 2.0 * quad.radius / (mnodes - 1);
  double total = 0.0;
  for (int iu = 0; iu < mnodes; ++iu) {
    const double u = -quad.radius + iu * step;
    const double wu = (iu == 0 || iu == mnodes - 1) ? 0.5 : 1.0;
    for (int iv = 0; iv < mnodes; ++iv) {
      const double v = -quad.radius + iv * step;
      const double wv = (iv == 0 || iv == mnodes - 1) ? 0.5 : 1.0;
      const double r2 = u * u + v * v;
      double diag = 0.0;
      const double lr2 = r2 > 0.0 ? std::log(r2) : -1e300;
      for (int n = 0; n <= n_max; ++n) {
        const double pois = (n == 0) ? std::exp(-r2) : std::exp(-r2 + n * lr2 - lfact[n]);
        const double term = boltz[n] * pois;
        diag += term;
        if (n > r2 && term < 1e-18 * (diag + 1e-300)) break;
      }
      total += wu * wv * diag;
    }
  }
  // dp dx = 2 du dv and the 1/(2 pi) measure give a net 1/pi.
  return total * step * step / M_PI;
}

}  // namespace lct
