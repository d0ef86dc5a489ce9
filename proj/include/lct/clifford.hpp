#pragma once

#include <array>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "lct/fock.hpp"
#include "lct/metric.hpp"

namespace lct {

// Exact rational with small integer terms (quantum numbers only).
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d = 1) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  Rational operator+(const Rational& o) const { return {num * o.den + o.num * den, den * o.den}; }
  Rational operator-(const Rational& o) const { return {num * o.den - o.num * den, den * o.den}; }
  Rational operator*(const Rational& o) const { return {num * o.num, den * o.den}; }
  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Rational& o) const { return !(*this == o); }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

// Matrix representation of the Clifford algebra Cl(2 D+, 2 D-) on
// 2^D-dimensional spinors: generator pairs (alpha^mu, beta^mu), one pair per
// metric direction.
struct CliffordRep {
  Metric metric;
  std::vector<CMat> alpha;
  std::vector<CMat> beta;
};

namespace detail {

inline CMat kron(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline CMat pauli(char which) {
  CMat m(2, 2);
  switch (which) {
    case 'x': m << 0, 1, 1, 0; break;
    case 'y': m << 0, Complex(0, -1), Complex(0, 1), 0; break;
    case 'z': m << 1, 0, 0, -1; break;
    default: m = CMat::Identity(2, 2);
  }
  return m;
}

// Euclidean gamma matrix: Z^{k} (x) pauli (x) I^{D-1-k} tensor ladder.
inline CMat jw_gamma(int d, int slot, char which) {
  CMat g = CMat::Identity(1, 1);
  for (int k = 0; k < d; ++k) {
    if (k < slot) g = kron(g, pauli('z'));
    else if (k == slot) g = kron(g, pauli(which));
    else g = kron(g, pauli('i'));
  }
  return g;
}

}  // namespace detail

// Build the (alpha^mu, beta^mu) generators; negative-signature directions get
// a factor of i so that {alpha^mu, alpha^nu} = 2 eta^{mu nu} I and the
// Hermiticity pattern alpha^mu-dagger = eta^{mu mu} alpha^mu hold.
inline CliffordRep build_clifford(const Metric& metric) {
  const int d = metric.dim();
  if (d > 6) throw std::invalid_argument("build_clifford: D <= 6 required");
  CliffordRep rep{metric, {}, {}};
  for (int mu = 0; mu < d; ++mu) {
    const Complex phase = metric.sign(mu) > 0 ? Complex(1, 0) : Complex(0, 1);
    rep.alpha.push_back(phase * detail::jw_gamma(d, mu, 'x'));
    rep.beta.push_back(phase * detail::jw_gamma(d, mu, 'y'));
  }
  // Build-time identity guard.
  const long dim = 1L << d;
  const CMat id = CMat::Identity(dim, dim);
  auto anti = [](const CMat& a, const CMat& b) { return (a * b + b * a).eval(); };
  for (int mu = 0; mu < d; ++mu) {
    for (int nu = 0; nu < d; ++nu) {
      const double eta_ab = (mu == nu) ? metric.sign(mu) : 0.0;
      if ((anti(rep.alpha[mu], rep.alpha[nu]) - 2.0 * eta_ab * id).cwiseAbs().maxCoeff() > 1e-12 ||
          (anti(rep.beta[mu], rep.beta[nu]) - 2.0 * eta_ab * id).cwiseAbs().maxCoeff() > 1e-12 ||
          anti(rep.alpha[mu], rep.beta[nu]).cwiseAbs().maxCoeff() > 1e-12)
        throw std::runtime_error("build_clifford: anticommutator identity failed");
    }
    if ((rep.alpha[mu].adjoint() - metric.sign(mu) * rep.alpha[mu]).cwiseAbs().maxCoeff() > 1e-12 ||
        (rep.beta[mu].adjoint() - metric.sign(mu) * rep.beta[mu]).cwiseAbs().maxCoeff() > 1e-12)
      throw std::runtime_error("build_clifford: Hermiticity pattern failed");
  }
  return rep;
}

// Fermionic ladder operators zeta^mu = (alpha^mu + i beta^mu)/2.
inline std::vector<CMat> zeta_operators(const CliffordRep& rep) {
  std::vector<CMat> z;
  for (size_t mu = 0; mu < rep.alpha.size(); ++mu)
    z.push_back(0.5 * (rep.alpha[mu] + Complex(0, 1) * rep.beta[mu]));
  return z;
}

// Metric-adjusted conjugate zeta^{mu *} = eta^{mu mu} zeta^{mu}-dagger.
inline CMat zeta_star(const CliffordRep& rep, const std::vector<CMat>& zeta, int mu) {
  return rep.metric.sign(mu) * zeta[mu].adjoint().eval();
}

// Lie-algebra basis Xi^{mu nu} = (zeta^{mu *} zeta^nu - zeta^nu zeta^{mu *})/2.
inline std::vector<std::vector<CMat>> xi_generators(const CliffordRep& rep) {
  const int d = rep.metric.dim();
  const std::vector<CMat> z = zeta_operators(rep);
  std::vector<std::vector<CMat>> xi(d, std::vector<CMat>());
  for (int mu = 0; mu < d; ++mu)
    for (int nu = 0; nu < d; ++nu) {
      const CMat zs = zeta_star(rep, z, mu);
      xi[mu].push_back(0.5 * (zs * z[nu] - z[nu] * zs));
    }
  return xi;
}

// Fermionic number invariant Sigma = sum_mu zeta^mu-dagger zeta^mu.
inline CMat sigma_invariant(const CliffordRep& rep) {
  const std::vector<CMat> z = zeta_operators(rep);
  const long dim = 1L << rep.metric.dim();
  CMat s = CMat::Zero(dim, dim);
  for (const CMat& zm : z) s += zm.adjoint() * zm;
  return s;
}

struct MixedInvariantReport {
  double interior_residual;
  bool ok;
};

// Verify the mixed boson-fermion invariant: with reduced operators
// p_mu = (z_mu-dagger + z_mu)/sqrt2, x_mu = i (z_mu-dagger - z_mu)/sqrt2 on a
// truncated Fock space and a Euclidean Clifford representation,
//   [ (1/sqrt2) sum_mu (p_mu (x) alpha^mu + x_mu (x) beta^mu) ]^2
//     = K (x) I + I (x) Sigma
// on the interior occupation subspace (all n_mu <= n_max - 2).
inline MixedInvariantReport mixed_invariant_check(const CliffordRep& rep, const FockSpace& space,
                                                  double tol = 1e-10) {
  const int d = rep.metric.dim();
  if (space.n_modes != d)
    throw std::invalid_argument("mixed_invariant_check: mode count must match metric dimension");
  if (space.n_max < 4) throw std::invalid_argument("mixed_invariant_check: n_max >= 4 required");
  const long bd = space.dim();
  const long sd = 1L << d;
  const double isq = 1.0 / std::sqrt(2.0);
  CMat big = CMat::Zero(bd * sd, bd * sd);
  for (int mu = 0; mu < d; ++mu) {
    const CMat z = annihilation(space, mu).matrix;
    const CMat zd = z.adjoint();
    const CMat p = isq * (zd + z);
    const CMat x = Complex(0, 1) * isq * (zd - z);
    big += isq * (detail::kron(p, rep.alpha[mu]) + detail::kron(x, rep.beta[mu]));
  }
  const CMat lhs = big * big;
  const CMat rhs = detail::kron(bosonic_number(space).matrix, CMat::Identity(sd, sd)) +
                   detail::kron(CMat::Identity(bd, bd), sigma_invariant(rep));
  // Restrict to columns and rows whose bosonic occupations are all interior.
  std::vector<long> keep;
  for (long i = 0; i < bd; ++i) {
    const std::vector<int> n = space.occupation(i);
    bool interior = true;
    for (int v : n)
      if (v > space.n_max - 2) interior = false;
    if (interior)
      for (long s = 0; s < sd; ++s) keep.push_back(i * sd + s);
  }
  double res = 0.0;
  for (long r : keep)
    for (long c : keep) res = std::max(res, std::abs(lhs(r, c) - rhs(r, c)));
  return MixedInvariantReport{res, res < tol};
}

struct QuantumNumbers {
  Rational i3, yw, q;
};

// Exact quantum numbers of a D=5, signature (1,4) occupation bitstring:
//   I3 = (f0 + f4)/2 - 1/2
//   YW = f0 - (2/3)(f1 + f2 + f3) - f4 + 1
//   Q  = f0 - (1/3)(f1 + f2 + f3)
inline QuantumNumbers quantum_numbers(const std::vector<int>& f) {
  if (f.size() != 5) throw std::invalid_argument("quantum_numbers: D = 5 required");
  for (int b : f)
    if (b != 0 && b != 1) throw std::invalid_argument("quantum_numbers: bits must be 0/1");
  const long long color = f[1] + f[2] + f[3];
  QuantumNumbers qn;
  qn.i3 = Rational(f[0] + f[4], 2) - Rational(1, 2);
  qn.yw = Rational(f[0]) - Rational(2 * color, 3) - Rational(f[4]) + Rational(1);
  qn.q = Rational(f[0]) - Rational(color, 3);
  if (qn.q != qn.i3 + Rational(qn.yw.num, qn.yw.den * 2))
    throw std::runtime_error("quantum_numbers: Q = I3 + YW/2 identity failed");
  return qn;
}

struct FermionRow {
  std::array<int, 5> f_bits;  // (f0, ..., f4)
  int f_total;
  Rational i3, yw, q;
  std::string label;
  std::vector<int> n_label;
};

// Particle labels for the 32 bitstrings, ordered by the value of the
// bitstring read with f0 as the most significant bit (00000 ... 11111).
inline const std::array<const char*, 32>& fermion_labels() {
  static const std::array<const char*, 32> labels = {
      "nubar_L", "nu_R",    "d_L_r",   "d_R_r",   "d_L_g",   "d_R_g",   "ubar_L_b", "ubar_R_b",
      "d_L_b",   "d_R_b",   "ubar_L_g", "ubar_R_g", "ubar_L_r", "ubar_R_r", "e_L",     "e_R",
      "ebar_R",  "ebar_L",  "u_R_r",   "u_L_r",   "u_R_g",   "u_L_g",   "dbar_R_b", "dbar_L_b",
      "u_R_b",   "u_L_b",   "dbar_R_g", "dbar_L_g", "dbar_R_r", "dbar_L_r", "nubar_R", "nu_L"};
  return labels;
}

// Enumerate all 32 fermion rows in table order with exact quantum numbers.
inline std::vector<FermionRow> classify_fermions(const std::vector<int>& n_label = {}) {
  std::vector<FermionRow> rows;
  for (int code = 0; code < 32; ++code) {
    std::vector<int> f(5);
    for (int k = 0; k < 5; ++k) f[k] = (code >> (4 - k)) & 1;
    const QuantumNumbers qn = quantum_numbers(f);
    FermionRow row;
    for (int k = 0; k < 5; ++k) row.f_bits[k] = f[k];
    row.f_total = f[0] + f[1] + f[2] + f[3] + f[4];
    row.i3 = qn.i3;
    row.yw = qn.yw;
    row.q = qn.q;
    row.label = fermion_labels()[code];
    row.n_label = n_label;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace lct
