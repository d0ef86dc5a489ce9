#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

#include "lct/lct.hpp"

using namespace lct;
using doctest::Approx;

namespace {

long binomial(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("annihilation ladder action") {
  const FockSpace space(1, 2);
  const CMat z = annihilation(space, 0).matrix;
  // z|1> = |0>, z|0> = 0.
  CVec ket1 = CVec::Zero(3);
  ket1(1) = 1.0;
  CVec out = z * ket1;
  CHECK(std::abs(out(0) - Complex(1.0)) < 1e-15);
  CHECK((z * CVec::Unit(3, 0)).cwiseAbs().maxCoeff() == 0.0);
  // z|2> = sqrt(2)|1>.
  CHECK(std::abs((z * CVec::Unit(3, 2))(1) - Complex(std::sqrt(2.0))) < 1e-15);
  CHECK_THROWS_AS(annihilation(space, 1), std::invalid_argument);
}

TEST_CASE("canonical commutator on the interior subspace") {
  const FockSpace space(2, 5);
  for (int mode = 0; mode < 2; ++mode) {
    const CMat z = annihilation(space, mode).matrix;
    const CMat comm = z * z.adjoint() - z.adjoint() * z;
    for (long col = 0; col < space.dim(); ++col) {
      const std::vector<int> n = space.occupation(col);
      bool interior = true;
      for (int v : n)
        if (v >= space.n_max) interior = false;
      if (!interior) continue;
      CVec diff = comm.col(col) - CVec::Unit(space.dim(), col);
      CHECK(diff.cwiseAbs().maxCoeff() < 1e-14);
    }
  }
}

TEST_CASE("invariant operator spectrum and degeneracies") {
  struct Case {
    int d, nmax;
  } cases[] = {{1, 12}, {2, 8}, {3, 6}};
  for (const auto& c : cases) {
    const FockSpace space(c.d, c.nmax);
    const FockOperator zp = invariant_zplus(space);
    CHECK((zp.matrix - zp.matrix.adjoint()).cwiseAbs().maxCoeff() == 0.0);
    std::vector<long> counts(c.d * c.nmax + 1, 0);
    for (long i = 0; i < space.dim(); ++i) {
      const std::vector<int> n = space.occupation(i);
      long total = 0;
      for (int v : n) total += v;
      counts[total] += 1;
      CHECK(std::abs(zp.matrix(i, i).real() - (0.5 * total + 0.25 * c.d)) < 1e-10);
    }
    // Interior levels carry the full multiset degeneracy (k + D - 1 choose D - 1).
    for (long k = 0; k <= c.nmax; ++k)
      CHECK(counts[k] == binomial(k + c.d - 1, c.d - 1));
  }
}

TEST_CASE("ladder commutators with the invariant operator") {
  const FockSpace space(2, 6);
  const CMat zp = invariant_zplus(space).matrix;
  for (int mode = 0; mode < 2; ++mode) {
    const CMat z = annihilation(space, mode).matrix;
    // [z+, z_mu] = -z_mu/2 and [z+, z_mu^dag] = +z_mu^dag/2 (these hold on all
    // matrix elements because z+ is diagonal with exact level spacing 1/2).
    CHECK((zp * z - z * zp + 0.5 * z).cwiseAbs().maxCoeff() < 1e-14);
    const CMat zd = z.adjoint();
    CHECK((zp * zd - zd * zp - 0.5 * zd).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("bosonic number operator") {
  const FockSpace space(2, 4);
  const FockOperator k = bosonic_number(space);
  const FockOperator zp = invariant_zplus(space);
  CHECK((k.matrix - 2.0 * zp.matrix + 1.0 * CMat::Identity(space.dim(), space.dim()))
            .cwiseAbs()
            .maxCoeff() == 0.0);
  // Eigenvalue |n| on a basis state.
  const long idx = space.index({2, 1});
  CHECK(k.matrix(idx, idx).real() == Approx(3.0));
  CHECK(k.matrix(0, 0).real() == Approx(0.0));
}

TEST_CASE("dispersion operator and covariant Hamiltonian") {
  const FockSpace space(1, 6);
  const FockOperator disp = dispersion_operator(space, 0.5);
  CHECK(disp.matrix(0, 0).real() == Approx(0.5));
  CHECK(disp.matrix(3, 3).real() == Approx(3.5));
  CHECK((dispersion_operator(space, 1.0).matrix - 2.0 * disp.matrix).cwiseAbs().maxCoeff() <
        1e-14);
  CHECK_THROWS_AS(dispersion_operator(space, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(dispersion_operator(FockSpace(2, 3), 0.5), std::invalid_argument);

  const FockOperator h0 = covariant_hamiltonian(space, 0.0, 1.0, 0.5);
  CHECK(h0.matrix(0, 0).real() == Approx(0.5));
  const FockOperator h1 = covariant_hamiltonian(space, 2.0, 1.0, 0.5);
  CHECK(h1.matrix(1, 1).real() == Approx(3.5));
  // 3D isotropic ground level (2|n| + 3) B/m.
  const FockOperator h3 = covariant_hamiltonian(FockSpace(3, 3), 0.0, 1.0, 0.2);
  CHECK(h3.matrix(0, 0).real() == Approx(0.6));
  CHECK_THROWS_AS(covariant_hamiltonian(space, 0.0, -1.0, 0.5), std::invalid_argument);

  // Commutes with the invariant operator (both diagonal).
  const CMat zp = invariant_zplus(space).matrix;
  CHECK((h1.matrix * zp - zp * h1.matrix).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("harmonic conjugation rotates the ladder operator") {
  const FockSpace space(1, 10);
  const CMat z = annihilation(space, 0).matrix;
  const CMat n = (z.adjoint() * z).eval();
  const double theta = 0.37;
  const CMat u = (Complex(0, -theta) * n).exp();
  const CMat rotated = u * z * u.adjoint();
  CHECK((rotated - std::exp(Complex(0, theta)) * z).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("hermite_wavefunction values and orthonormality") {
  const double b = 0.5;
  CHECK(std::abs(hermite_wavefunction(0, b, 0, 0, 0)) ==
        Approx(std::pow(2.0 * b / M_PI, 0.25)).epsilon(1e-14));
  CHECK(std::abs(hermite_wavefunction(1, b, 0.3, 1.2, 1.2)) < 1e-15);
  CHECK_THROWS_AS(hermite_wavefunction(-1, b, 0, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(hermite_wavefunction(0, 0.0, 0, 0, 0), std::invalid_argument);

  const int npts = 8001;
  const double lo = -14.0, hi = 14.0, h = (hi - lo) / (npts - 1);
  for (int m = 0; m <= 6; ++m) {
    for (int n = m; n <= 6; ++n) {
      Complex acc = 0.0;
      for (int i = 0; i < npts; ++i) {
        const double x = lo + i * h;
        const double w = (i == 0 || i == npts - 1) ? 0.5 : 1.0;
        acc += w * std::conj(hermite_wavefunction(m, b, 0, 0, x)) *
               hermite_wavefunction(n, b, 0, 0, x);
      }
      acc *= h;
      CHECK(std::abs(acc - (m == n ? 1.0 : 0.0)) < 1e-8);
    }
  }

  // Overflow safety at high order: finite value at n = 64.
  CHECK(std::isfinite(std::abs(hermite_wavefunction(64, b, 0, 0, 1.7))));
}

TEST_CASE("grid operator eigenstates") {
  const Grid1D grid(-12.0, 12.0, 1024);
  const Vec pts = grid.points();
  const MeanVector zero(Vec::Zero(1), Vec::Zero(1));

  auto residual = [&](const GridOperator& op, const CVec& psi, double lambda) {
    const CVec r = op.matrix * psi - lambda * psi;
    return r.cwiseAbs().maxCoeff() / psi.cwiseAbs().maxCoeff();
  };

  // rho = 0 ground state.
  {
    const double x_var = 0.5, bb = 1.0 / (4.0 * x_var);
    const GridOperator op = grid_zplus(x_var, 0.0, zero, grid);
    CVec psi(grid.n_points);
    for (int i = 0; i < grid.n_points; ++i) psi(i) = hermite_wavefunction(0, bb, 0, 0, pts(i));
    CHECK(residual(op, psi, 0.25) < 1e-6);
  }

  // Correlated state: complex B = 1/(4X) - i rho/(2X).
  {
    const double x_var = 0.7, rho = 0.3;
    const Complex bb(1.0 / (4.0 * x_var), -rho / (2.0 * x_var));
    const GridOperator op = grid_zplus(x_var, rho, zero, grid);
    CVec psi0(grid.n_points), psi1(grid.n_points);
    for (int i = 0; i < grid.n_points; ++i) {
      const Complex g = std::exp(-bb * pts(i) * pts(i));
      psi0(i) = g;
      psi1(i) = pts(i) * g;  // first excited profile
    }
    CHECK(residual(op, psi0, 0.25) < 1e-6);
    CHECK(residual(op, psi1, 0.75) < 1e-5);
  }

  CHECK_THROWS_AS(grid_zplus(-1.0, 0.0, zero, grid), std::invalid_argument);
}

TEST_CASE("resolution of identity") {
  const double bb = 0.5;
  const Grid1D grid(-12.0, 12.0, 1024);
  const Vec pts = grid.points();
  QuadSpec quad;
  quad.nodes = 201;
  quad.p_halfwidth = 8.0 * std::sqrt(2.0 * bb);
  quad.x_halfwidth = 8.0 * std::sqrt(0.5 / bb);

  auto sample = [&](auto f) {
    CVec psi(grid.n_points);
    for (int i = 0; i < grid.n_points; ++i) psi(i) = f(pts(i));
    return psi;
  };

  const CVec psi0 = sample([&](double x) { return hermite_wavefunction(0, bb, 0, 0, x); });
  CHECK(resolution_of_identity_check(psi0, grid, bb, quad) == Approx(1.0).epsilon(1e-4));

  const CVec psi1 = sample([&](double x) { return hermite_wavefunction(1, bb, 0, 0, x); });
  CHECK(resolution_of_identity_check(psi1, grid, bb, quad) == Approx(1.0).epsilon(1e-4));

  const double isq = 1.0 / std::sqrt(2.0);
  const CVec mix = sample([&](double x) {
    return isq * (hermite_wavefunction(0, bb, 0, 0, x) + hermite_wavefunction(1, bb, 0, 0, x));
  });
  CHECK(resolution_of_identity_check(mix, grid, bb, quad) == Approx(1.0).epsilon(1e-4));

  // A grid that clips the state is reported, not silently accepted.
  const Grid1D narrow(-2.0, 2.0, 64);
  CVec clipped(64);
  for (int i = 0; i < 64; ++i)
    clipped(i) = hermite_wavefunction(0, 0.05, 0, 0, narrow.points()(i));
  CHECK_THROWS_AS(resolution_of_identity_check(clipped, narrow, 0.05, quad),
                  std::invalid_argument);
}
