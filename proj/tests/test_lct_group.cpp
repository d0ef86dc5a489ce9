#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lct/lct.hpp"

using namespace lct;
using doctest::Approx;

namespace {

Mat scalar(double v) {
  Mat m(1, 1);
  m << v;
  return m;
}

GaussianState minimal_1d(double x, double rho, double p0 = 0.0, double x0 = 0.0) {
  Vec p(1), q(1);
  p << p0;
  q << x0;
  return make_minimal_state(MeanVector(p, q), scalar(x), scalar(rho), Metric(0, 1));
}

}  // namespace

TEST_CASE("is_symplectic") {
  CHECK(is_symplectic(LctMatrix::identity(Metric(1, 1)), 1e-12));
  // Harmonic rotation blocks (cos, mw sin, -sin/mw, cos).
  const double theta = 0.7, mw = 2.0;
  const LctMatrix rot(Metric(0, 1), scalar(std::cos(theta)), scalar(mw * std::sin(theta)),
                      scalar(-std::sin(theta) / mw), scalar(std::cos(theta)));
  CHECK(is_symplectic(rot, 1e-12));
  // Determinant 2 is not symplectic.
  const LctMatrix bad(Metric(0, 1), scalar(1), scalar(0), scalar(0), scalar(2));
  CHECK_FALSE(is_symplectic(bad, 1e-10));
  CHECK_THROWS_AS(LctMatrix(Metric(1, 1), scalar(1), scalar(0), scalar(0), scalar(1)),
                  std::invalid_argument);
}

TEST_CASE("compose and inverse group laws") {
  const Metric metric(0, 1);
  const LctMatrix m = random_lct(metric, 42);
  const LctMatrix id = LctMatrix::identity(metric);
  CHECK((compose(m, id).assembled() - m.assembled()).cwiseAbs().maxCoeff() == 0.0);

  // Rotation composition adds angles.
  const LctMatrix r1 = special_rotation_lct(0.3, 1.7);
  const LctMatrix r2 = special_rotation_lct(0.9, 1.7);
  const LctMatrix r12 = special_rotation_lct(1.2, 1.7);
  CHECK((compose(r1, r2).assembled() - r12.assembled()).cwiseAbs().maxCoeff() < 1e-12);

  const Mat prod = compose(m, inverse(m)).assembled();
  CHECK((prod - Mat::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-10);
  const Mat prod2 = compose(inverse(m), m).assembled();
  CHECK((prod2 - Mat::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-10);

  // Associativity.
  const LctMatrix a = random_lct(Metric(1, 1), 1), b = random_lct(Metric(1, 1), 2),
                  c = random_lct(Metric(1, 1), 3);
  CHECK((compose(compose(a, b), c).assembled() - compose(a, compose(b, c)).assembled())
            .cwiseAbs()
            .maxCoeff() < 1e-10);
  CHECK_THROWS_AS(compose(a, m), std::invalid_argument);
  CHECK_THROWS_AS(inverse(LctMatrix(Metric(0, 1), scalar(1), scalar(0), scalar(0), scalar(2))),
                  std::invalid_argument);
}

TEST_CASE("inverse of a rotation is the opposite rotation") {
  const LctMatrix inv = inverse(special_rotation_lct(0.7, 2.0));
  const LctMatrix expect = special_rotation_lct(-0.7, 2.0);
  CHECK((inv.assembled() - expect.assembled()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("random_lct determinism and symplecticity across signatures") {
  const Metric metrics[] = {Metric(0, 1), Metric(1, 1), Metric(2, 0), Metric(1, 4)};
  for (const Metric& metric : metrics) {
    for (unsigned long long seed = 0; seed < 50; ++seed)
      CHECK(symplectic_residual(random_lct(metric, seed)) < 1e-9);
  }
  const LctMatrix m1 = random_lct(Metric(1, 4), 7);
  const LctMatrix m2 = random_lct(Metric(1, 4), 7);
  CHECK((m1.assembled() - m2.assembled()).cwiseAbs().maxCoeff() == 0.0);
  // 1D determinant form of the symplectic condition.
  const LctMatrix s = random_lct(Metric(0, 1), 0);
  CHECK(s.assembled().determinant() == Approx(1.0).epsilon(1e-9));
}

TEST_CASE("special_rotation_lct") {
  CHECK((special_rotation_lct(0.0, 1.0).assembled() - Mat::Identity(2, 2)).cwiseAbs().maxCoeff() <
        1e-15);
  const Mat quarter = special_rotation_lct(M_PI / 2, 1.0).assembled();
  Mat expect(2, 2);
  expect << 0, -1, 1, 0;
  CHECK((quarter - expect).cwiseAbs().maxCoeff() < 1e-15);
  const Mat m = special_rotation_lct(0.3, 2.0).assembled();
  CHECK(m.determinant() == Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(special_rotation_lct(0.1, 0.0), std::invalid_argument);
}

TEST_CASE("transform_means") {
  Vec p(1), x(1);
  p << 1.0;
  x << 0.0;
  const MeanVector v(p, x);
  const MeanVector same = transform_means(v, LctMatrix::identity(Metric(0, 1)));
  CHECK(same.p_means(0) == 1.0);
  CHECK(same.x_means(0) == 0.0);

  const MeanVector rot = transform_means(v, special_rotation_lct(M_PI / 2, 1.0));
  CHECK(rot.p_means(0) == Approx(0.0).epsilon(1e-15));
  CHECK(rot.x_means(0) == Approx(-1.0));

  const MeanVector zero = transform_means(MeanVector(Vec::Zero(2), Vec::Zero(2)),
                                          random_lct(Metric(1, 1), 3));
  CHECK(zero.p_means.cwiseAbs().maxCoeff() == 0.0);

  // Round trip through the inverse.
  const LctMatrix m = random_lct(Metric(0, 1), 11);
  const MeanVector round = transform_means(transform_means(v, m), inverse(m));
  CHECK(std::abs(round.p_means(0) - 1.0) < 1e-10);
  CHECK(std::abs(round.x_means(0)) < 1e-10);
}

TEST_CASE("transform_covariance preserves the determinant invariant") {
  const CovarianceBlocks c(scalar(0.5), scalar(0.5), scalar(0.0));
  const CovarianceBlocks same = transform_covariance(c, LctMatrix::identity(Metric(0, 1)));
  CHECK((same.assembled() - c.assembled()).cwiseAbs().maxCoeff() == 0.0);

  const CovarianceBlocks rot = transform_covariance(c, special_rotation_lct(M_PI / 4, 1.0));
  CHECK(rot.P(0, 0) * rot.X(0, 0) - rot.rho(0, 0) * rot.rho(0, 0) == Approx(0.25).epsilon(1e-12));

  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> uni(0.4, 1.6);
  for (int k = 0; k < 200; ++k) {
    const Metric metric(1, 1);
    // Random minimal covariance: congruence transport of the base C0 = I/2.
    const LctMatrix carrier = random_lct(metric, 900 + k);
    const CovarianceBlocks base(0.5 * Mat::Identity(2, 2), 0.5 * Mat::Identity(2, 2),
                                Mat::Zero(2, 2));
    const CovarianceBlocks cc = transform_covariance(base, carrier);
    const LctMatrix m = random_lct(metric, 2000 + k);
    const double before = covariance_invariant(cc);
    const double after = covariance_invariant(transform_covariance(cc, m));
    CHECK(std::abs(after - before) < 1e-9 * std::max(1.0, std::abs(before)));
    (void)uni;
  }
}

TEST_CASE("covariance_invariant examples") {
  CHECK(covariance_invariant(CovarianceBlocks(scalar(0.5), scalar(0.5), scalar(0.0))) ==
        Approx(0.25));
  CHECK(covariance_invariant(CovarianceBlocks(scalar(1.0), scalar(1.0), scalar(0.0))) ==
        Approx(1.0));
  const GaussianState s = minimal_1d(0.7, 0.3);
  CHECK(covariance_invariant(s.cov) == Approx(0.25).epsilon(1e-12));
}

TEST_CASE("unitary_factor") {
  // Identity transformation on identical factors gives the identity.
  const GaussianState s = minimal_1d(0.7, 0.3);
  const FactorTriple f = factorize_covariance(s);
  const CMat om_id = unitary_factor(LctMatrix::identity(Metric(0, 1)), f, f);
  CHECK((om_id - CMat::Identity(1, 1)).cwiseAbs().maxCoeff() < 1e-12);

  // Harmonic rotation on a variance-matched state gives e^{i theta}.
  const double mw = 2.0, theta = 0.6;
  const GaussianState matched = minimal_1d(1.0 / (2.0 * mw), 0.0);
  const LctMatrix rot = special_rotation_lct(theta, mw);
  const GaussianState rotated = apply_lct(matched, rot);
  const CMat om = unitary_factor(rot, factorize_covariance(matched), factorize_covariance(rotated));
  CHECK(std::abs(om(0, 0) - std::exp(Complex(0, theta))) < 1e-10);

  // Random 1D transformations give a unimodular scalar.
  for (unsigned long long seed = 0; seed < 30; ++seed) {
    const LctMatrix m = random_lct(Metric(0, 1), seed);
    const GaussianState out = apply_lct(s, m);
    const CMat w = unitary_factor(m, f, factorize_covariance(out));
    CHECK(std::abs(std::abs(w(0, 0)) - 1.0) < 1e-9);
  }
}

TEST_CASE("unitary_factor is pseudo-unitary on definite signatures") {
  const Metric metrics[] = {Metric(0, 1), Metric(1, 0), Metric(2, 0), Metric(0, 2)};
  for (const Metric& metric : metrics) {
    const int d = metric.dim();
    for (unsigned long long seed = 1; seed <= 10; ++seed) {
      const CovarianceBlocks base(0.5 * Mat::Identity(d, d), 0.5 * Mat::Identity(d, d),
                                  Mat::Zero(d, d));
      const CovarianceBlocks cov =
          transform_covariance(base, random_lct(metric, 7000 + seed));
      const GaussianState s = make_minimal_state(MeanVector(Vec::Zero(d), Vec::Zero(d)), cov.X,
                                                 cov.rho, metric);
      const LctMatrix m = random_lct(metric, 8000 + seed);
      const GaussianState out = apply_lct(s, m);
      const CMat om = unitary_factor(m, factorize_covariance(s), factorize_covariance(out));
      const CMat eta = metric.eta().cast<Complex>();
      CHECK((om.adjoint() * eta * om - eta).cwiseAbs().maxCoeff() < 1e-9);
    }
  }
}
