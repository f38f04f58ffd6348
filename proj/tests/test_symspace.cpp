#include <doctest.h>

#include <cmath>

#include "grayson/sampling.hpp"
#include "grayson/symspace.hpp"

using namespace grayson;

namespace {

Eigen::MatrixXd diag2(double a, double b) {
  Eigen::MatrixXd m(2, 2);
  m << a, 0, 0, b;
  return m;
}

// Length of the curve t -> geodesic(s0, s1, t) by composite Simpson over
// finite-difference velocities. Independent of the closed-form distance.
double length_oracle(const InnerProduct& s0, const InnerProduct& s1) {
  const int panels = 48;
  const double h = 1e-6;
  auto speed = [&](double t) {
    const Eigen::MatrixXd v =
        (geodesic(s0, s1, t + h).gram() - geodesic(s0, s1, t - h).gram()) /
        (2 * h);
    const SymTangent u(v);
    const InnerProduct at = geodesic(s0, s1, t);
    return std::sqrt(metric_inner(at, u, u));
  };
  double acc = 0;
  for (int p = 0; p < panels; ++p) {
    const double a = double(p) / panels, b = double(p + 1) / panels;
    acc += (b - a) / 6 * (speed(a) + 4 * speed((a + b) / 2) + speed(b));
  }
  return acc;
}

}  // namespace

TEST_CASE("metric_inner on stated examples") {
  const InnerProduct i2 = InnerProduct::standard(2);
  CHECK(metric_inner(i2, SymTangent(Eigen::MatrixXd::Identity(2, 2)),
                     SymTangent(Eigen::MatrixXd::Identity(2, 2))) ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK(metric_inner(i2, SymTangent(diag2(1, -1)),
                     SymTangent(Eigen::MatrixXd::Identity(2, 2))) ==
        doctest::Approx(0.0).epsilon(1e-12));
  // direct matrix-product oracle: s = diag(2,1), u = v = diag(2,0)
  // s^-1 u = diag(1, 0); trace of its square = 1
  const InnerProduct s(diag2(2, 1));
  const SymTangent u(diag2(2, 0));
  Eigen::MatrixXd oracle =
      s.gram().inverse() * u.mat() * s.gram().inverse() * u.mat();
  CHECK(oracle.trace() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(metric_inner(s, u, u) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("metric is positive definite on nonzero tangents") {
  Rng rng(201);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + int(rng.uniform_int(0, 3));
    const InnerProduct s = random_spd(rng, n, 1.2);
    Eigen::MatrixXd u = random_symmetric(rng, n);
    if (u.cwiseAbs().maxCoeff() < 1e-12) continue;
    CHECK(metric_inner(s, SymTangent(u), SymTangent(u)) > 0);
  }
}

TEST_CASE("distance examples, frozen against the length oracle") {
  const InnerProduct i3 = InnerProduct::standard(3);
  CHECK(distance(i3, i3) == 0.0);

  const InnerProduct i2 = InnerProduct::standard(2);
  const InnerProduct e2(diag2(std::exp(2.0), 1.0));
  CHECK(distance(i2, e2) == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(length_oracle(i2, e2) == doctest::Approx(2.0).epsilon(1e-6));

  const InnerProduct ee(diag2(std::exp(1.0), std::exp(-1.0)));
  CHECK(distance(i2, ee) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
  CHECK(length_oracle(i2, ee) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-6));
}

TEST_CASE("geodesic endpoints, midpoint power and constant speed") {
  const InnerProduct i2 = InnerProduct::standard(2);
  const InnerProduct e2(diag2(std::exp(2.0), 1.0));
  CHECK((geodesic(i2, e2, 0.0).gram() - i2.gram()).norm() < 1e-12);
  CHECK((geodesic(i2, e2, 1.0).gram() - e2.gram()).norm() < 1e-10);
  // matrix-power evaluation: midpoint of I -> diag(e^2, 1) is diag(e, 1)
  CHECK((geodesic(i2, e2, 0.5).gram() - diag2(std::exp(1.0), 1.0)).norm() <
        1e-10);

  Rng rng(202);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + int(rng.uniform_int(0, 2));
    const InnerProduct s0 = random_spd(rng, n, 1.0);
    const InnerProduct s1 = random_spd(rng, n, 1.0);
    const double d = distance(s0, s1);
    for (double t : {0.25, 0.5, 0.8}) {
      CHECK(distance(geodesic(s0, s1, t), s0) ==
            doctest::Approx(t * d).epsilon(1e-8));
    }
    // constant geodesic
    CHECK(distance(geodesic(s0, s0, 0.7), s0) < 1e-9);
  }
}

TEST_CASE("det-1 slice is geodesically closed") {
  Rng rng(203);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + int(rng.uniform_int(0, 2));
    const NormalizedPoint a = random_det1_point(rng, n, 1.0);
    const NormalizedPoint b = random_det1_point(rng, n, 1.0);
    const InnerProduct mid = geodesic(a.rep(), b.rep(), 0.37);
    CHECK(std::abs(std::exp(log_det(mid)) - 1.0) < 1e-9);
  }
}

TEST_CASE("act examples and laws") {
  const InnerProduct i2 = InnerProduct::standard(2);
  const IntegerAutomorphism id = IntegerAutomorphism::identity(2);
  CHECK((act(id, i2).gram() - i2.gram()).norm() == 0.0);

  // swap: congruence oracle (g^-1)^T diag(a,b) g^-1 with g the swap
  const IntegerAutomorphism swap(IntMat::from_rows({{0, 1}, {1, 0}}));
  const InnerProduct ab(diag2(3, 7));
  CHECK((act(swap, ab).gram() - diag2(7, 3)).norm() < 1e-12);

  // shear: (g^-1)^T g^-1 for g = [[1,1],[0,1]]
  const IntegerAutomorphism shear(IntMat::from_rows({{1, 1}, {0, 1}}));
  Eigen::MatrixXd expect(2, 2);
  expect << 1, -1, -1, 2;
  CHECK((act(shear, i2).gram() - expect).norm() < 1e-12);

  Rng rng(204);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + int(rng.uniform_int(0, 2));
    const InnerProduct s = random_spd(rng, n, 1.0);
    const IntegerAutomorphism g = random_unimodular(rng, n);
    const IntegerAutomorphism h = random_unimodular(rng, n);
    CHECK((act(g * h, s).gram() - act(g, act(h, s)).gram()).norm() < 1e-9);
  }
  CHECK_THROWS_AS(IntegerAutomorphism(IntMat::from_rows({{2, 0}, {0, 1}})),
                  NotUnimodularError);
}

TEST_CASE("isometry of the action") {
  Rng rng(205);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + (trial % 3);
    const InnerProduct s0 = random_spd(rng, n, 1.0);
    const InnerProduct s1 = random_spd(rng, n, 1.0);
    const IntegerAutomorphism g = random_unimodular(rng, n);
    const double d = distance(s0, s1);
    CHECK(std::abs(distance(act(g, s0), act(g, s1)) - d) <= 1e-9 * (1 + d));
  }
}

TEST_CASE("normalize_det examples and laws") {
  CHECK((normalize_det(InnerProduct(diag2(4, 1))).rep().gram() -
         diag2(2, 0.5)).norm() < 1e-12);
  const InnerProduct one(diag2(2, 0.5));
  CHECK((normalize_det(one).rep().gram() - one.gram()).norm() < 1e-12);
  const InnerProduct five(5 * Eigen::MatrixXd::Identity(3, 3));
  CHECK((normalize_det(five).rep().gram() - Eigen::MatrixXd::Identity(3, 3))
            .norm() < 1e-12);

  Rng rng(206);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + int(rng.uniform_int(0, 2));
    const InnerProduct s = random_spd(rng, n, 1.3);
    const double r = std::exp(rng.uniform(-2, 2));
    const auto n1 = normalize_det(s);
    const auto n2 = normalize_det(InnerProduct(r * s.gram()));
    CHECK((n1.rep().gram() - n2.rep().gram()).norm() < 1e-12);
    // idempotent
    const auto n3 = normalize_det(n1.rep());
    CHECK((n3.rep().gram() - n1.rep().gram()).norm() < 1e-13);
  }
}

TEST_CASE("normalize_det commutes with the action") {
  Rng rng(207);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + int(rng.uniform_int(0, 2));
    const InnerProduct s = random_spd(rng, n, 1.0);
    const IntegerAutomorphism g = random_unimodular(rng, n);
    const Eigen::MatrixXd lhs = normalize_det(act(g, s)).rep().gram();
    const Eigen::MatrixXd rhs = act(g, normalize_det(s)).rep().gram();
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-12 * (1 + lhs.norm()));
  }
}

TEST_CASE("construction rejects bad input") {
  Eigen::MatrixXd asym(2, 2);
  asym << 1, 0.5, 0.2, 1;
  CHECK_THROWS(InnerProduct(asym));
  CHECK_THROWS_AS(InnerProduct(diag2(1, -1)), NotPositiveDefiniteError);
  Eigen::MatrixXd nan2 = diag2(1, 1);
  nan2(0, 0) = std::nan("");
  CHECK_THROWS(InnerProduct(nan2));
  CHECK_THROWS_AS(
      metric_inner(InnerProduct::standard(2),
                   SymTangent(Eigen::MatrixXd::Identity(3, 3)),
                   SymTangent(Eigen::MatrixXd::Identity(3, 3))),
      DimensionMismatchError);
  CHECK_THROWS(NormalizedPoint(InnerProduct(diag2(4, 1))));
}

TEST_CASE("exp and log maps invert each other") {
  Rng rng(208);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + int(rng.uniform_int(0, 2));
    const InnerProduct s = random_spd(rng, n, 1.0);
    const InnerProduct y = random_spd(rng, n, 1.0);
    const SymTangent u = log_map(s, y);
    CHECK((exp_map(s, u).gram() - y.gram()).norm() < 1e-9 * (1 + y.gram().norm()));
    CHECK(std::sqrt(metric_inner(s, u, u)) ==
          doctest::Approx(distance(s, y)).epsilon(1e-9));
  }
}
