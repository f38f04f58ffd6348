#include <doctest.h>

#include <cmath>

#include "grayson/exterior.hpp"
#include "grayson/sampling.hpp"

using namespace grayson;

namespace {

Eigen::MatrixXd cols(std::initializer_list<std::initializer_list<double>> rows) {
  const int r = int(rows.size());
  const int c = int(rows.begin()->size());
  Eigen::MatrixXd m(r, c);
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (double v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

// Independent expansion: vol^2 = sum over index tuple pairs of
// xi_I det(s_{I,J}) xi_J, with xi the Pluecker coordinates. (Cauchy-Binet.)
double vol_squared_by_expansion(const InnerProduct& s,
                                const DecomposableFrame& f) {
  const MultiVector xi = wedge_coords(f);
  const auto tuples = index_tuples(f.dim(), f.rank());
  double acc = 0;
  for (size_t a = 0; a < tuples.size(); ++a)
    for (size_t b = 0; b < tuples.size(); ++b) {
      Eigen::MatrixXd sub(f.rank(), f.rank());
      for (int i = 0; i < f.rank(); ++i)
        for (int j = 0; j < f.rank(); ++j)
          sub(i, j) = s.gram()(tuples[a][i], tuples[b][j]);
      acc += xi.coords()(long(a)) *
             (f.rank() == 0 ? 1.0 : sub.determinant()) * xi.coords()(long(b));
    }
  return acc;
}

}  // namespace

TEST_CASE("gram_volume on stated examples") {
  const InnerProduct i2 = InnerProduct::standard(2);
  CHECK(gram_volume(i2, DecomposableFrame(2, Eigen::MatrixXd(2, 0))) == 1.0);
  CHECK(gram_volume(i2, DecomposableFrame(2, cols({{1}, {0}}))) ==
        doctest::Approx(1.0).epsilon(1e-12));
  // {e1, e1+e2}: exterior-coordinate oracle says the wedge has length 1
  const DecomposableFrame shear(2, cols({{1, 1}, {0, 1}}));
  CHECK(wedge_coords(shear).coords()(0) == doctest::Approx(1.0));
  CHECK(gram_volume(i2, shear) == doctest::Approx(1.0).epsilon(1e-12));
  const InnerProduct d49(cols({{4, 0}, {0, 9}}));
  CHECK(gram_volume(d49, DecomposableFrame(2, Eigen::MatrixXd::Identity(2, 2))) ==
        doctest::Approx(6.0).epsilon(1e-12));
}

TEST_CASE("wedge_coords examples") {
  const DecomposableFrame e12(3, cols({{1, 0}, {0, 1}, {0, 0}}));
  const MultiVector w = wedge_coords(e12);
  REQUIRE(w.coords().size() == 3);
  CHECK(w.coords()(0) == doctest::Approx(1.0));
  CHECK(w.coords()(1) == doctest::Approx(0.0));
  CHECK(w.coords()(2) == doctest::Approx(0.0));

  const DecomposableFrame sh(2, cols({{1, 0}, {1, 1}}));
  CHECK(wedge_coords(sh).coords()(0) == doctest::Approx(1.0));

  CHECK_THROWS_AS(DecomposableFrame(2, cols({{1, 1}, {1, 1}})),
                  DependentFrameError);
}

TEST_CASE("subspace membership through wedge vanishing") {
  const DecomposableFrame e12(3, cols({{1, 0}, {0, 1}, {0, 0}}));
  const MultiVector xi = wedge_coords(e12);
  Eigen::VectorXd e1 = Eigen::VectorXd::Zero(3);
  e1(0) = 1;
  Eigen::VectorXd e3 = Eigen::VectorXd::Zero(3);
  e3(2) = 1;
  CHECK(subspace_membership(e1, xi));
  CHECK_FALSE(subspace_membership(e3, xi));

  const DecomposableFrame f(2, cols({{1, 0}, {1, 1}}));
  Eigen::VectorXd v(2);
  v << 1, 1;
  CHECK(subspace_membership(v, wedge_coords(f)));
  CHECK_THROWS(subspace_membership(e1, MultiVector(3, 1, Eigen::VectorXd::Zero(3))));
}

TEST_CASE("s_xi examples and span invariance") {
  const InnerProduct i2 = InnerProduct::standard(2);
  const DecomposableFrame e1(2, cols({{1}, {0}}));
  CHECK((s_xi(i2, e1).mat() - cols({{1, 0}, {0, 0}})).norm() < 1e-12);

  const double rho = 0.6;
  const InnerProduct srho(cols({{1, rho}, {rho, 1}}));
  // orthogonal-projection oracle: P = v (v^T s v)^-1 v^T s with v = e1,
  // s_xi = P^T s P
  Eigen::MatrixXd v = cols({{1}, {0}});
  Eigen::MatrixXd p = v * (v.transpose() * srho.gram() * v).inverse() *
                      v.transpose() * srho.gram();
  Eigen::MatrixXd oracle = p.transpose() * srho.gram() * p;
  CHECK((s_xi(srho, e1).mat() - oracle).norm() < 1e-12);
  Eigen::MatrixXd expect(2, 2);
  expect << 1, rho, rho, rho * rho;
  CHECK((s_xi(srho, e1).mat() - expect).norm() < 1e-12);

  Rng rng(301);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + int(rng.uniform_int(0, 3));
    const InnerProduct s = random_spd(rng, n, 1.0);
    // full frame: s_xi = s
    const DecomposableFrame full(n, Eigen::MatrixXd::Identity(n, n));
    CHECK((s_xi(s, full).mat() - s.gram()).norm() < 1e-10);
    // replacing the frame by frame * A (unimodular) preserves s_xi and vol
    const int m = 1 + int(rng.uniform_int(0, n - 1));
    const DecomposableFrame f = random_frame(rng, n, m);
    const Eigen::MatrixXd a = random_unimodular(rng, m).mat().to_double();
    const DecomposableFrame fa(n, f.vectors() * a);
    CHECK((s_xi(s, f).mat() - s_xi(s, fa).mat()).norm() < 1e-10);
    CHECK(gram_volume(s, f) ==
          doctest::Approx(gram_volume(s, fa)).epsilon(1e-10));
    // general invertible A scales the volume by |det A|
    Eigen::MatrixXd ga(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) ga(i, j) = rng.normal();
    if (std::abs(ga.determinant()) < 0.1) continue;
    const DecomposableFrame fg(n, f.vectors() * ga);
    CHECK(gram_volume(s, fg) ==
          doctest::Approx(gram_volume(s, f) * std::abs(ga.determinant()))
              .epsilon(1e-9));
  }
}

TEST_CASE("gradient of vol^2: examples by finite differences") {
  const InnerProduct i2 = InnerProduct::standard(2);
  const DecomposableFrame e1(2, cols({{1}, {0}}));
  CHECK((grad_vol_squared(i2, e1).mat() - cols({{1, 0}, {0, 0}})).norm() <
        1e-12);
  // frozen from the finite-difference oracle below: vol^2 = s_11 = 4 and
  // s_xi = diag(4, 0), so the gradient is diag(16, 0)
  const InnerProduct d49(cols({{4, 0}, {0, 9}}));
  CHECK((grad_vol_squared(d49, e1).mat() - cols({{16, 0}, {0, 0}})).norm() <
        1e-10);
  {
    const double h = 1e-5 * (1 + d49.gram().norm());
    Eigen::MatrixXd e11 = Eigen::MatrixXd::Zero(2, 2);
    e11(0, 0) = 1;
    const double vp = gram_volume(InnerProduct(d49.gram() + h * e11), e1);
    const double vm = gram_volume(InnerProduct(d49.gram() - h * e11), e1);
    const double fd = (vp * vp - vm * vm) / (2 * h);
    CHECK(metric_inner(d49, grad_vol_squared(d49, e1), SymTangent(e11)) ==
          doctest::Approx(fd).epsilon(1e-7));
  }

  // directional finite differences against the metric pairing
  Rng rng(302);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + int(rng.uniform_int(0, 3));
    const int m = 1 + int(rng.uniform_int(0, n - 1));
    const InnerProduct s = random_spd(rng, n, 1.0);
    const DecomposableFrame f = random_frame(rng, n, m);
    const SymTangent grad = grad_vol_squared(s, f);
    const double h = 1e-5 * (1 + s.gram().norm());
    for (int k = 0; k < 5; ++k) {
      const Eigen::MatrixXd u = random_symmetric(rng, n);
      const double vp = gram_volume(InnerProduct(s.gram() + h * u), f);
      const double vm = gram_volume(InnerProduct(s.gram() - h * u), f);
      const double fd = (vp * vp - vm * vm) / (2 * h);
      const double an = metric_inner(s, grad, SymTangent(u));
      CHECK(std::abs(fd - an) <=
            1e-6 * std::max(std::abs(fd) + std::abs(an), 1.0));
    }
    // full-basis frame: gradient is vol^2 * s
    const DecomposableFrame full(n, Eigen::MatrixXd::Identity(n, n));
    const double v2 = std::exp(log_det(s));
    CHECK((grad_vol_squared(s, full).mat() - v2 * s.gram()).norm() <
          1e-9 * (1 + v2));
  }
}

TEST_CASE("gradient of log vol^2 has norm sqrt(m)") {
  Rng rng(303);
  const InnerProduct i3 = InnerProduct::standard(3);
  const DecomposableFrame e12(3, cols({{1, 0}, {0, 1}, {0, 0}}));
  const SymTangent g = grad_log_vol_squared(i3, e12);
  Eigen::MatrixXd expect = Eigen::MatrixXd::Zero(3, 3);
  expect(0, 0) = expect(1, 1) = 1;
  CHECK((g.mat() - expect).norm() < 1e-12);
  CHECK(std::sqrt(metric_inner(i3, g, g)) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + int(rng.uniform_int(0, 3));
    const int m = 1 + int(rng.uniform_int(0, n - 1));
    const InnerProduct s = random_spd(rng, n, 1.1);
    const DecomposableFrame f = random_frame(rng, n, m);
    const SymTangent gl = grad_log_vol_squared(s, f);
    CHECK(std::abs(std::sqrt(metric_inner(s, gl, gl)) - std::sqrt(double(m))) <=
          1e-9);
  }
  // the n=4, m=2 pairing from the examples: metric_inner = 2
  Rng rng2(304);
  const InnerProduct s4 = random_spd(rng2, 4, 1.0);
  const DecomposableFrame f42 = random_frame(rng2, 4, 2);
  const SymTangent sxl = grad_log_vol_squared(s4, f42);
  CHECK(metric_inner(s4, sxl, sxl) == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("determinant identity (independent expansion)") {
  Rng rng(305);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 2 + int(rng.uniform_int(0, 3));
    const int m = 1 + int(rng.uniform_int(0, n - 1));
    const InnerProduct s = random_spd(rng, n, 1.0);
    const DecomposableFrame f = random_frame(rng, n, m);
    const double direct = gram_volume(s, f);
    CHECK(direct * direct ==
          doctest::Approx(vol_squared_by_expansion(s, f)).epsilon(1e-9));
  }
}
