#include "grayson/sampling.hpp"

#include <cmath>

namespace grayson {

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  // Box-Muller
  double u1 = uniform(), u2 = uniform();
  while (u1 <= 1e-300) u1 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  have_spare_ = true;
  spare_ = r * std::sin(2.0 * M_PI * u2);
  return r * std::cos(2.0 * M_PI * u2);
}

InnerProduct random_spd(Rng& rng, int n, double spread) {
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = rng.normal();
  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  const Eigen::MatrixXd q = qr.householderQ();
  Eigen::VectorXd d(n);
  for (int i = 0; i < n; ++i) d(i) = std::exp(rng.uniform(-spread, spread));
  Eigen::MatrixXd s = q * d.asDiagonal() * q.transpose();
  return InnerProduct(0.5 * (s + s.transpose()));
}

NormalizedPoint random_det1_point(Rng& rng, int n, double spread) {
  return normalize_det(random_spd(rng, n, spread));
}

Eigen::MatrixXd random_symmetric(Rng& rng, int n) {
  Eigen::MatrixXd u(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) u(i, j) = u(j, i) = rng.normal();
  return u;
}

SymTangent random_unit_direction(Rng& rng, const InnerProduct& s) {
  const int n = s.dim();
  for (int attempt = 0; attempt < 64; ++attempt) {
    Eigen::MatrixXd u = random_symmetric(rng, n);
    const Eigen::MatrixXd sinv_u = s.gram().llt().solve(u);
    u -= (sinv_u.trace() / n) * s.gram();
    SymTangent cand(u);
    const double norm = std::sqrt(metric_inner(s, cand, cand));
    if (norm > 1e-8) return SymTangent(u / norm);
  }
  throw std::logic_error("random_unit_direction: degenerate draws");
}

IntegerAutomorphism random_unimodular(Rng& rng, int n, int steps) {
  IntMat g = IntMat::identity(n);
  for (int s = 0; s < steps; ++s) {
    const int kind = int(rng.uniform_int(0, 2));
    IntMat e = IntMat::identity(n);
    if (kind == 0 && n >= 2) {  // shear
      int i = int(rng.uniform_int(0, n - 1)), j = i;
      while (j == i) j = int(rng.uniform_int(0, n - 1));
      e(i, j) = rng.uniform_int(0, 1) ? 1 : -1;
    } else if (kind == 1 && n >= 2) {  // swap with sign
      int i = int(rng.uniform_int(0, n - 1)), j = i;
      while (j == i) j = int(rng.uniform_int(0, n - 1));
      e(i, i) = 0;
      e(j, j) = 0;
      e(i, j) = 1;
      e(j, i) = -1;
    } else {  // sign flip
      int i = int(rng.uniform_int(0, n - 1));
      e(i, i) = -1;
    }
    g = g * e;
  }
  return IntegerAutomorphism(std::move(g));
}

Sublattice random_saturated_sublattice(Rng& rng, int n, int k) {
  for (int attempt = 0; attempt < 256; ++attempt) {
    IntMat m(n, k);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < k; ++j) m(i, j) = rng.uniform_int(-3, 3);
    if (rank_over_q(m) == k) return saturate(m);
  }
  throw std::logic_error("random_saturated_sublattice: rank draws failed");
}

InnerProduct random_integer_gram(Rng& rng, int n, int entry_bound) {
  for (int attempt = 0; attempt < 256; ++attempt) {
    IntMat a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        a(i, j) = rng.uniform_int(-entry_bound, entry_bound);
    if (det(a) == 0) continue;
    const IntMat g = a.transposed() * a;
    return InnerProduct(g.to_double());
  }
  throw std::logic_error("random_integer_gram: singular draws");
}

DecomposableFrame random_frame(Rng& rng, int n, int m, int bound) {
  for (int attempt = 0; attempt < 256; ++attempt) {
    Eigen::MatrixXd v(n, m);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j)
        v(i, j) = double(rng.uniform_int(-bound, bound));
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(v);
    if (qr.rank() == m) return DecomposableFrame(n, std::move(v));
  }
  throw std::logic_error("random_frame: rank draws failed");
}

NormalizedPoint axis_cusp_point(int n, double eps) {
  Eigen::VectorXd d(n);
  d(0) = std::pow(eps, double(n - 1));
  for (int i = 1; i < n; ++i) d(i) = 1.0 / eps;
  return NormalizedPoint(InnerProduct(Eigen::MatrixXd(d.asDiagonal())));
}

}  // namespace grayson
