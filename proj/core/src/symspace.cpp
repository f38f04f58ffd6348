#include "grayson/symspace.hpp"

#include <cmath>

namespace grayson {

namespace {

constexpr double kSymTol = 1e-12;
constexpr double kDetTol = 1e-9;

Eigen::MatrixXd check_symmetric(Eigen::MatrixXd m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw DimensionMismatchError(std::string(what) + ": not a square matrix");
  if (!m.allFinite())
    throw std::invalid_argument(std::string(what) + ": non-finite entries");
  const double scale = 1.0 + m.cwiseAbs().maxCoeff();
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (asym > kSymTol * scale)
    throw std::invalid_argument(std::string(what) + ": not symmetric");
  return 0.5 * (m + m.transpose());
}

// Symmetric power s^p via eigendecomposition. Requires SPD input.
Eigen::MatrixXd sym_power(const Eigen::MatrixXd& s, double p) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s);
  Eigen::VectorXd d = es.eigenvalues();
  for (int i = 0; i < d.size(); ++i) d(i) = std::pow(d(i), p);
  return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().transpose();
}

}  // namespace

InnerProduct::InnerProduct(Eigen::MatrixXd gram)
    : gram_(check_symmetric(std::move(gram), "InnerProduct")) {
  Eigen::LLT<Eigen::MatrixXd> llt(gram_);
  if (llt.info() != Eigen::Success)
    throw NotPositiveDefiniteError("InnerProduct: form is not positive definite");
}

SymTangent::SymTangent(Eigen::MatrixXd mat)
    : mat_(check_symmetric(std::move(mat), "SymTangent")) {}

NormalizedPoint::NormalizedPoint(InnerProduct rep) : rep_(std::move(rep)) {
  const double ld = log_det(rep_);
  if (std::abs(std::expm1(ld)) > kDetTol)
    throw std::invalid_argument("NormalizedPoint: determinant is not 1");
}

IntegerAutomorphism::IntegerAutomorphism(IntMat mat) : mat_(std::move(mat)) {
  if (mat_.rows() != mat_.cols() || mat_.rows() == 0)
    throw DimensionMismatchError("IntegerAutomorphism: not square");
  const Int d = det(mat_);
  if (d != 1 && d != -1)
    throw NotUnimodularError("IntegerAutomorphism: determinant is not +-1");
}

IntegerAutomorphism IntegerAutomorphism::inverse() const {
  return IntegerAutomorphism(inverse_unimodular(mat_));
}

double metric_inner(const InnerProduct& s, const SymTangent& u,
                    const SymTangent& v) {
  if (s.dim() != u.dim() || s.dim() != v.dim())
    throw DimensionMismatchError("metric_inner: dimension mismatch");
  Eigen::LLT<Eigen::MatrixXd> llt(s.gram());
  const Eigen::MatrixXd su = llt.solve(u.mat());
  const Eigen::MatrixXd sv = llt.solve(v.mat());
  return (sv * su).trace();
}

double distance(const InnerProduct& s0, const InnerProduct& s1) {
  if (s0.dim() != s1.dim())
    throw DimensionMismatchError("distance: dimension mismatch");
  if (s0.gram() == s1.gram()) return 0.0;
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(s1.gram(),
                                                               s0.gram());
  double sum = 0;
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    const double l = std::log(es.eigenvalues()(i));
    sum += l * l;
  }
  return std::sqrt(sum);
}

InnerProduct geodesic(const InnerProduct& s0, const InnerProduct& s1,
                      double t) {
  if (s0.dim() != s1.dim())
    throw DimensionMismatchError("geodesic: dimension mismatch");
  const Eigen::MatrixXd r = sym_power(s0.gram(), 0.5);
  const Eigen::MatrixXd rinv = sym_power(s0.gram(), -0.5);
  Eigen::MatrixXd mid = rinv * s1.gram() * rinv;
  mid = 0.5 * (mid + mid.transpose());
  Eigen::MatrixXd out = r * sym_power(mid, t) * r;
  return InnerProduct(0.5 * (out + out.transpose()));
}

InnerProduct act(const IntegerAutomorphism& g, const InnerProduct& s) {
  if (g.dim() != s.dim())
    throw DimensionMismatchError("act: dimension mismatch");
  const Eigen::MatrixXd gi = g.inverse().mat().to_double();
  Eigen::MatrixXd out = gi.transpose() * s.gram() * gi;
  return InnerProduct(0.5 * (out + out.transpose()));
}

NormalizedPoint act(const IntegerAutomorphism& g, const NormalizedPoint& x) {
  return NormalizedPoint(act(g, x.rep()));
}

double log_det(const InnerProduct& s) {
  Eigen::LLT<Eigen::MatrixXd> llt(s.gram());
  const Eigen::MatrixXd l = llt.matrixL();
  double ld = 0;
  for (int i = 0; i < s.dim(); ++i) ld += std::log(l(i, i));
  return 2.0 * ld;
}

NormalizedPoint normalize_det(const InnerProduct& s) {
  const double scale = std::exp(-log_det(s) / s.dim());
  return NormalizedPoint(InnerProduct(scale * s.gram()));
}

InnerProduct exp_map(const InnerProduct& s, const SymTangent& u) {
  if (s.dim() != u.dim())
    throw DimensionMismatchError("exp_map: dimension mismatch");
  const Eigen::MatrixXd r = sym_power(s.gram(), 0.5);
  const Eigen::MatrixXd rinv = sym_power(s.gram(), -0.5);
  Eigen::MatrixXd a = rinv * u.mat() * rinv;
  a = 0.5 * (a + a.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  Eigen::VectorXd d = es.eigenvalues();
  for (int i = 0; i < d.size(); ++i) d(i) = std::exp(d(i));
  const Eigen::MatrixXd e =
      es.eigenvectors() * d.asDiagonal() * es.eigenvectors().transpose();
  Eigen::MatrixXd out = r * e * r;
  return InnerProduct(0.5 * (out + out.transpose()));
}

SymTangent log_map(const InnerProduct& s, const InnerProduct& y) {
  if (s.dim() != y.dim())
    throw DimensionMismatchError("log_map: dimension mismatch");
  const Eigen::MatrixXd r = sym_power(s.gram(), 0.5);
  const Eigen::MatrixXd rinv = sym_power(s.gram(), -0.5);
  Eigen::MatrixXd m = rinv * y.gram() * rinv;
  m = 0.5 * (m + m.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  Eigen::VectorXd d = es.eigenvalues();
  for (int i = 0; i < d.size(); ++i) d(i) = std::log(d(i));
  const Eigen::MatrixXd lg =
      es.eigenvectors() * d.asDiagonal() * es.eigenvectors().transpose();
  Eigen::MatrixXd out = r * lg * r;
  return SymTangent(0.5 * (out + out.transpose()));
}

}  // namespace grayson
