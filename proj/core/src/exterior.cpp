#include "grayson/exterior.hpp"

#include <cmath>

namespace grayson {

std::int64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<std::vector<int>> index_tuples(int n, int m) {
  std::vector<std::vector<int>> out;
  if (m < 0 || m > n) return out;
  std::vector<int> idx(m);
  for (int i = 0; i < m; ++i) idx[i] = i;
  while (true) {
    out.push_back(idx);
    int i = m - 1;
    while (i >= 0 && idx[i] == n - m + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int k = i + 1; k < m; ++k) idx[k] = idx[k - 1] + 1;
  }
  return out;
}

namespace {

// Rank of an increasing tuple in the lexicographic enumeration.
int tuple_rank(const std::vector<int>& t, int n) {
  const int m = int(t.size());
  int rank = 0;
  int prev = -1;
  for (int i = 0; i < m; ++i) {
    for (int v = prev + 1; v < t[i]; ++v)
      rank += int(binom(n - 1 - v, m - 1 - i));
    prev = t[i];
  }
  return rank;
}

Eigen::MatrixXd frame_gram(const InnerProduct& s,
                           const DecomposableFrame& frame) {
  const Eigen::MatrixXd& v = frame.vectors();
  Eigen::MatrixXd g = v.transpose() * s.gram() * v;
  return 0.5 * (g + g.transpose());
}

}  // namespace

MultiVector::MultiVector(int dim, int degree, Eigen::VectorXd coords)
    : dim_(dim), degree_(degree), coords_(std::move(coords)) {
  if (dim < 0 || degree < 0 || degree > dim)
    throw DimensionMismatchError("MultiVector: degree out of range");
  if (coords_.size() != binom(dim, degree))
    throw DimensionMismatchError("MultiVector: coordinate count");
}

DecomposableFrame::DecomposableFrame(int dim, Eigen::MatrixXd vectors)
    : dim_(dim), vectors_(std::move(vectors)) {
  if (int(vectors_.rows()) != dim || int(vectors_.cols()) > dim)
    throw DimensionMismatchError("DecomposableFrame: vector shape");
  if (!vectors_.allFinite())
    throw std::invalid_argument("DecomposableFrame: non-finite entries");
  if (vectors_.cols() > 0) {
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(vectors_);
    if (qr.rank() != vectors_.cols())
      throw DependentFrameError("DecomposableFrame: vectors are dependent");
  }
}

double gram_volume(const InnerProduct& s, const DecomposableFrame& frame) {
  if (s.dim() != frame.dim())
    throw DimensionMismatchError("gram_volume: dimension mismatch");
  if (frame.rank() == 0) return 1.0;
  const Eigen::MatrixXd g = frame_gram(s, frame);
  Eigen::LLT<Eigen::MatrixXd> llt(g);
  if (llt.info() != Eigen::Success)
    throw DependentFrameError("gram_volume: degenerate frame Gram matrix");
  double half_logdet = 0;
  const Eigen::MatrixXd l = llt.matrixL();
  for (int i = 0; i < g.rows(); ++i) half_logdet += std::log(l(i, i));
  return std::exp(half_logdet);
}

MultiVector wedge_coords(const DecomposableFrame& frame) {
  const int n = frame.dim(), m = frame.rank();
  const auto tuples = index_tuples(n, m);
  Eigen::VectorXd coords(std::int64_t(tuples.size()));
  Eigen::MatrixXd sub(m, m);
  for (size_t t = 0; t < tuples.size(); ++t) {
    for (int i = 0; i < m; ++i) sub.row(i) = frame.vectors().row(tuples[t][i]);
    coords(long(t)) = m == 0 ? 1.0 : sub.determinant();
  }
  return MultiVector(n, m, std::move(coords));
}

MultiVector wedge_vector(const Eigen::VectorXd& v, const MultiVector& xi) {
  const int n = xi.dim(), m = xi.degree();
  if (int(v.size()) != n)
    throw DimensionMismatchError("wedge_vector: dimension mismatch");
  if (m == n)
    throw DimensionMismatchError("wedge_vector: degree already maximal");
  const auto upper = index_tuples(n, m + 1);
  Eigen::VectorXd coords = Eigen::VectorXd::Zero(std::int64_t(upper.size()));
  std::vector<int> rest(m);
  for (size_t t = 0; t < upper.size(); ++t) {
    const auto& tup = upper[t];
    double acc = 0;
    for (int j = 0; j <= m; ++j) {
      for (int i = 0, k = 0; i <= m; ++i)
        if (i != j) rest[k++] = tup[i];
      const double sign = (j % 2 == 0) ? 1.0 : -1.0;
      acc += sign * v(tup[j]) * xi.coords()(tuple_rank(rest, n));
    }
    coords(long(t)) = acc;
  }
  return MultiVector(n, m + 1, std::move(coords));
}

bool subspace_membership(const Eigen::VectorXd& v, const MultiVector& xi) {
  if (xi.norm() == 0)
    throw std::invalid_argument("subspace_membership: zero multivector");
  if (xi.degree() == xi.dim()) return true;  // top degree carries all of V
  const MultiVector w = wedge_vector(v, xi);
  const double tol = 1e-9 * v.norm() * xi.norm();
  return w.coords().size() == 0 || w.coords().cwiseAbs().maxCoeff() <= tol;
}

SymTangent s_xi(const InnerProduct& s, const DecomposableFrame& frame) {
  if (s.dim() != frame.dim())
    throw DimensionMismatchError("s_xi: dimension mismatch");
  const int n = s.dim();
  if (frame.rank() == 0) return SymTangent::zero(n);
  const Eigen::MatrixXd sv = s.gram() * frame.vectors();
  const Eigen::MatrixXd g = frame_gram(s, frame);
  Eigen::LLT<Eigen::MatrixXd> llt(g);
  if (llt.info() != Eigen::Success)
    throw DependentFrameError("s_xi: degenerate frame Gram matrix");
  // s V (V^T s V)^-1 V^T s, via the m x m solve
  const Eigen::MatrixXd out = sv * llt.solve(sv.transpose());
  return SymTangent(0.5 * (out + out.transpose()));
}

SymTangent grad_vol_squared(const InnerProduct& s,
                            const DecomposableFrame& frame) {
  const double vol = gram_volume(s, frame);
  return SymTangent(vol * vol * s_xi(s, frame).mat());
}

SymTangent grad_log_vol_squared(const InnerProduct& s,
                                const DecomposableFrame& frame) {
  return s_xi(s, frame);
}

}  // namespace grayson
