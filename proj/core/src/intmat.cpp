#include "grayson/intmat.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace grayson {

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// Extended gcd: returns g and (p, q) with p*a + q*b = g >= 0.
struct Xgcd {
  Int g, p, q;
};
Xgcd xgcd(const Int& a, const Int& b) {
  if (b == 0) {
    if (a < 0) return {-a, -1, 0};
    return {a, 1, 0};
  }
  Xgcd r = xgcd(b, a % b);
  return {r.g, r.q, r.p - (a / b) * r.q};
}

}  // namespace

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMat IntMat::from_rows(const std::vector<std::vector<long long>>& rows) {
  const int r = int(rows.size());
  const int c = r == 0 ? 0 : int(rows[0].size());
  IntMat m(r, c);
  for (int i = 0; i < r; ++i) {
    if (int(rows[i].size()) != c)
      throw std::invalid_argument("IntMat::from_rows: ragged rows");
    for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMat IntMat::operator*(const IntMat& rhs) const {
  if (cols_ != rhs.rows_)
    throw DimensionMismatchError("IntMat multiply: inner dimensions differ");
  IntMat out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& aik = (*this)(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) out(i, j) += aik * rhs(k, j);
    }
  return out;
}

IntMat IntMat::operator-() const {
  IntMat out(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(i, j) = -(*this)(i, j);
  return out;
}

IntMat IntMat::transposed() const {
  IntMat out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

IntMat IntMat::block(int i0, int j0, int nrows, int ncols) const {
  IntMat out(nrows, ncols);
  for (int i = 0; i < nrows; ++i)
    for (int j = 0; j < ncols; ++j) out(i, j) = (*this)(i0 + i, j0 + j);
  return out;
}

IntMat IntMat::concat_cols(const IntMat& rhs) const {
  if (rows_ != rhs.rows_)
    throw DimensionMismatchError("IntMat concat: row counts differ");
  IntMat out(rows_, cols_ + rhs.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
    for (int j = 0; j < rhs.cols_; ++j) out(i, cols_ + j) = rhs(i, j);
  }
  return out;
}

Eigen::MatrixXd IntMat::to_double() const {
  Eigen::MatrixXd out(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(i, j) = double((*this)(i, j));
  return out;
}

std::string IntMat::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
  }
  os << "]";
  return os.str();
}

Int det(const IntMat& m) {
  if (m.rows() != m.cols()) throw DimensionMismatchError("det: not square");
  const int n = m.rows();
  if (n == 0) return 1;
  IntMat a = m;
  Int sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (a(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

int rank_over_q(const IntMat& m) {
  IntMat a = m;
  const int rows = a.rows(), cols = a.cols();
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int i = rank; i < rows; ++i)
      if (a(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < cols; ++j) std::swap(a(rank, j), a(piv, j));
    for (int i = rank + 1; i < rows; ++i) {
      if (a(i, col) == 0) continue;
      const Int f1 = a(rank, col), f2 = a(i, col);
      for (int j = 0; j < cols; ++j) a(i, j) = a(i, j) * f1 - a(rank, j) * f2;
    }
    ++rank;
  }
  return rank;
}

IntMat inverse_unimodular(const IntMat& m) {
  const Int d = det(m);
  if (d != 1 && d != -1)
    throw NotUnimodularError("inverse_unimodular: determinant is not +-1");
  const int n = m.rows();
  // adjugate, scaled by det (1/det == det here)
  IntMat inv(n, n);
  if (n == 1) {
    inv(0, 0) = d;
    return inv;
  }
  IntMat sub(n - 1, n - 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (int c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          sub(rr, cc) = m(r, c);
          ++cc;
        }
        ++rr;
      }
      Int cof = det(sub);
      if ((i + j) % 2) cof = -cof;
      inv(j, i) = cof * d;
    }
  return inv;
}

HnfResult col_hnf(const IntMat& a) {
  IntMat h = a;
  const int n = h.rows(), m = h.cols();
  std::vector<int> pivots;
  int j = 0;  // next column to place a pivot in
  for (int r = 0; r < n && j < m; ++r) {
    // gcd-reduce columns j..m-1 against row r
    for (int k = j + 1; k < m; ++k) {
      if (h(r, k) == 0) continue;
      if (h(r, j) == 0) {
        for (int i = 0; i < n; ++i) std::swap(h(i, j), h(i, k));
        continue;
      }
      const Xgcd e = xgcd(h(r, j), h(r, k));
      const Int aj = h(r, j) / e.g, ak = h(r, k) / e.g;
      for (int i = 0; i < n; ++i) {
        const Int cj = h(i, j), ck = h(i, k);
        h(i, j) = e.p * cj + e.q * ck;
        h(i, k) = aj * ck - ak * cj;
      }
    }
    if (h(r, j) == 0) continue;
    if (h(r, j) < 0)
      for (int i = 0; i < n; ++i) h(i, j) = -h(i, j);
    // reduce earlier columns into [0, pivot)
    for (int k = 0; k < j; ++k) {
      // floor division
      Int q = h(r, k) / h(r, j);
      if (h(r, k) % h(r, j) < 0) q -= 1;
      if (q == 0) continue;
      for (int i = 0; i < n; ++i) h(i, k) -= q * h(i, j);
    }
    pivots.push_back(r);
    ++j;
  }
  HnfResult out;
  out.h = h.block(0, 0, n, int(pivots.size()));
  out.pivot_rows = std::move(pivots);
  return out;
}

SnfResult snf(const IntMat& a) {
  const int n = a.rows(), m = a.cols();
  SnfResult r{a, IntMat::identity(n), IntMat::identity(m)};
  IntMat& s = r.s;
  IntMat& u = r.u;
  IntMat& v = r.v;

  // Row op on s: R_i += c*R_k  corresponds to U: C_k -= c*C_i.
  auto row_add = [&](int i, int k, const Int& c) {
    for (int j = 0; j < m; ++j) s(i, j) += c * s(k, j);
    for (int j = 0; j < n; ++j) u(j, k) -= c * u(j, i);
  };
  auto row_swap = [&](int i, int k) {
    for (int j = 0; j < m; ++j) std::swap(s(i, j), s(k, j));
    for (int j = 0; j < n; ++j) std::swap(u(j, i), u(j, k));
  };
  auto row_neg = [&](int i) {
    for (int j = 0; j < m; ++j) s(i, j) = -s(i, j);
    for (int j = 0; j < n; ++j) u(j, i) = -u(j, i);
  };
  // Col op on s: C_j += c*C_k  corresponds to V: R_k -= c*R_j.
  auto col_add = [&](int jc, int k, const Int& c) {
    for (int i = 0; i < n; ++i) s(i, jc) += c * s(i, k);
    for (int i = 0; i < m; ++i) v(k, i) -= c * v(jc, i);
  };
  auto col_swap = [&](int jc, int k) {
    for (int i = 0; i < n; ++i) std::swap(s(i, jc), s(i, k));
    for (int i = 0; i < m; ++i) std::swap(v(jc, i), v(k, i));
  };

  const int t = std::min(n, m);
  for (int k = 0; k < t; ++k) {
    // find a nonzero entry of minimal absolute value in the trailing block
    while (true) {
      int bi = -1, bj = -1;
      Int best = 0;
      for (int i = k; i < n; ++i)
        for (int j = k; j < m; ++j)
          if (s(i, j) != 0 && (bi < 0 || abs_int(s(i, j)) < best)) {
            best = abs_int(s(i, j));
            bi = i;
            bj = j;
          }
      if (bi < 0) break;  // trailing block zero
      if (bi != k) row_swap(k, bi);
      if (bj != k) col_swap(k, bj);
      if (s(k, k) < 0) row_neg(k);
      bool clean = true;
      for (int i = k + 1; i < n; ++i)
        if (s(i, k) != 0) {
          row_add(i, k, -(s(i, k) / s(k, k)));
          if (s(i, k) != 0) clean = false;
        }
      for (int j = k + 1; j < m; ++j)
        if (s(k, j) != 0) {
          col_add(j, k, -(s(k, j) / s(k, k)));
          if (s(k, j) != 0) clean = false;
        }
      if (!clean) continue;
      // ensure divisibility of the remaining block by the pivot
      bool divides = true;
      for (int i = k + 1; i < n && divides; ++i)
        for (int j = k + 1; j < m && divides; ++j)
          if (s(i, j) % s(k, k) != 0) {
            row_add(k, i, 1);
            divides = false;
          }
      if (divides) break;
    }
  }
  return r;
}

std::optional<std::vector<Int>> solve_in_lattice(const HnfResult& basis,
                                                 const std::vector<Int>& b) {
  const IntMat& h = basis.h;
  const int n = h.rows(), m = h.cols();
  if (int(b.size()) != n)
    throw DimensionMismatchError("solve_in_lattice: vector length");
  std::vector<Int> r = b, x(m);
  for (int j = 0; j < m; ++j) {
    const int pr = basis.pivot_rows[j];
    if (r[pr] % h(pr, j) != 0) return std::nullopt;
    x[j] = r[pr] / h(pr, j);
    if (x[j] != 0)
      for (int i = 0; i < n; ++i) r[i] -= x[j] * h(i, j);
  }
  for (int i = 0; i < n; ++i)
    if (r[i] != 0) return std::nullopt;
  return x;
}

std::vector<Int> maximal_minors(const IntMat& a) {
  const int n = a.rows(), m = a.cols();
  if (m > n) throw DimensionMismatchError("maximal_minors: more cols than rows");
  std::vector<Int> out;
  std::vector<int> idx(m);
  for (int i = 0; i < m; ++i) idx[i] = i;
  IntMat sub(m, m);
  while (true) {
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) sub(i, j) = a(idx[i], j);
    out.push_back(det(sub));
    // next lexicographic m-combination of {0..n-1}
    int i = m - 1;
    while (i >= 0 && idx[i] == n - m + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int k = i + 1; k < m; ++k) idx[k] = idx[k - 1] + 1;
  }
  return out;
}

Int gcd_all(const std::vector<Int>& v) {
  Int g = 0;
  for (const Int& x : v) g = boost::multiprecision::gcd(g, abs_int(x));
  return g;
}

}  // namespace grayson
