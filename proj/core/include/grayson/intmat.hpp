#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <Eigen/Dense>

#include <optional>
#include <string>
#include <vector>

#include "grayson/errors.hpp"

namespace grayson {

using Int = boost::multiprecision::cpp_int;

// Dense integer matrix with exact arithmetic. Sizes here are small (ambient
// dimension at desk scale), so no attention is paid to asymptotics; what
// matters is that Hermite/Smith forms, determinants and solves are exact.
class IntMat {
 public:
  IntMat() = default;
  IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  static IntMat identity(int n);
  static IntMat from_rows(const std::vector<std::vector<long long>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Int& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  IntMat operator*(const IntMat& rhs) const;
  IntMat operator-() const;
  bool operator==(const IntMat& rhs) const = default;

  IntMat transposed() const;
  IntMat block(int i0, int j0, int nrows, int ncols) const;
  IntMat col(int j) const { return block(0, j, rows_, 1); }
  // Horizontal concatenation [*this | rhs].
  IntMat concat_cols(const IntMat& rhs) const;

  Eigen::MatrixXd to_double() const;
  std::string to_string() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

// Exact determinant (Bareiss fraction-free elimination).
Int det(const IntMat& m);

// Rank over Q.
int rank_over_q(const IntMat& m);

// Exact inverse of a matrix with det = +-1. Throws NotUnimodularError.
IntMat inverse_unimodular(const IntMat& m);

// Column-style Hermite normal form of the column span. H = A * U for some
// unimodular U; columns are ordered by increasing pivot row, pivots are
// positive, entries to the left of a pivot in its row are reduced into
// [0, pivot). Zero columns are dropped, so H has exactly rank(A) columns.
// The result is the canonical basis of the column lattice: two integer
// matrices span the same lattice iff their HNFs are identical.
struct HnfResult {
  IntMat h;
  std::vector<int> pivot_rows;  // increasing, one per column of h
};
HnfResult col_hnf(const IntMat& a);

// Smith normal form a = u * s * v with u, v unimodular and s diagonal with
// divisibility d1 | d2 | ... (nonnegative).
struct SnfResult {
  IntMat s, u, v;
};
SnfResult snf(const IntMat& a);

// Coefficients x with basis * x = b, if b lies in the column lattice of
// basis. basis must be in column HNF with the given pivot rows.
std::optional<std::vector<Int>> solve_in_lattice(const HnfResult& basis,
                                                 const std::vector<Int>& b);

// All m x m minors of the n x m matrix (rows chosen as increasing index
// tuples in lexicographic order).
std::vector<Int> maximal_minors(const IntMat& a);

Int gcd_all(const std::vector<Int>& v);

}  // namespace grayson
