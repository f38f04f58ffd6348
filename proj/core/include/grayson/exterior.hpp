#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

#include "grayson/symspace.hpp"

namespace grayson {

std::int64_t binom(int n, int k);

// Increasing index m-tuples from {0..n-1} in lexicographic order; these index
// the coordinates of degree-m multivectors throughout.
std::vector<std::vector<int>> index_tuples(int n, int m);

// An element of the m-th exterior power of R^n in coordinates over the
// standard wedge basis (lexicographic tuple order). Degree 0 is a scalar.
class MultiVector {
 public:
  MultiVector(int dim, int degree, Eigen::VectorXd coords);

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  const Eigen::VectorXd& coords() const { return coords_; }
  double norm() const { return coords_.norm(); }

 private:
  int dim_, degree_;
  Eigen::VectorXd coords_;
};

// An ordered list of m linearly independent vectors in R^n, representing the
// decomposable multivector v_1 ^ ... ^ v_m and the subspace they span.
// Columns of the matrix are the vectors. m = 0 is the empty frame.
class DecomposableFrame {
 public:
  DecomposableFrame(int dim, Eigen::MatrixXd vectors);

  int dim() const { return dim_; }
  int rank() const { return int(vectors_.cols()); }
  const Eigen::MatrixXd& vectors() const { return vectors_; }

 private:
  int dim_;
  Eigen::MatrixXd vectors_;
};

// sqrt(det(s(v_i, v_j))): the length of the wedge of the frame in the induced
// exterior-power inner product. 1 for the empty frame.
double gram_volume(const InnerProduct& s, const DecomposableFrame& frame);

// Pluecker coordinates: the m x m minors of the frame matrix in lexicographic
// row-tuple order. No gcd reduction is applied.
MultiVector wedge_coords(const DecomposableFrame& frame);

// Wedge of a vector with a multivector, one degree up.
MultiVector wedge_vector(const Eigen::VectorXd& v, const MultiVector& xi);

// True iff v ^ xi = 0 within 1e-9 relative to |v| |xi|, i.e. v lies in the
// subspace carried by the (decomposable) xi.
bool subspace_membership(const Eigen::VectorXd& v, const MultiVector& xi);

// The degenerate symmetric form equal to s on the span of the frame and
// vanishing on its s-orthogonal complement. Depends on the frame only
// through its span. As a matrix: s V (V^T s V)^-1 V^T s.
SymTangent s_xi(const InnerProduct& s, const DecomposableFrame& frame);

// Gradient of the squared volume function at s: vol^2(s) * s_xi.
SymTangent grad_vol_squared(const InnerProduct& s,
                            const DecomposableFrame& frame);

// Gradient of ln(vol^2) at s: s_xi itself. Its metric norm is sqrt(m).
SymTangent grad_log_vol_squared(const InnerProduct& s,
                                const DecomposableFrame& frame);

}  // namespace grayson
