#pragma once

#include <Eigen/Dense>

#include "grayson/errors.hpp"
#include "grayson/intmat.hpp"

namespace grayson {

// A positive definite symmetric bilinear form on R^n, stored as its Gram
// matrix in the standard basis. Construction validates symmetry (1e-12
// relative), positive definiteness and finiteness; inputs within tolerance
// of symmetric are symmetrized by averaging.
class InnerProduct {
 public:
  explicit InnerProduct(Eigen::MatrixXd gram);

  int dim() const { return int(gram_.rows()); }
  const Eigen::MatrixXd& gram() const { return gram_; }

  static InnerProduct standard(int n) {
    return InnerProduct(Eigen::MatrixXd::Identity(n, n));
  }

 private:
  Eigen::MatrixXd gram_;
};

// A symmetric bilinear form serving as a tangent vector at a point of the
// space of inner products.
class SymTangent {
 public:
  explicit SymTangent(Eigen::MatrixXd mat);

  int dim() const { return int(mat_.rows()); }
  const Eigen::MatrixXd& mat() const { return mat_; }

  static SymTangent zero(int n) {
    return SymTangent(Eigen::MatrixXd::Zero(n, n));
  }

 private:
  Eigen::MatrixXd mat_;
};

// A point of the ray quotient, stored as its determinant-one representative.
class NormalizedPoint {
 public:
  explicit NormalizedPoint(InnerProduct rep);

  int dim() const { return rep_.dim(); }
  const InnerProduct& rep() const { return rep_; }

 private:
  InnerProduct rep_;
};

// An element of GL_n(Z): integer matrix with determinant +-1, checked
// exactly.
class IntegerAutomorphism {
 public:
  explicit IntegerAutomorphism(IntMat mat);

  int dim() const { return mat_.rows(); }
  const IntMat& mat() const { return mat_; }
  // Exact integer inverse.
  IntegerAutomorphism inverse() const;

  static IntegerAutomorphism identity(int n) {
    return IntegerAutomorphism(IntMat::identity(n));
  }

  IntegerAutomorphism operator*(const IntegerAutomorphism& rhs) const {
    return IntegerAutomorphism(mat_ * rhs.mat_);
  }

 private:
  IntMat mat_;
};

// Riemannian metric tensor at s:  tr(s^-1 v s^-1 u).
double metric_inner(const InnerProduct& s, const SymTangent& u,
                    const SymTangent& v);

// Geodesic distance sqrt(sum ln^2 lambda_i) over the eigenvalues of
// s0^-1 s1. Symmetric, zero iff equal, invariant under act().
double distance(const InnerProduct& s0, const InnerProduct& s1);

// Point at parameter t on the geodesic from s0 (t=0) to s1 (t=1):
// s0^(1/2) (s0^(-1/2) s1 s0^(-1/2))^t s0^(1/2). Constant speed
// distance(s0,s1) per unit t; stays in the det-1 slice when both ends are.
InnerProduct geodesic(const InnerProduct& s0, const InnerProduct& s1, double t);

// Left action of GL_n(Z): s |-> (g^-1)^T gram g^-1. An isometry.
InnerProduct act(const IntegerAutomorphism& g, const InnerProduct& s);
NormalizedPoint act(const IntegerAutomorphism& g, const NormalizedPoint& x);

// Scale to determinant one: s / det(s)^(1/n). Idempotent; constant on rays.
NormalizedPoint normalize_det(const InnerProduct& s);

// Riemannian exponential at s: the point reached by the unit-speed geodesic
// with initial velocity u after unit time (u need not be unit; the step is
// |u|_g). Requires tr(s^-1 u) = 0 to stay in the det-1 slice.
InnerProduct exp_map(const InnerProduct& s, const SymTangent& u);

// Inverse of exp_map: the initial velocity of the geodesic from s to y.
SymTangent log_map(const InnerProduct& s, const InnerProduct& y);

double log_det(const InnerProduct& s);

}  // namespace grayson
