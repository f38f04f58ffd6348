#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "grayson/exterior.hpp"
#include "grayson/intmat.hpp"
#include "grayson/symspace.hpp"

namespace grayson {

// A saturated sublattice of Z^n (the ambient rank is n, the sublattice rank
// m with 0 <= m <= n). The basis is kept in canonical column Hermite normal
// form, so equal sublattices compare equal. Construction rejects
// non-saturated spans; use saturate() to build the saturation of an
// arbitrary full-rank span.
class Sublattice {
 public:
  // basis: n x m integer matrix whose columns span the sublattice. Must have
  // full column rank and span a saturated sublattice.
  explicit Sublattice(IntMat basis);

  static Sublattice zero(int ambient_dim);
  static Sublattice full(int ambient_dim);

  int ambient_dim() const { return basis_.rows(); }
  int rank() const { return basis_.cols(); }
  bool is_zero() const { return rank() == 0; }
  bool is_full() const { return rank() == ambient_dim(); }
  // Member of L' (proper and nonzero)?
  bool is_proper_nontrivial() const { return rank() > 0 && rank() < ambient_dim(); }

  const IntMat& basis() const { return basis_; }
  const std::vector<int>& pivot_rows() const { return pivots_; }

  bool contains(const Sublattice& other) const;
  bool contains_vector(const std::vector<Int>& v) const;
  bool operator==(const Sublattice& other) const;

  // Image under g (saturation and rank are preserved).
  Sublattice transformed(const IntegerAutomorphism& g) const;

  // Deterministic total order: pivot-row pattern first, then basis entries
  // in row-major order. Used for tie-breaking.
  static bool hnf_lex_less(const Sublattice& a, const Sublattice& b);

 private:
  struct RawTag {};
  Sublattice(IntMat basis, std::vector<int> pivots, RawTag)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  IntMat basis_;
  std::vector<int> pivots_;

  friend Sublattice saturate(const IntMat& m);
  friend Sublattice lattice_spanned_by(const IntMat& m);
};

// Smallest saturated sublattice containing the column span. Requires full
// column rank (throws RankDeficientError otherwise). Idempotent.
Sublattice saturate(const IntMat& m);

// Saturation of the column span of an arbitrary integer matrix (dependent or
// zero columns allowed).
Sublattice lattice_spanned_by(const IntMat& m);

// A generator of the rank-th exterior power of W over Z, i.e. the vector of
// maximal minors of the basis reduced by their gcd (1 when saturated), with
// the first nonzero coordinate positive. Rank 0 yields the scalar 1.
MultiVector xi_of(const Sublattice& w);

// Volume of W under s: the Gram volume of any Z-basis. 1 for W = 0.
double vol_sublattice(const InnerProduct& s, const Sublattice& w);

// Restriction of s to W in the coordinates of W's basis (rank x rank).
InnerProduct restricted_form(const InnerProduct& s, const Sublattice& w);

// The splitting Z^n = W (+) V by a deterministic complement V of W, and the
// inner product induced by s on Z^n/W = V via s-orthogonal projection.
struct QuotientSplit {
  InnerProduct form;     // induced form on Z^(n-m)
  IntMat complement;     // n x (n-m), basis of V
  IntMat transform;      // [basis(W) | complement], unimodular
  IntMat transform_inv;  // exact inverse

  // Image of a sublattice containing W in the quotient coordinates.
  Sublattice project(const Sublattice& w2) const;
};
QuotientSplit quotient_form(const InnerProduct& s, const Sublattice& w);

// Deterministic complement V with W (+) V = Z^n.
IntMat hnf_complement(const Sublattice& w);

// Caps for the certified enumeration of short vectors / small sublattices.
struct EnumOptions {
  // Hard cap on the number of lattice points the ellipsoid walk may visit.
  std::size_t max_points = 8'000'000;
  // Hard cap on candidate subsets examined when assembling rank-k
  // sublattices from short vectors.
  std::size_t max_subsets = 8'000'000;
  // Optional override of the certified enumeration radius.
  std::optional<double> radius_override;
};

// Sign-canonical primitive vectors x (first nonzero coordinate positive)
// with |x|_s <= radius, sorted lexicographically. Exact and complete;
// throws UncertifiedEnumerationError when the walk would exceed the caps.
std::vector<std::vector<long long>> short_vectors(const InnerProduct& s,
                                                  double radius,
                                                  const EnumOptions& opts = {});

// Norm of a shortest nonzero integer vector under s.
double shortest_vector_norm(const InnerProduct& s, const EnumOptions& opts = {});

struct MinVolumeResult {
  Sublattice lattice;
  double volume;
  double certified_radius;  // short-vector radius that certifies optimality
};

// A saturated rank-k sublattice of minimal volume under s, with ties broken
// by hnf_lex_less. Certified complete via the Minkowski/Hermite bound on the
// successive minima of any better candidate; throws
// UncertifiedEnumerationError when certification is impossible within the
// caps.
MinVolumeResult min_volume_sublattice(const InnerProduct& s, int k,
                                      const EnumOptions& opts = {});

// All saturated rank-k sublattices with volume <= vcut, certified complete,
// sorted by (volume, hnf_lex). k must satisfy 0 < k < n.
std::vector<std::pair<Sublattice, double>> sublattices_with_volume_at_most(
    const InnerProduct& s, int k, double vcut, const EnumOptions& opts = {});

// Grayson's canonical plot and polygon: per-rank minimal log-volumes, their
// lower convex hull, the slopes of the hull segments (strictly increasing),
// and the canonical filtration given by the minimizers at the hull vertices
// (verified nested and saturated).
struct CanonicalPolygon {
  std::vector<std::pair<int, double>> points;  // (rank, ln min volume)
  std::vector<int> hull_vertices;              // increasing ranks
  std::vector<double> slopes;                  // one per hull segment
  std::vector<Sublattice> filtration;          // one per hull vertex
};
CanonicalPolygon canonical_polygon(const InnerProduct& s,
                                   const EnumOptions& opts = {});

// Slope of the line joining the plot points of W0 and W1 in the canonical
// plot of s: (ln vol_W1 - ln vol_W0) / (rk W1 - rk W0). Requires a strict
// containment W0 < W1 (checked exactly).
double c_tilde(const InnerProduct& s, const Sublattice& w0,
               const Sublattice& w1);

// Extremal slopes at W in L': c_sup is the supremum of c_tilde(W0 < W) over
// W0, realized as the steepest segment into the full-rank point of the
// canonical plot of s restricted to W; c_inf is the infimum of
// c_tilde(W < W2) over W2, realized through the canonical plot of the
// quotient form.
double c_sup(const InnerProduct& s, const Sublattice& w,
             const EnumOptions& opts = {});
double c_inf(const InnerProduct& s, const Sublattice& w,
             const EnumOptions& opts = {});

// Independent route for testing: the same extrema by direct certified
// enumeration of the competing sublattices in the ambient lattice.
// Practical only for small n.
double c_sup_direct(const InnerProduct& s, const Sublattice& w,
                    const EnumOptions& opts = {});
double c_inf_direct(const InnerProduct& s, const Sublattice& w,
                    const EnumOptions& opts = {});

// The instability measure exp(c_inf - c_sup) of W at a point of the ray
// quotient. The input is canonicalized to a scale-free representative
// before evaluation, so the value is a function of the ray: feeding
// normalize_det(r * s) for any r > 0 yields the identical result.
double d_w(const NormalizedPoint& x, const Sublattice& w,
           const EnumOptions& opts = {});

struct DwBreakdown {
  double c_inf, c_sup, d_w;
};
DwBreakdown d_w_breakdown(const NormalizedPoint& x, const Sublattice& w,
                          const EnumOptions& opts = {});

}  // namespace grayson
