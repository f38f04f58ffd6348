#pragma once

#include "grayson/lattice.hpp"
#include "grayson/report.hpp"

namespace grayson {

// The open set X(W, t) = { x : d_W(x) > t } of the equivariant cover, for a
// proper nonzero W and threshold t >= 1.
struct CoverSet {
  CoverSet(Sublattice w_in, double t_in);
  Sublattice w;
  double t;
};

bool in_cover_set(const NormalizedPoint& x, const CoverSet& c,
                  const EnumOptions& opts = {});

// All W in L' with d_W(x) > t, sorted by rank. Certified: any active W has
// vol_W(x) < t^(-m(n-m)/n) <= 1, so the per-rank enumeration below that
// volume cutoff is complete. The returned list is checked to be a chain
// under containment (it always is; a failure would be a logic error).
std::vector<Sublattice> active_sets(const NormalizedPoint& x, double t,
                                    const EnumOptions& opts = {});

// Index pair violating pairwise containment after sorting by rank, if any.
std::optional<std::pair<int, int>> chain_violation(
    const std::vector<Sublattice>& sets);

// beta large enough that the alpha-neighborhood of X(W, t+beta) stays inside
// X(W, t): (e^(2 sqrt(n) alpha) - 1) * t, scaled by (1 + 1e-6) to make the
// strict inequality robust.
double neighborhood_beta(double alpha, double t, int n);

// Samples active_sets at each point and records any pair of simultaneously
// active incomparable sublattices (expected: none).
VerificationReport verify_chain_condition(
    const std::vector<NormalizedPoint>& samples, double t,
    const EnumOptions& opts = {});

// Block decomposition of a stabilizer element of W with respect to the
// splitting Z^n = W (+) V by the deterministic complement V: in those
// coordinates g = [[phi_w, phi_vw], [0, phi_v]].
struct StabilizerDecomposition {
  IntMat phi_w;   // rank x rank, unimodular
  IntMat phi_v;   // (n-m) x (n-m), unimodular
  IntMat phi_vw;  // rank x (n-m)
};
StabilizerDecomposition stabilizer_decompose(const IntegerAutomorphism& g,
                                             const Sublattice& w);

// n = 2 only. Reduces every sample lying in the complement of the union of
// the X(W, t) to the classical fundamental domain and checks that the
// reduced height (which equals d_{span e1} there) stays <= t.
VerificationReport cusp_height_probe(const std::vector<NormalizedPoint>& samples,
                                     double t, const EnumOptions& opts = {});

// Upper-half-plane encoding for n = 2: the determinant-one Gram of the
// lattice basis (1, 0), (x, y), whose d_{span e1} equals y.
NormalizedPoint upper_half_plane_point(double x, double y);

}  // namespace grayson
