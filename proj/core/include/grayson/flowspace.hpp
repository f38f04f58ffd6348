#pragma once

#include <cstdint>

#include "grayson/cover.hpp"

namespace grayson {

// A generalized geodesic: a continuous path that is a unit-speed geodesic on
// the clamp interval [a, b] and locally constant outside it. Evaluation is
//   c(t) = Exp_anchor( (clamp(t + offset, a, b) - clamp(0, a, b)) * direction )
// so the anchor is c(0) at construction time (offset 0) and the flow shifts
// the offset only, keeping the group law exact on parameters.
class GeneralizedGeodesic {
 public:
  GeneralizedGeodesic(NormalizedPoint anchor, SymTangent direction,
                      double clamp_lo, double clamp_hi, double offset = 0.0);

  // The constant path at p (clamp degenerate at 0, zero direction).
  static GeneralizedGeodesic constant(NormalizedPoint p);
  // Unit-speed geodesic through p0 toward p1, clamped to [a, b] (p0 at
  // parameter 0, which must satisfy a <= 0 <= b for the anchor invariant).
  static GeneralizedGeodesic through(const NormalizedPoint& p0,
                                     const NormalizedPoint& p1, double clamp_lo,
                                     double clamp_hi);

  int dim() const { return anchor_.dim(); }
  const NormalizedPoint& anchor() const { return anchor_; }
  const SymTangent& direction() const { return direction_; }
  double clamp_lo() const { return clamp_lo_; }
  double clamp_hi() const { return clamp_hi_; }
  double offset() const { return offset_; }
  bool is_constant() const { return clamp_lo_ == clamp_hi_; }

  // Clamp interval in the flowed parameter t (t + offset in [a, b]).
  double effective_lo() const { return clamp_lo_ - offset_; }
  double effective_hi() const { return clamp_hi_ - offset_; }

  // Image under g in GL_n(Z) (an isometry, so clamps and speed survive).
  GeneralizedGeodesic translated(const IntegerAutomorphism& g) const;

 private:
  NormalizedPoint anchor_;
  SymTangent direction_;
  double clamp_lo_, clamp_hi_, offset_;
};

NormalizedPoint evaluate(const GeneralizedGeodesic& c, double t);

// Raw evaluation without the det-1 wrapper; used by the metric integral,
// whose far tail visits points too ill-conditioned for the determinant
// check to be meaningful.
InnerProduct evaluate_form(const GeneralizedGeodesic& c, double t);

// The flow: (flow(c, tau))(t) = c(tau + t). Pure parameter arithmetic.
GeneralizedGeodesic flow(const GeneralizedGeodesic& c, double tau);

NormalizedPoint ev0(const GeneralizedGeodesic& c);

// Metric on the flow space: the weighted length integral
//   int d_X(c(t), d(t)) e^(-|t|)/2 dt
// by adaptive quadrature with analytic tails (absolute accuracy ~1e-9).
double fs_distance(const GeneralizedGeodesic& c, const GeneralizedGeodesic& d);

// Membership in Y(W, t) = ev0^{-1}(X(W, t)).
bool in_y(const GeneralizedGeodesic& c, const Sublattice& w, double t,
          const EnumOptions& opts = {});

struct LongnessParams {
  double t = 1.0;
  double beta = 0.0;
  double delta = 1.0;
  double tau = 1.0;
  std::uint64_t seed = 12345;
  int samples = 20;
};

// Samples perturbed flow translates d of c with fs_distance(d, flow(c,s)) <
// delta for s in [-tau, tau] and checks d_X(d(0), c(0)) < 4 + delta + tau
// and d(0) in X(W, t). Requires c in Y(W, t + beta); with beta below
// neighborhood_beta(4 + delta + tau, t, n) violations become possible and
// are recorded, not raised.
VerificationReport verify_longness(const GeneralizedGeodesic& c,
                                   const Sublattice& w,
                                   const LongnessParams& params,
                                   const EnumOptions& opts = {});

}  // namespace grayson
