#include "grayson/flowspace.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "grayson/sampling.hpp"

namespace grayson {

namespace {

constexpr double kUnitTol = 1e-9;
// Integration window for the weighted path distance. Beyond finite clamp
// ends the integrand is constant and the tails are added in closed form, so
// the cut only matters for paths with unbounded clamps: there the constant
// tail undershoots by at most e^-15 ~ 3e-7, and points further out on a
// geodesic are not representable at double precision anyway.
constexpr double kTailCut = 15.0;

double clamp_param(double t, double lo, double hi) {
  return std::min(std::max(t, lo), hi);
}

SymTangent slice_direction(const InnerProduct& at, const Eigen::MatrixXd& raw,
                           bool renormalize) {
  Eigen::MatrixXd u = 0.5 * (raw + raw.transpose());
  const Eigen::MatrixXd sinv_u = at.gram().llt().solve(u);
  u -= (sinv_u.trace() / at.dim()) * at.gram();
  SymTangent out(u);
  if (!renormalize) return out;
  const double norm = std::sqrt(metric_inner(at, out, out));
  if (norm < 1e-14)
    throw std::invalid_argument("slice_direction: zero direction");
  return SymTangent(u / norm);
}

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double fa, double fm, double fb, double tol,
                        int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double whole = (b - a) / 6.0 * (fa + 4 * fm + fb);
  const double left = (m - a) / 6.0 * (fa + 4 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return adaptive_simpson(f, a, m, fa, flm, fm, tol / 2, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, tol / 2, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol) {
  if (!(b > a)) return 0;
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  return adaptive_simpson(f, a, b, fa, fm, fb, tol, 24);
}

}  // namespace

GeneralizedGeodesic::GeneralizedGeodesic(NormalizedPoint anchor,
                                         SymTangent direction, double clamp_lo,
                                         double clamp_hi, double offset)
    : anchor_(std::move(anchor)),
      direction_(std::move(direction)),
      clamp_lo_(clamp_lo),
      clamp_hi_(clamp_hi),
      offset_(offset) {
  if (anchor_.dim() != direction_.dim())
    throw DimensionMismatchError("GeneralizedGeodesic: dimension mismatch");
  if (std::isnan(clamp_lo_) || std::isnan(clamp_hi_) || !(clamp_lo_ <= clamp_hi_))
    throw std::invalid_argument("GeneralizedGeodesic: bad clamp interval");
  if (!std::isfinite(offset_))
    throw std::invalid_argument("GeneralizedGeodesic: offset not finite");
  const double norm2 =
      metric_inner(anchor_.rep(), direction_, direction_);
  if (clamp_lo_ == clamp_hi_) {
    if (norm2 > kUnitTol)
      throw std::invalid_argument(
          "GeneralizedGeodesic: constant path needs zero direction");
  } else {
    if (std::abs(std::sqrt(norm2) - 1.0) > kUnitTol)
      throw std::invalid_argument(
          "GeneralizedGeodesic: direction must have unit norm");
    const double tr =
        anchor_.rep().gram().llt().solve(direction_.mat()).trace();
    if (std::abs(tr) > kUnitTol)
      throw std::invalid_argument(
          "GeneralizedGeodesic: direction leaves the det-1 slice");
  }
}

GeneralizedGeodesic GeneralizedGeodesic::constant(NormalizedPoint p) {
  const int n = p.dim();
  return GeneralizedGeodesic(std::move(p), SymTangent::zero(n), 0.0, 0.0);
}

GeneralizedGeodesic GeneralizedGeodesic::through(const NormalizedPoint& p0,
                                                 const NormalizedPoint& p1,
                                                 double clamp_lo,
                                                 double clamp_hi) {
  const SymTangent raw = log_map(p0.rep(), p1.rep());
  return GeneralizedGeodesic(
      p0, slice_direction(p0.rep(), raw.mat(), /*renormalize=*/true), clamp_lo,
      clamp_hi);
}

GeneralizedGeodesic GeneralizedGeodesic::translated(
    const IntegerAutomorphism& g) const {
  const Eigen::MatrixXd gi = g.inverse().mat().to_double();
  Eigen::MatrixXd u = gi.transpose() * direction_.mat() * gi;
  return GeneralizedGeodesic(act(g, anchor_),
                             SymTangent(0.5 * (u + u.transpose())), clamp_lo_,
                             clamp_hi_, offset_);
}

InnerProduct evaluate_form(const GeneralizedGeodesic& c, double t) {
  const double ref = clamp_param(0.0, c.clamp_lo(), c.clamp_hi());
  const double r = clamp_param(t + c.offset(), c.clamp_lo(), c.clamp_hi()) - ref;
  if (r == 0 || c.is_constant()) return c.anchor().rep();
  return exp_map(c.anchor().rep(), SymTangent(r * c.direction().mat()));
}

NormalizedPoint evaluate(const GeneralizedGeodesic& c, double t) {
  if (c.is_constant()) return c.anchor();
  const double ref = clamp_param(0.0, c.clamp_lo(), c.clamp_hi());
  const double r = clamp_param(t + c.offset(), c.clamp_lo(), c.clamp_hi()) - ref;
  if (r == 0) return c.anchor();
  return NormalizedPoint(
      exp_map(c.anchor().rep(), SymTangent(r * c.direction().mat())));
}

GeneralizedGeodesic flow(const GeneralizedGeodesic& c, double tau) {
  return GeneralizedGeodesic(c.anchor(), c.direction(), c.clamp_lo(),
                             c.clamp_hi(), c.offset() + tau);
}

NormalizedPoint ev0(const GeneralizedGeodesic& c) { return evaluate(c, 0.0); }

double fs_distance(const GeneralizedGeodesic& c, const GeneralizedGeodesic& d) {
  if (c.dim() != d.dim())
    throw DimensionMismatchError("fs_distance: dimension mismatch");
  auto f = [&](double t) {
    return distance(evaluate_form(c, t), evaluate_form(d, t)) *
           std::exp(-std::abs(t)) * 0.5;
  };
  auto clip = [](double v) {
    return std::max(-kTailCut, std::min(kTailCut, v));
  };
  const double lo = clip(std::min({0.0, c.effective_lo(), d.effective_lo()}));
  const double hi = clip(std::max({0.0, c.effective_hi(), d.effective_hi()}));
  std::vector<double> cuts{lo, hi, 0.0};
  for (double e : {c.effective_lo(), c.effective_hi(), d.effective_lo(),
                   d.effective_hi()})
    if (e > lo && e < hi) cuts.push_back(e);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  double total = 0;
  for (size_t i = 0; i + 1 < cuts.size(); ++i)
    total += integrate(f, cuts[i], cuts[i + 1], 2e-11);
  // constant tails beyond the last clamp ends
  total += distance(evaluate_form(c, lo), evaluate_form(d, lo)) *
           std::exp(lo) * 0.5;
  total += distance(evaluate_form(c, hi), evaluate_form(d, hi)) *
           std::exp(-hi) * 0.5;
  return total;
}

bool in_y(const GeneralizedGeodesic& c, const Sublattice& w, double t,
          const EnumOptions& opts) {
  return in_cover_set(ev0(c), CoverSet(w, t), opts);
}

VerificationReport verify_longness(const GeneralizedGeodesic& c,
                                   const Sublattice& w,
                                   const LongnessParams& params,
                                   const EnumOptions& opts) {
  VerificationReport report;
  report.lemma = "covering_infinity(5) longness";
  report.samples = params.samples;
  const int n = c.dim();
  const double alpha = 4.0 + params.delta + params.tau;
  const double beta_req = neighborhood_beta(alpha, params.t, n);
  report.stat("beta", params.beta);
  report.stat("beta_required", beta_req);
  report.stat("beta_sufficient", params.beta >= beta_req ? 1 : 0);

  if (!in_y(c, w, params.t + params.beta, opts)) {
    report.input_error = true;
    report.error_message = "precondition failed: c is not in Y(W, t + beta)";
    return report;
  }

  const NormalizedPoint c0 = ev0(c);
  const double phi_frac = 0.6180339887498949;
  const double u0 = Rng(params.seed, 0x51ceb00cULL).uniform();
  double worst_dist_margin = std::numeric_limits<double>::infinity();
  double worst_dw_margin = std::numeric_limits<double>::infinity();

  for (int i = 0; i < params.samples; ++i) {
    Rng rng(params.seed, std::uint64_t(i) + 1);
    const double frac = std::fmod(phi_frac * i + u0, 1.0);
    const double s = params.tau == 0 ? 0.0 : -params.tau + 2 * params.tau * frac;
    const GeneralizedGeodesic base = flow(c, s);

    GeneralizedGeodesic d = base;
    if (params.delta > 0) {
      const SymTangent w_dir = random_unit_direction(rng, base.anchor().rep());
      double rho = 0.45 * params.delta * (0.2 + 0.8 * rng.uniform());
      double jitter = base.is_constant()
                          ? 0.0
                          : 0.2 * std::min(1.0, params.delta) * rng.uniform();
      for (int attempt = 0; attempt < 48; ++attempt) {
        const InnerProduct anchor2 = exp_map(
            base.anchor().rep(), SymTangent(rho * w_dir.mat()));
        SymTangent dir2 = base.is_constant()
                              ? SymTangent::zero(n)
                              : slice_direction(anchor2,
                                                base.direction().mat(), true);
        GeneralizedGeodesic cand(NormalizedPoint(anchor2), dir2,
                                 base.clamp_lo() - jitter,
                                 base.clamp_hi() + jitter, base.offset());
        if (fs_distance(cand, base) < params.delta * 0.999) {
          d = cand;
          break;
        }
        rho *= 0.5;
        jitter *= 0.5;
      }
    }

    const NormalizedPoint d0 = ev0(d);
    const double dist_margin = alpha - distance(d0.rep(), c0.rep());
    worst_dist_margin = std::min(worst_dist_margin, dist_margin);
    if (dist_margin <= 0)
      report.violation(i, "d_X(d(0), c(0)) >= 4 + delta + tau", dist_margin);
    double dw_margin;
    try {
      dw_margin = d_w(d0, w, opts) - params.t;
    } catch (const UncertifiedEnumerationError& e) {
      report.uncertified = true;
      report.error_message = e.what();
      return report;
    }
    worst_dw_margin = std::min(worst_dw_margin, dw_margin);
    if (dw_margin <= 0)
      report.violation(i, "sampled point left Y(W, t)", dw_margin);
  }
  report.stat("worst_distance_margin", worst_dist_margin);
  report.stat("worst_dw_margin", worst_dw_margin);
  return report;
}

}  // namespace grayson
