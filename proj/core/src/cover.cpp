#include "grayson/cover.hpp"

#include <algorithm>
#include <cmath>

namespace grayson {

namespace {

std::vector<Sublattice> active_sets_unchecked(const NormalizedPoint& x,
                                              double t,
                                              const EnumOptions& opts) {
  const int n = x.dim();
  std::vector<Sublattice> active;
  for (int m = 1; m < n; ++m) {
    // any active W of rank m has vol_W < t^(-m(n-m)/n) <= 1
    const double vcut =
        std::pow(t, -double(m) * (n - m) / n) * (1 + 1e-6);
    for (const auto& [w, vol] :
         sublattices_with_volume_at_most(x.rep(), m, vcut, opts)) {
      (void)vol;
      if (d_w(x, w, opts) > t) active.push_back(w);
    }
  }
  std::sort(active.begin(), active.end(), [](const auto& a, const auto& b) {
    if (a.rank() != b.rank()) return a.rank() < b.rank();
    return Sublattice::hnf_lex_less(a, b);
  });
  return active;
}

}  // namespace

CoverSet::CoverSet(Sublattice w_in, double t_in)
    : w(std::move(w_in)), t(t_in) {
  if (!w.is_proper_nontrivial())
    throw ContainmentError("CoverSet: W must be proper and nonzero");
  if (!(t >= 1.0)) throw std::invalid_argument("CoverSet: t must be >= 1");
}

bool in_cover_set(const NormalizedPoint& x, const CoverSet& c,
                  const EnumOptions& opts) {
  return d_w(x, c.w, opts) > c.t;
}

std::optional<std::pair<int, int>> chain_violation(
    const std::vector<Sublattice>& sets) {
  for (size_t i = 0; i < sets.size(); ++i)
    for (size_t j = i + 1; j < sets.size(); ++j) {
      const bool ij = sets[j].contains(sets[i]);
      const bool ji = sets[i].contains(sets[j]);
      if (!ij && !ji) return std::make_pair(int(i), int(j));
    }
  return std::nullopt;
}

std::vector<Sublattice> active_sets(const NormalizedPoint& x, double t,
                                    const EnumOptions& opts) {
  std::vector<Sublattice> active = active_sets_unchecked(x, t, opts);
  if (chain_violation(active))
    throw std::logic_error("active_sets: simultaneous activation is not a chain");
  return active;
}

double neighborhood_beta(double alpha, double t, int n) {
  if (alpha <= 0 || t < 1 || n < 1)
    throw std::invalid_argument("neighborhood_beta: bad arguments");
  return (std::exp(2.0 * std::sqrt(double(n)) * alpha) - 1.0) * t *
         (1.0 + 1e-6);
}

VerificationReport verify_chain_condition(
    const std::vector<NormalizedPoint>& samples, double t,
    const EnumOptions& opts) {
  VerificationReport report;
  report.lemma = "Grayson(3) chain condition";
  report.samples = int(samples.size());
  int max_active = 0;
  int activated_points = 0;
  for (size_t i = 0; i < samples.size(); ++i) {
    std::vector<Sublattice> active;
    try {
      active = active_sets_unchecked(samples[i], t, opts);
    } catch (const UncertifiedEnumerationError& e) {
      report.uncertified = true;
      report.error_message = e.what();
      return report;
    }
    max_active = std::max(max_active, int(active.size()));
    if (!active.empty()) ++activated_points;
    if (auto bad = chain_violation(active)) {
      report.violation(
          int(i),
          "incomparable active sublattices " +
              active[bad->first].basis().to_string() + " and " +
              active[bad->second].basis().to_string(),
          -1.0);
    }
    const int n = samples[i].dim();
    if (int(active.size()) > n - 1)
      report.violation(int(i), "more than n-1 simultaneously active sets",
                       double(n - 1) - double(active.size()));
  }
  report.stat("max_active", max_active);
  report.stat("activated_points", activated_points);
  report.stat("max_nerve_dim", max_active > 0 ? max_active - 1 : 0);
  return report;
}

StabilizerDecomposition stabilizer_decompose(const IntegerAutomorphism& g,
                                             const Sublattice& w) {
  const int n = g.dim(), m = w.rank();
  if (n != w.ambient_dim())
    throw DimensionMismatchError("stabilizer_decompose: dimensions");
  if (!(w.transformed(g) == w))
    throw NotStabilizingError("stabilizer_decompose: g does not stabilize W");
  IntMat t = m == n ? w.basis() : w.basis().concat_cols(hnf_complement(w));
  const IntMat blocks = inverse_unimodular(t) * g.mat() * t;
  for (int i = m; i < n; ++i)
    for (int j = 0; j < m; ++j)
      if (blocks(i, j) != 0)
        throw std::logic_error("stabilizer_decompose: lower block not zero");
  StabilizerDecomposition out{blocks.block(0, 0, m, m),
                              blocks.block(m, m, n - m, n - m),
                              blocks.block(0, m, m, n - m)};
  const Int dw = det(out.phi_w), dv = det(out.phi_v);
  if ((m > 0 && dw != 1 && dw != -1) || (m < n && dv != 1 && dv != -1))
    throw std::logic_error("stabilizer_decompose: blocks not unimodular");
  if (!(t * blocks * inverse_unimodular(t) == g.mat()))
    throw std::logic_error("stabilizer_decompose: reassembly failed");
  return out;
}

NormalizedPoint upper_half_plane_point(double x, double y) {
  if (!(y > 0)) throw std::invalid_argument("upper_half_plane_point: y <= 0");
  Eigen::MatrixXd g(2, 2);
  g << 1 / y, x / y, x / y, (x * x + y * y) / y;
  return NormalizedPoint(InnerProduct(g));
}

VerificationReport cusp_height_probe(const std::vector<NormalizedPoint>& samples,
                                     double t, const EnumOptions& opts) {
  VerificationReport report;
  report.lemma = "Grayson(2) cusp probe";
  report.samples = int(samples.size());
  int in_complement = 0, excluded = 0;
  double max_height = 0;
  for (size_t i = 0; i < samples.size(); ++i) {
    const NormalizedPoint& p = samples[i];
    if (p.dim() != 2)
      throw DimensionMismatchError("cusp_height_probe: n = 2 only");
    std::vector<Sublattice> active;
    try {
      active = active_sets_unchecked(p, t, opts);
    } catch (const UncertifiedEnumerationError& e) {
      report.uncertified = true;
      report.error_message = e.what();
      return report;
    }
    if (!active.empty()) {
      ++excluded;
      continue;
    }
    ++in_complement;
    // reduce tau = x + iy to the fundamental domain
    double x = p.rep().gram()(0, 1) / p.rep().gram()(0, 0);
    double y = 1.0 / p.rep().gram()(0, 0);
    for (int iter = 0; iter < 500; ++iter) {
      x -= std::round(x);
      const double r2 = x * x + y * y;
      if (r2 < 1.0 - 1e-12) {
        x = -x / r2;
        y = y / r2;
      } else {
        break;
      }
    }
    max_height = std::max(max_height, y);
    if (y > t + 1e-9)
      report.violation(int(i), "reduced height exceeds t", t + 1e-9 - y);
  }
  report.stat("in_complement", in_complement);
  report.stat("excluded", excluded);
  report.stat("max_reduced_height", max_height);
  return report;
}

}  // namespace grayson
