#include "grayson/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>

namespace grayson {

namespace {

// gamma_k^(k/2) for Minkowski's second theorem: prod lambda_i <= this * vol.
// Exact Hermite constants through k = 8, Hermite's inequality beyond.
double hermite_pow(int k) {
  static const double table[] = {1.0,
                                 1.0,
                                 1.1547005383792515,
                                 1.4142135623730951,
                                 2.0,
                                 2.8284271247461903,
                                 4.618802153517007,
                                 8.0,
                                 16.0};
  if (k <= 8) return table[k];
  return std::pow(4.0 / 3.0, 0.25 * k * (k - 1));
}

IntMat cols_to_intmat(const std::vector<const std::vector<long long>*>& cols,
                      int n) {
  IntMat m(n, int(cols.size()));
  for (int j = 0; j < int(cols.size()); ++j)
    for (int i = 0; i < n; ++i) m(i, j) = (*cols[j])[i];
  return m;
}

double basis_volume(const InnerProduct& s, const IntMat& basis) {
  if (basis.cols() == 0) return 1.0;
  const Eigen::MatrixXd b = basis.to_double();
  const Eigen::MatrixXd g = b.transpose() * s.gram() * b;
  const double d = g.determinant();
  return d > 0 ? std::sqrt(d) : 0.0;
}

bool intmat_lex_less(const IntMat& a, const IntMat& b) {
  if (a.rows() != b.rows()) return a.rows() < b.rows();
  if (a.cols() != b.cols()) return a.cols() < b.cols();
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a(i, j) != b(i, j)) return a(i, j) < b(i, j);
    }
  return false;
}

constexpr double kVolTieTol = 1e-12;

}  // namespace

Sublattice::Sublattice(IntMat basis) : basis_(std::move(basis)) {
  const int n = basis_.rows(), m = basis_.cols();
  if (n <= 0 || m < 0 || m > n)
    throw DimensionMismatchError("Sublattice: bad basis shape");
  if (m > 0) {
    const SnfResult f = snf(basis_);
    for (int j = 0; j < m; ++j) {
      if (f.s(j, j) == 0)
        throw RankDeficientError("Sublattice: basis columns are dependent");
      if (f.s(j, j) != 1)
        throw NotSaturatedError("Sublattice: span is not saturated");
    }
  }
  HnfResult h = col_hnf(basis_);
  basis_ = std::move(h.h);
  pivots_ = std::move(h.pivot_rows);
}

Sublattice Sublattice::zero(int ambient_dim) {
  return Sublattice(IntMat(ambient_dim, 0), {}, RawTag{});
}

Sublattice Sublattice::full(int ambient_dim) {
  std::vector<int> piv(ambient_dim);
  for (int i = 0; i < ambient_dim; ++i) piv[i] = i;
  return Sublattice(IntMat::identity(ambient_dim), std::move(piv), RawTag{});
}

bool Sublattice::contains(const Sublattice& other) const {
  if (ambient_dim() != other.ambient_dim())
    throw DimensionMismatchError("Sublattice::contains: ambient dimensions");
  if (other.rank() > rank()) return false;
  const HnfResult self{basis_, pivots_};
  std::vector<Int> col(ambient_dim());
  for (int j = 0; j < other.rank(); ++j) {
    for (int i = 0; i < ambient_dim(); ++i) col[i] = other.basis_(i, j);
    if (!solve_in_lattice(self, col)) return false;
  }
  return true;
}

bool Sublattice::contains_vector(const std::vector<Int>& v) const {
  return solve_in_lattice(HnfResult{basis_, pivots_}, v).has_value();
}

bool Sublattice::operator==(const Sublattice& other) const {
  return basis_ == other.basis_;
}

Sublattice Sublattice::transformed(const IntegerAutomorphism& g) const {
  if (g.dim() != ambient_dim())
    throw DimensionMismatchError("Sublattice::transformed: dimensions");
  if (rank() == 0) return *this;
  return Sublattice(g.mat() * basis_);
}

bool Sublattice::hnf_lex_less(const Sublattice& a, const Sublattice& b) {
  if (a.pivots_ != b.pivots_) return a.pivots_ < b.pivots_;
  return intmat_lex_less(a.basis_, b.basis_);
}

Sublattice saturate(const IntMat& m) {
  const int n = m.rows(), k = m.cols();
  if (k == 0) return Sublattice::zero(n);
  const SnfResult f = snf(m);
  for (int j = 0; j < k; ++j)
    if (f.s(j, j) == 0)
      throw RankDeficientError("saturate: columns are dependent over Q");
  HnfResult h = col_hnf(f.u.block(0, 0, n, k));
  return Sublattice(std::move(h.h), std::move(h.pivot_rows),
                    Sublattice::RawTag{});
}

Sublattice lattice_spanned_by(const IntMat& m) {
  const int n = m.rows();
  const SnfResult f = snf(m);
  int r = 0;
  while (r < std::min(m.rows(), m.cols()) && f.s(r, r) != 0) ++r;
  if (r == 0) return Sublattice::zero(n);
  HnfResult h = col_hnf(f.u.block(0, 0, n, r));
  return Sublattice(std::move(h.h), std::move(h.pivot_rows),
                    Sublattice::RawTag{});
}

MultiVector xi_of(const Sublattice& w) {
  const int n = w.ambient_dim(), m = w.rank();
  std::vector<Int> minors = maximal_minors(w.basis());
  const Int g = gcd_all(minors);
  if (g > 1)
    for (Int& x : minors) x /= g;
  // sign convention: first nonzero coordinate positive
  for (const Int& x : minors) {
    if (x == 0) continue;
    if (x < 0)
      for (Int& y : minors) y = -y;
    break;
  }
  Eigen::VectorXd coords(std::int64_t(minors.size()));
  for (size_t i = 0; i < minors.size(); ++i) coords(long(i)) = double(minors[i]);
  return MultiVector(n, m, std::move(coords));
}

double vol_sublattice(const InnerProduct& s, const Sublattice& w) {
  if (s.dim() != w.ambient_dim())
    throw DimensionMismatchError("vol_sublattice: dimension mismatch");
  if (w.rank() == 0) return 1.0;
  return gram_volume(s, DecomposableFrame(w.ambient_dim(), w.basis().to_double()));
}

InnerProduct restricted_form(const InnerProduct& s, const Sublattice& w) {
  if (s.dim() != w.ambient_dim())
    throw DimensionMismatchError("restricted_form: dimension mismatch");
  const Eigen::MatrixXd b = w.basis().to_double();
  Eigen::MatrixXd g = b.transpose() * s.gram() * b;
  return InnerProduct(0.5 * (g + g.transpose()));
}

IntMat hnf_complement(const Sublattice& w) {
  const int n = w.ambient_dim(), m = w.rank();
  if (m == n) throw DimensionMismatchError("hnf_complement: full sublattice");
  if (m == 0) return IntMat::identity(n);
  const SnfResult f = snf(w.basis());
  return f.u.block(0, m, n, n - m);
}

QuotientSplit quotient_form(const InnerProduct& s, const Sublattice& w) {
  const int n = s.dim(), m = w.rank();
  if (n != w.ambient_dim())
    throw DimensionMismatchError("quotient_form: dimension mismatch");
  if (m >= n) throw DimensionMismatchError("quotient_form: corank is zero");
  IntMat c = hnf_complement(w);
  IntMat t = w.basis().concat_cols(c);
  IntMat tinv = inverse_unimodular(t);

  const Eigen::MatrixXd cd = c.to_double();
  Eigen::MatrixXd q;
  if (m == 0) {
    q = cd.transpose() * s.gram() * cd;
  } else {
    const Eigen::MatrixXd b = w.basis().to_double();
    const Eigen::MatrixXd sv = s.gram() * b;
    const Eigen::MatrixXd g = b.transpose() * sv;
    Eigen::LLT<Eigen::MatrixXd> llt(0.5 * (g + g.transpose()));
    const Eigen::MatrixXd proj = s.gram() - sv * llt.solve(sv.transpose());
    q = cd.transpose() * proj * cd;
  }
  return QuotientSplit{InnerProduct(0.5 * (q + q.transpose())), std::move(c),
                       std::move(t), std::move(tinv)};
}

Sublattice QuotientSplit::project(const Sublattice& w2) const {
  const int n = transform.rows();
  const int corank = complement.cols();
  const int m = n - corank;
  const IntMat coords = transform_inv * w2.basis();
  const IntMat lower = coords.block(m, 0, corank, w2.rank());
  Sublattice image = lattice_spanned_by(lower);
  if (image.rank() != w2.rank() - m)
    throw ContainmentError("QuotientSplit::project: sublattice does not contain W");
  return image;
}

std::vector<std::vector<long long>> short_vectors(const InnerProduct& s,
                                                  double radius,
                                                  const EnumOptions& opts) {
  const int n = s.dim();
  Eigen::LLT<Eigen::MatrixXd> llt(s.gram());
  if (llt.info() != Eigen::Success)
    throw NotPositiveDefiniteError("short_vectors: form not positive definite");
  const Eigen::MatrixXd u = Eigen::MatrixXd(llt.matrixL()).transpose();
  const double r2 = radius * radius * (1.0 + 1e-9);

  std::vector<long long> x(n, 0);
  std::vector<std::vector<long long>> found;
  std::size_t visited = 0;

  auto rec = [&](auto&& self, int i, double rem) -> void {
    double y = 0;
    for (int j = i + 1; j < n; ++j) y += u(i, j) * double(x[j]);
    const double lim = std::sqrt(std::max(rem, 0.0));
    const double lo = std::ceil((-y - lim) / u(i, i) - 1e-12);
    const double hi = std::floor((-y + lim) / u(i, i) + 1e-12);
    if (std::abs(lo) > 4e9 || std::abs(hi) > 4e9)
      throw UncertifiedEnumerationError(
          "short_vectors: coordinate range exceeds integer bounds");
    for (long long xi = (long long)lo; xi <= (long long)hi; ++xi) {
      if (++visited > opts.max_points)
        throw UncertifiedEnumerationError(
            "short_vectors: lattice point cap exceeded; enumeration not certified");
      x[i] = xi;
      const double t = u(i, i) * double(xi) + y;
      const double rem2 = rem - t * t;
      if (rem2 < -1e-9 * r2) {
        x[i] = 0;
        continue;
      }
      if (i == 0) {
        bool nonzero = false;
        for (long long c : x) nonzero |= (c != 0);
        if (nonzero) found.push_back(x);
      } else {
        self(self, i - 1, std::max(rem2, 0.0));
      }
      x[i] = 0;
    }
  };
  rec(rec, n - 1, r2);

  // keep sign-canonical primitive vectors within the exact radius
  std::vector<std::vector<long long>> out;
  for (auto& v : found) {
    int first = 0;
    while (first < n && v[first] == 0) ++first;
    if (v[first] < 0) continue;
    long long g = 0;
    for (long long c : v) g = std::gcd(g, std::abs(c));
    if (g != 1) continue;
    double norm2 = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        norm2 += s.gram()(i, j) * double(v[i]) * double(v[j]);
    if (norm2 <= r2) out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

double shortest_vector_norm(const InnerProduct& s, const EnumOptions& opts) {
  double r0 = std::numeric_limits<double>::infinity();
  for (int i = 0; i < s.dim(); ++i)
    r0 = std::min(r0, std::sqrt(s.gram()(i, i)));
  const auto vecs = short_vectors(s, r0 * (1 + 1e-12), opts);
  double best = std::numeric_limits<double>::infinity();
  for (const auto& v : vecs) {
    double norm2 = 0;
    for (int i = 0; i < s.dim(); ++i)
      for (int j = 0; j < s.dim(); ++j)
        norm2 += s.gram()(i, j) * double(v[i]) * double(v[j]);
    best = std::min(best, std::sqrt(norm2));
  }
  return best;
}

namespace {

// Shared subset walk: runs fn over every k-subset of the (norm-ascending)
// vector list whose norm product can stay below bound(); bound may shrink as
// better candidates are found.
template <typename Fn, typename Bound>
void for_pruned_subsets(const std::vector<std::vector<long long>>& vecs,
                        const std::vector<double>& norms, int k,
                        std::size_t max_subsets, Fn&& fn, Bound&& bound) {
  const int m = int(vecs.size());
  std::vector<const std::vector<long long>*> chosen;
  std::size_t visited = 0;
  auto rec = [&](auto&& self, int start, double prod) -> void {
    const int need = k - int(chosen.size());
    if (need == 0) {
      if (++visited > max_subsets)
        throw UncertifiedEnumerationError(
            "sublattice enumeration: subset cap exceeded");
      fn(chosen);
      return;
    }
    for (int i = start; i < m; ++i) {
      // remaining picks all have norm >= norms[i]
      const double lower = prod * std::pow(norms[i], need);
      if (lower > bound()) break;
      chosen.push_back(&vecs[i]);
      self(self, i + 1, prod * norms[i]);
      chosen.pop_back();
    }
  };
  rec(rec, 0, 1.0);
}

std::vector<double> vector_norms(const InnerProduct& s,
                                 const std::vector<std::vector<long long>>& v) {
  std::vector<double> out(v.size());
  for (size_t t = 0; t < v.size(); ++t) {
    double n2 = 0;
    for (int i = 0; i < s.dim(); ++i)
      for (int j = 0; j < s.dim(); ++j)
        n2 += s.gram()(i, j) * double(v[t][i]) * double(v[t][j]);
    out[t] = std::sqrt(n2);
  }
  return out;
}

void sort_by_norm(std::vector<std::vector<long long>>& vecs,
                  std::vector<double>& norms) {
  std::vector<size_t> idx(vecs.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    if (norms[a] != norms[b]) return norms[a] < norms[b];
    return vecs[a] < vecs[b];
  });
  std::vector<std::vector<long long>> v2(vecs.size());
  std::vector<double> n2(norms.size());
  for (size_t i = 0; i < idx.size(); ++i) {
    v2[i] = std::move(vecs[idx[i]]);
    n2[i] = norms[idx[i]];
  }
  vecs = std::move(v2);
  norms = std::move(n2);
}

}  // namespace

MinVolumeResult min_volume_sublattice(const InnerProduct& s, int k,
                                      const EnumOptions& opts) {
  const int n = s.dim();
  if (k < 0 || k > n)
    throw DimensionMismatchError("min_volume_sublattice: rank out of range");
  if (k == 0) return {Sublattice::zero(n), 1.0, 0.0};
  if (k == n)
    return {Sublattice::full(n), std::exp(0.5 * log_det(s)), 0.0};

  // initial candidate: best subset of standard basis vectors
  std::optional<Sublattice> best;
  double best_vol = std::numeric_limits<double>::infinity();
  auto consider = [&](Sublattice cand, double vol) {
    if (vol < best_vol * (1 - kVolTieTol) || !best) {
      best_vol = vol;
      best = std::move(cand);
    } else if (vol <= best_vol * (1 + kVolTieTol) &&
               Sublattice::hnf_lex_less(cand, *best)) {
      best = std::move(cand);
    }
  };
  for (const auto& tup : index_tuples(n, k)) {
    IntMat b(n, k);
    for (int j = 0; j < k; ++j) b(tup[j], j) = 1;
    Sublattice cand(std::move(b));
    const double vol = basis_volume(s, cand.basis());
    consider(std::move(cand), vol);
  }

  const double mu = shortest_vector_norm(s, opts);
  double radius = hermite_pow(k) * best_vol / std::pow(mu, k - 1);
  if (opts.radius_override) {
    if (*opts.radius_override < radius)
      throw UncertifiedEnumerationError(
          "min_volume_sublattice: supplied radius below the certified bound");
    radius = *opts.radius_override;
  }
  auto vecs = short_vectors(s, radius * (1 + 1e-9), opts);
  auto norms = vector_norms(s, vecs);
  sort_by_norm(vecs, norms);

  for_pruned_subsets(
      vecs, norms, k, opts.max_subsets,
      [&](const std::vector<const std::vector<long long>*>& chosen) {
        const IntMat m = cols_to_intmat(chosen, n);
        Sublattice cand = lattice_spanned_by(m);
        if (cand.rank() != k) return;
        const double vol = basis_volume(s, cand.basis());
        consider(std::move(cand), vol);
      },
      [&] { return hermite_pow(k) * best_vol * (1 + 1e-9); });

  return {std::move(*best), best_vol, radius};
}

std::vector<std::pair<Sublattice, double>> sublattices_with_volume_at_most(
    const InnerProduct& s, int k, double vcut, const EnumOptions& opts) {
  const int n = s.dim();
  if (k <= 0 || k > n)
    throw DimensionMismatchError("sublattices_with_volume_at_most: rank");
  std::vector<std::pair<Sublattice, double>> out;
  if (k == n) {
    const double v = std::exp(0.5 * log_det(s));
    if (v <= vcut * (1 + 1e-9)) out.emplace_back(Sublattice::full(n), v);
    return out;
  }
  const double mu = shortest_vector_norm(s, opts);
  double radius = hermite_pow(k) * vcut / std::pow(mu, k - 1);
  if (opts.radius_override) {
    if (*opts.radius_override < radius)
      throw UncertifiedEnumerationError(
          "sublattices_with_volume_at_most: radius below the certified bound");
    radius = *opts.radius_override;
  }
  auto vecs = short_vectors(s, radius * (1 + 1e-9), opts);
  auto norms = vector_norms(s, vecs);
  sort_by_norm(vecs, norms);

  std::set<IntMat, bool (*)(const IntMat&, const IntMat&)> seen(intmat_lex_less);
  const double bound = hermite_pow(k) * vcut * (1 + 1e-9);
  for_pruned_subsets(
      vecs, norms, k, opts.max_subsets,
      [&](const std::vector<const std::vector<long long>*>& chosen) {
        const IntMat m = cols_to_intmat(chosen, n);
        Sublattice cand = lattice_spanned_by(m);
        if (cand.rank() != k) return;
        const double vol = basis_volume(s, cand.basis());
        if (vol > vcut * (1 + 1e-9)) return;
        if (seen.insert(cand.basis()).second) out.emplace_back(std::move(cand), vol);
      },
      [&] { return bound; });

  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second < b.second;
    return Sublattice::hnf_lex_less(a.first, b.first);
  });
  return out;
}

CanonicalPolygon canonical_polygon(const InnerProduct& s,
                                   const EnumOptions& opts) {
  const int n = s.dim();
  CanonicalPolygon poly;
  std::vector<Sublattice> minimizers;
  for (int k = 0; k <= n; ++k) {
    MinVolumeResult r = min_volume_sublattice(s, k, opts);
    poly.points.emplace_back(k, std::log(r.volume));
    minimizers.push_back(std::move(r.lattice));
  }

  // lower convex hull, dropping collinear interior points
  double yscale = 0;
  for (const auto& p : poly.points) yscale = std::max(yscale, std::abs(p.second));
  const double eps = 1e-10 * (1 + yscale);
  std::vector<int> hull;
  for (int k = 0; k <= n; ++k) {
    while (hull.size() >= 2) {
      const auto [x1, y1] = poly.points[hull[hull.size() - 2]];
      const auto [x2, y2] = poly.points[hull[hull.size() - 1]];
      const auto [x3, y3] = poly.points[k];
      const double cross =
          (x2 - x1) * (y3 - y1) - (y2 - y1) * double(x3 - x1);
      if (cross <= eps)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(k);
  }
  poly.hull_vertices = hull;
  for (size_t i = 0; i + 1 < hull.size(); ++i) {
    const auto [x1, y1] = poly.points[hull[i]];
    const auto [x2, y2] = poly.points[hull[i + 1]];
    poly.slopes.push_back((y2 - y1) / double(x2 - x1));
  }
  for (size_t i = 0; i + 1 < poly.slopes.size(); ++i)
    if (poly.slopes[i] >= poly.slopes[i + 1])
      throw std::logic_error("canonical_polygon: slopes not strictly increasing");
  for (int v : hull) poly.filtration.push_back(minimizers[v]);
  for (size_t i = 0; i + 1 < poly.filtration.size(); ++i)
    if (!poly.filtration[i + 1].contains(poly.filtration[i]))
      throw std::logic_error("canonical_polygon: filtration is not nested");
  return poly;
}

double c_tilde(const InnerProduct& s, const Sublattice& w0,
               const Sublattice& w1) {
  if (w0.rank() >= w1.rank() || !w1.contains(w0))
    throw ContainmentError("c_tilde: W0 must be strictly contained in W1");
  return (std::log(vol_sublattice(s, w1)) - std::log(vol_sublattice(s, w0))) /
         double(w1.rank() - w0.rank());
}

double c_sup(const InnerProduct& s, const Sublattice& w,
             const EnumOptions& opts) {
  if (w.rank() == 0) throw ContainmentError("c_sup: W must be nonzero");
  const int m = w.rank();
  const InnerProduct gw = restricted_form(s, w);
  const double logvol = 0.5 * log_det(gw);
  double best = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < m; ++k) {
    const double mv = min_volume_sublattice(gw, k, opts).volume;
    best = std::max(best, (logvol - std::log(mv)) / double(m - k));
  }
  return best;
}

double c_inf(const InnerProduct& s, const Sublattice& w,
             const EnumOptions& opts) {
  if (w.is_full()) throw ContainmentError("c_inf: W must be proper");
  const QuotientSplit q = quotient_form(s, w);
  const int corank = s.dim() - w.rank();
  double best = std::numeric_limits<double>::infinity();
  for (int j = 1; j <= corank; ++j) {
    const double mv = min_volume_sublattice(q.form, j, opts).volume;
    best = std::min(best, std::log(mv) / double(j));
  }
  return best;
}

double c_sup_direct(const InnerProduct& s, const Sublattice& w,
                    const EnumOptions& opts) {
  const int m = w.rank();
  double best = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < m; ++k) {
    if (k == 0) {
      best = std::max(best, c_tilde(s, Sublattice::zero(w.ambient_dim()), w));
      continue;
    }
    // upper bound for the best rank-k volume inside W: subsets of W's basis
    double v0 = std::numeric_limits<double>::infinity();
    for (const auto& tup : index_tuples(m, k)) {
      IntMat cols(w.ambient_dim(), k);
      for (int j = 0; j < k; ++j)
        for (int i = 0; i < w.ambient_dim(); ++i)
          cols(i, j) = w.basis()(i, tup[j]);
      v0 = std::min(v0, basis_volume(s, lattice_spanned_by(cols).basis()));
    }
    std::optional<Sublattice> found;
    for (const auto& [cand, vol] :
         sublattices_with_volume_at_most(s, k, v0 * (1 + 1e-9), opts)) {
      (void)vol;
      if (!w.contains(cand)) continue;
      found = cand;
      break;  // list is volume-sorted
    }
    if (!found)
      throw std::logic_error("c_sup_direct: no candidate found inside W");
    best = std::max(best, c_tilde(s, *found, w));
  }
  return best;
}

double c_inf_direct(const InnerProduct& s, const Sublattice& w,
                    const EnumOptions& opts) {
  const int n = s.dim(), m = w.rank();
  double best = std::numeric_limits<double>::infinity();
  for (int j = 1; j <= n - m; ++j) {
    const int rk = m + j;
    if (rk == n) {
      best = std::min(best, c_tilde(s, w, Sublattice::full(n)));
      continue;
    }
    // upper bound: extend W's basis greedily by standard basis vectors
    IntMat ext = w.basis();
    for (int i = 0; i < n && ext.cols() < rk; ++i) {
      IntMat e(n, 1);
      e(i, 0) = 1;
      const IntMat trial = ext.concat_cols(e);
      if (rank_over_q(trial) == trial.cols()) ext = trial;
    }
    const double v0 = basis_volume(s, lattice_spanned_by(ext).basis());
    std::optional<Sublattice> found;
    for (const auto& [cand, vol] :
         sublattices_with_volume_at_most(s, rk, v0 * (1 + 1e-9), opts)) {
      if (!cand.contains(w)) continue;
      found = cand;
      break;
    }
    if (!found)
      throw std::logic_error("c_inf_direct: no candidate found containing W");
    best = std::min(best, c_tilde(s, w, *found));
  }
  return best;
}

namespace {

double quantize34(double x) {
  if (x == 0) return 0;
  int e;
  const double m = std::frexp(x, &e);
  return std::ldexp(std::round(std::ldexp(m, 34)), e - 34);
}

// Scale-free representative of the ray through x: divide by the leading
// Gram entry and quantize mantissas, so that representatives computed from
// r*s and from s coincide bit for bit; then rescale to determinant one.
InnerProduct ray_canonical_rep(const NormalizedPoint& x) {
  Eigen::MatrixXd z = x.rep().gram();
  const double lead = z(0, 0);
  z /= lead;
  for (int i = 0; i < z.rows(); ++i)
    for (int j = 0; j < z.cols(); ++j) z(i, j) = quantize34(z(i, j));
  const InnerProduct zi(z);
  return InnerProduct(std::exp(-log_det(zi) / z.rows()) * z);
}

}  // namespace

DwBreakdown d_w_breakdown(const NormalizedPoint& x, const Sublattice& w,
                          const EnumOptions& opts) {
  if (!w.is_proper_nontrivial())
    throw ContainmentError("d_w: W must be a proper nonzero sublattice");
  if (x.dim() != w.ambient_dim())
    throw DimensionMismatchError("d_w: dimension mismatch");
  const InnerProduct y = ray_canonical_rep(x);
  const double ci = c_inf(y, w, opts);
  const double cs = c_sup(y, w, opts);
  return {ci, cs, std::exp(ci - cs)};
}

double d_w(const NormalizedPoint& x, const Sublattice& w,
           const EnumOptions& opts) {
  return d_w_breakdown(x, w, opts).d_w;
}

}  // namespace grayson
