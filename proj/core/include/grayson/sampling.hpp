#pragma once

#include <cstdint>

#include "grayson/lattice.hpp"

namespace grayson {

// Deterministic random stream (splitmix64). Identical sequences for
// identical (seed, stream) across platforms, which keeps every sampled
// verification suite reproducible bit for bit.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : state_(seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1))) {
    next_u64();
  }

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1)
  double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  // uniform integer in [lo, hi]
  long long uniform_int(long long lo, long long hi) {
    return lo + (long long)(next_u64() % (std::uint64_t)(hi - lo + 1));
  }
  double normal();

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0;
};

// Random SPD Gram with eigenvalues e^u, u uniform in [-spread, spread],
// conjugated by a random rotation.
InnerProduct random_spd(Rng& rng, int n, double spread = 1.0);
NormalizedPoint random_det1_point(Rng& rng, int n, double spread = 1.0);

Eigen::MatrixXd random_symmetric(Rng& rng, int n);

// Unit g_s-norm symmetric direction with tr(s^-1 u) = 0 (tangent to the
// det-1 slice).
SymTangent random_unit_direction(Rng& rng, const InnerProduct& s);

// Product of random elementary matrices (shears, swaps, sign flips); entries
// stay small for `steps` around 4-8.
IntegerAutomorphism random_unimodular(Rng& rng, int n, int steps = 6);

// Saturation of a random full-rank integer n x k matrix with small entries.
Sublattice random_saturated_sublattice(Rng& rng, int n, int k);

// Integer SPD Gram A^T A for a random nonsingular integer A.
InnerProduct random_integer_gram(Rng& rng, int n, int entry_bound = 2);

// Linearly independent frame with integer entries in [-bound, bound].
DecomposableFrame random_frame(Rng& rng, int n, int m, int bound = 3);

// diag(eps^(n-1), eps^-1, ..., eps^-1): determinant one, with
// d_{span e1} = eps^(-n/2) growing as eps shrinks.
NormalizedPoint axis_cusp_point(int n, double eps);

}  // namespace grayson
