#include <doctest.h>

#include "grayson/intmat.hpp"
#include "grayson/sampling.hpp"

using namespace grayson;

namespace {

IntMat random_intmat(Rng& rng, int r, int c, int bound) {
  IntMat m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = rng.uniform_int(-bound, bound);
  return m;
}

}  // namespace

TEST_CASE("bareiss determinant matches cofactor expansion") {
  Rng rng(101);
  for (int trial = 0; trial < 50; ++trial) {
    IntMat m = random_intmat(rng, 3, 3, 6);
    const Int expect = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                       m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                       m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    CHECK(det(m) == expect);
  }
}

TEST_CASE("column HNF is a canonical lattice representative") {
  Rng rng(102);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + int(rng.uniform_int(0, 1));
    const int k = 1 + int(rng.uniform_int(0, n - 1));
    IntMat b = random_intmat(rng, n, k, 4);
    if (rank_over_q(b) != k) continue;
    // right-multiplying by a unimodular matrix keeps the column span
    const IntMat u = random_unimodular(rng, k).mat();
    const HnfResult h1 = col_hnf(b);
    const HnfResult h2 = col_hnf(b * u);
    CHECK(h1.h == h2.h);
    CHECK(h1.pivot_rows == h2.pivot_rows);
    for (size_t i = 0; i + 1 < h1.pivot_rows.size(); ++i)
      CHECK(h1.pivot_rows[i] < h1.pivot_rows[i + 1]);
    // pivots positive, entries to the left reduced
    for (size_t j = 0; j < h1.pivot_rows.size(); ++j) {
      const int pr = h1.pivot_rows[j];
      CHECK(h1.h(pr, int(j)) > 0);
      for (int kk = 0; kk < int(j); ++kk) {
        CHECK(h1.h(pr, kk) >= 0);
        CHECK(h1.h(pr, kk) < h1.h(pr, int(j)));
      }
    }
  }
}

TEST_CASE("smith normal form reconstructs and divides") {
  Rng rng(103);
  for (int trial = 0; trial < 60; ++trial) {
    const int r = 2 + int(rng.uniform_int(0, 2));
    const int c = 2 + int(rng.uniform_int(0, 2));
    const IntMat a = random_intmat(rng, r, c, 7);
    const SnfResult f = snf(a);
    CHECK(f.u * f.s * f.v == a);
    CHECK((det(f.u) == 1 || det(f.u) == -1));
    CHECK((det(f.v) == 1 || det(f.v) == -1));
    for (int i = 0; i + 1 < std::min(r, c); ++i) {
      CHECK(f.s(i, i) >= 0);
      if (f.s(i + 1, i + 1) != 0) {
        if (f.s(i, i) != 0) CHECK(f.s(i + 1, i + 1) % f.s(i, i) == 0);
        else CHECK(f.s(i, i) == 0);  // zero only after nonzeros
      }
    }
    for (int i = 0; i < std::min(r, c); ++i)
      for (int j = 0; j < std::min(r, c); ++j)
        if (i != j) CHECK(f.s(i, j) == 0);
  }
}

TEST_CASE("unimodular inverse is exact") {
  Rng rng(104);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + int(rng.uniform_int(0, 3));
    const IntMat g = random_unimodular(rng, n).mat();
    CHECK(g * inverse_unimodular(g) == IntMat::identity(n));
  }
  CHECK_THROWS_AS(inverse_unimodular(IntMat::from_rows({{2, 0}, {0, 1}})),
                  NotUnimodularError);
}

TEST_CASE("solve_in_lattice decides membership") {
  Rng rng(105);
  for (int trial = 0; trial < 40; ++trial) {
    IntMat b = random_intmat(rng, 3, 2, 3);
    if (rank_over_q(b) != 2) continue;
    const HnfResult h = col_hnf(b);
    // an actual member
    std::vector<Int> x{rng.uniform_int(-4, 4), rng.uniform_int(-4, 4)};
    std::vector<Int> v(3);
    for (int i = 0; i < 3; ++i) v[i] = h.h(i, 0) * x[0] + h.h(i, 1) * x[1];
    const auto sol = solve_in_lattice(h, v);
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == x[0]);
    CHECK((*sol)[1] == x[1]);
  }
  // (1,1) is not in the lattice spanned by (2,0),(0,1)... it is; use (1,0)
  const HnfResult h = col_hnf(IntMat::from_rows({{2, 0}, {0, 1}}));
  CHECK_FALSE(solve_in_lattice(h, {Int(1), Int(0)}).has_value());
  CHECK(solve_in_lattice(h, {Int(4), Int(3)}).has_value());
}

TEST_CASE("maximal minors come in lexicographic row order") {
  const IntMat b = IntMat::from_rows({{1, 0}, {0, 1}, {0, 0}});
  const auto minors = maximal_minors(b);
  REQUIRE(minors.size() == 3);  // rows {0,1}, {0,2}, {1,2}
  CHECK(minors[0] == 1);
  CHECK(minors[1] == 0);
  CHECK(minors[2] == 0);
}
