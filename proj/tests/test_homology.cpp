#include <random>
#include <stdexcept>

#include "doctest.h"
#include "grassmann/homology.hpp"
#include "oracles.hpp"

using gr::AbGroup;
using gr::Coeffs;
using gr::Int;
using gr::ZMatrix;

namespace {
ZMatrix mk(int rows, int cols, std::vector<long> entries) {
  ZMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = entries[r * cols + c];
  return m;
}

AbGroup grp(int rank, std::vector<long> torsion = {}) {
  AbGroup g;
  g.rank = rank;
  for (long t : torsion) g.torsion.emplace_back(t);
  return g;
}
}  // namespace

TEST_CASE("matrix multiply agrees with the schoolbook product") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    int a = 1 + static_cast<int>(rng() % 5);
    int b = 1 + static_cast<int>(rng() % 5);
    int c = 1 + static_cast<int>(rng() % 5);
    ZMatrix A(a, b), B(b, c);
    for (auto& x : A.a) x = static_cast<long>(rng() % 19) - 9;
    for (auto& x : B.a) x = static_cast<long>(rng() % 19) - 9;
    auto fast = gr::multiply(A, B);
    auto slow = oracle::mat_mul_naive(A, B);
    CHECK(fast.a == slow.a);
  }
  CHECK_THROWS_AS(gr::multiply(ZMatrix(2, 3), ZMatrix(2, 3)),
                  std::invalid_argument);
}

TEST_CASE("smith normal form, pinned examples") {
  auto s1 = gr::smith_normal_form(mk(1, 1, {2}));
  CHECK(s1.factors == std::vector<Int>{2});
  CHECK(s1.rank == 1);

  auto s0 = gr::smith_normal_form(ZMatrix(3, 4));
  CHECK(s0.factors.empty());
  CHECK(s0.rank == 0);

  auto s2 = gr::smith_normal_form(mk(2, 2, {2, 2, 2, -2}));
  CHECK(s2.factors == std::vector<Int>{2, 4});

  auto s3 = gr::smith_normal_form(mk(2, 2, {6, 0, 0, 4}));
  CHECK(s3.factors == std::vector<Int>{2, 12});

  auto s4 = gr::smith_normal_form(mk(3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1}));
  CHECK(s4.factors == std::vector<Int>{1, 1, 1});
  CHECK(s4.rank == 3);
}

TEST_CASE("smith normal form vs naive reduction on random matrices") {
  std::mt19937 rng(2026);
  for (int trial = 0; trial < 40; ++trial) {
    int rows = 1 + static_cast<int>(rng() % 5);
    int cols = 1 + static_cast<int>(rng() % 5);
    ZMatrix m(rows, cols);
    std::vector<std::vector<Int>> copy(rows, std::vector<Int>(cols));
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) {
        long v = static_cast<long>(rng() % 13) - 6;
        m.at(r, c) = v;
        copy[r][c] = v;
      }
    auto fast = gr::smith_normal_form(m);
    auto slow = oracle::snf_naive(copy);
    CHECK(fast.factors == slow);
    CHECK(fast.rank == oracle::rank_bareiss(copy));
  }
}

TEST_CASE("group pretty printing") {
  CHECK(grp(0).str() == "0");
  CHECK(grp(1).str() == "Z");
  CHECK(grp(2).str() == "Z + Z");
  CHECK(grp(0, {2}).str() == "Z_2");
  CHECK(grp(1, {2, 2}).str() == "Z + Z_2 + Z_2");
}

TEST_CASE("cohomology of Gr(2,4)") {
  auto t = gr::cohomology_of(2, 4, Coeffs::trivial);
  REQUIRE(t.groups.size() == 5);
  CHECK(t.groups[0] == grp(1));
  CHECK(t.groups[1] == grp(0));
  CHECK(t.groups[2] == grp(0, {2}));
  CHECK(t.groups[3] == grp(0, {2}));
  CHECK(t.groups[4] == grp(1));
}

TEST_CASE("cohomology of Gr(3,6)") {
  auto t = gr::cohomology_of(3, 6, Coeffs::trivial);
  REQUIRE(t.groups.size() == 10);
  CHECK(t.groups[0] == grp(1));
  CHECK(t.groups[1] == grp(0));
  CHECK(t.groups[2] == grp(0, {2}));
  CHECK(t.groups[3] == grp(0, {2}));
  CHECK(t.groups[4] == grp(1, {2, 2}));
  CHECK(t.groups[5] == grp(1));
  CHECK(t.groups[6] == grp(0, {2, 2}));
  CHECK(t.groups[7] == grp(0, {2}));
  CHECK(t.groups[8] == grp(0, {2}));
  CHECK(t.groups[9] == grp(1));
}

TEST_CASE("twisted cohomology of Gr(2,5)") {
  auto t = gr::cohomology_of(2, 5, Coeffs::twisted);
  REQUIRE(t.groups.size() == 7);
  CHECK(t.groups[0] == grp(0));
  CHECK(t.groups[1] == grp(0, {2}));
  CHECK(t.groups[2] == grp(1));
  CHECK(t.groups[3] == grp(0, {2}));
  CHECK(t.groups[4] == grp(0, {2}));
  CHECK(t.groups[5] == grp(0, {2}));
  CHECK(t.groups[6] == grp(1));
}

TEST_CASE("projective spaces") {
  for (int n = 2; n <= 8; ++n) {
    auto t = gr::cohomology_of(1, n, Coeffs::trivial);
    int m = n - 1;
    REQUIRE(t.groups.size() == static_cast<size_t>(m) + 1);
    CHECK(t.groups[0] == grp(1));
    for (int d = 1; d <= m; ++d) {
      if (d == m)
        CHECK(t.groups[d] == (m % 2 == 1 ? grp(1) : grp(0, {2})));
      else
        CHECK(t.groups[d] == (d % 2 == 0 ? grp(0, {2}) : grp(0)));
    }
  }
}

TEST_CASE("homology via duality, spot values") {
  auto h24 = gr::homology(2, 4);
  CHECK(h24.groups[0] == grp(1));
  CHECK(h24.groups[1] == grp(0, {2}));
  CHECK(h24.groups[4] == grp(1));

  auto h25 = gr::homology(2, 5);
  CHECK(h25.groups[0] == grp(1));
  CHECK(h25.groups[6] == grp(0));  // non-orientable top

  auto h12 = gr::homology(1, 2);  // the circle
  CHECK(h12.groups[0] == grp(1));
  CHECK(h12.groups[1] == grp(1));
}

TEST_CASE("mod-2 bookkeeping against the cell census") {
  for (int n = 2; n <= 7; ++n)
    for (int k = 1; k < n; ++k)
      for (Coeffs c : {Coeffs::trivial, Coeffs::twisted}) {
        auto g = gr::build_graph(k, n, c);
        auto cx = gr::solve_coboundary_signs(g);
        auto t = gr::cohomology(cx);
        int top = g.top_dim();
        for (int d = 0; d <= top; ++d) {
          int cells = static_cast<int>(cx.basis[d].size());
          int here = t.groups[d].rank +
                     static_cast<int>(t.groups[d].torsion.size());
          int above = d + 1 <= top
                          ? static_cast<int>(t.groups[d + 1].torsion.size())
                          : 0;
          CHECK(here + above == cells);
        }
      }
}

TEST_CASE("coboundary sign choice does not move the answer") {
  for (Coeffs c : {Coeffs::trivial, Coeffs::twisted}) {
    auto g = gr::build_graph(2, 5, c);
    auto a = gr::cohomology(gr::solve_coboundary_signs(g, 0));
    auto b = gr::cohomology(gr::solve_coboundary_signs(g, 1));
    REQUIRE(a.groups.size() == b.groups.size());
    for (size_t d = 0; d < a.groups.size(); ++d)
      CHECK(a.groups[d] == b.groups[d]);
  }
}

TEST_CASE("betti polynomial matches the closed forms") {
  CHECK(gr::betti_polynomial(gr::cohomology_of(2, 4, Coeffs::trivial)) ==
        gr::poincare(2, 4));
  CHECK(gr::betti_polynomial(gr::cohomology_of(3, 6, Coeffs::trivial)) ==
        gr::poincare(3, 6));
  CHECK(gr::betti_polynomial(gr::cohomology_of(2, 5, Coeffs::twisted)) ==
        gr::poincare_twisted(2, 5));
  CHECK(gr::betti_polynomial(gr::cohomology_of(2, 4, Coeffs::twisted)) ==
        gr::poincare_twisted(2, 4));
}
