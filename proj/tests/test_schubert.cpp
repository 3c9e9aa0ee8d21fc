#include <algorithm>
#include <stdexcept>

#include "doctest.h"
#include "grassmann/qpoly.hpp"
#include "grassmann/schubert.hpp"
#include "oracles.hpp"

using gr::Symbol;
using gr::Word;

namespace {
Symbol sym(std::vector<int> e, int n) {
  Symbol s;
  s.k = static_cast<int>(e.size());
  s.n = n;
  s.e = std::move(e);
  return s;
}
}  // namespace

TEST_CASE("ambient validation") {
  CHECK_NOTHROW(gr::validate_ambient(2, 4));
  CHECK_NOTHROW(gr::validate_ambient(0, 1));
  CHECK_THROWS_AS(gr::validate_ambient(-1, 4), std::invalid_argument);
  CHECK_THROWS_AS(gr::validate_ambient(5, 4), std::invalid_argument);
  CHECK_THROWS_AS(gr::validate_ambient(2, 17), std::invalid_argument);

  CHECK(gr::ambient_cap() == gr::kMaxN);
  gr::set_ambient_cap(20);
  CHECK_NOTHROW(gr::validate_ambient(2, 18));
  gr::set_ambient_cap(gr::kMaxN);
  CHECK_THROWS_AS(gr::validate_ambient(2, 18), std::invalid_argument);
  CHECK_THROWS_AS(gr::set_ambient_cap(0), std::invalid_argument);
}

TEST_CASE("dimension and partition shape") {
  CHECK(sym({1, 2}, 4).dim() == 0);
  CHECK(sym({3, 4}, 4).dim() == 4);
  CHECK(sym({2, 3, 6}, 6).dim() == 5);
  CHECK(sym({2, 3, 6}, 6).young() == std::vector<int>{3, 1, 1});
  CHECK(sym({3, 4}, 4).young() == std::vector<int>{2, 2});
  CHECK(sym({1, 2, 3}, 5).young() == std::vector<int>{0, 0, 0});
  CHECK(sym({1, 3}, 4).str() == "(1,3)");
}

TEST_CASE("canonical enumeration order") {
  auto cells = gr::enum_symbols(2, 4);
  REQUIRE(cells.size() == 6);
  CHECK(cells[0].e == std::vector<int>{1, 2});
  CHECK(cells[1].e == std::vector<int>{1, 3});
  CHECK(cells[2].e == std::vector<int>{1, 4});
  CHECK(cells[3].e == std::vector<int>{2, 3});
  CHECK(cells[4].e == std::vector<int>{2, 4});
  CHECK(cells[5].e == std::vector<int>{3, 4});
  CHECK(std::is_sorted(cells.begin(), cells.end(), gr::canonical_less));
}

TEST_CASE("cell census matches the gaussian binomial") {
  for (int n = 1; n <= 12; ++n)
    for (int k = 0; k <= n; ++k) {
      auto cells = gr::enum_symbols(k, n);
      CHECK(std::is_sorted(cells.begin(), cells.end(), gr::canonical_less));
      gr::Poly census('q');
      for (const auto& s : cells)
        census = census + gr::Poly::monomial(1, s.dim());
      CHECK(census == gr::qbinom(n, k));
    }
}

TEST_CASE("canonical words, small tables") {
  auto word = [](std::vector<int> e, int n) {
    return gr::symbol_to_word(sym(std::move(e), n)).str();
  };
  CHECK(word({1, 2}, 4) == "e");
  CHECK(word({1, 3}, 4) == "s2");
  CHECK(word({2, 3}, 4) == "s1 s2");
  CHECK(word({1, 4}, 4) == "s3 s2");
  CHECK(word({2, 4}, 4) == "s1 s3 s2");
  CHECK(word({3, 4}, 4) == "s2 s1 s3 s2");

  CHECK(word({2}, 4) == "s1");
  CHECK(word({3}, 4) == "s2 s1");
  CHECK(word({4}, 4) == "s3 s2 s1");

  CHECK(word({1, 2, 4}, 4) == "s3");
  CHECK(word({1, 3, 4}, 4) == "s2 s3");
  CHECK(word({2, 3, 4}, 4) == "s1 s2 s3");
}

TEST_CASE("word length equals cell dimension and words round-trip") {
  for (int n = 1; n <= 7; ++n)
    for (int k = 1; k < n; ++k)
      for (const auto& s : gr::enum_symbols(k, n)) {
        Word w = gr::symbol_to_word(s);
        CHECK(w.length() == s.dim());
        CHECK(gr::word_to_symbol(w, k, n) == s);
      }
}

TEST_CASE("malformed words are rejected") {
  CHECK_THROWS_AS(gr::word_to_symbol(Word{{0}}, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(gr::word_to_symbol(Word{{3}}, 1, 3), std::invalid_argument);
  // no entry equal to 1 after the first step
  CHECK_THROWS_AS(gr::word_to_symbol(Word{{1, 1}}, 1, 3),
                  std::invalid_argument);
  // raising 1 -> 2 collides with the existing entry 2
  CHECK_THROWS_AS(gr::word_to_symbol(Word{{1}}, 2, 4), std::invalid_argument);
}

TEST_CASE("weak order graph on Gr(2,4)") {
  auto g = gr::bruhat_graph(2, 4);
  REQUIRE(g.verts.size() == 6);
  REQUIRE(g.edges.size() == 6);
  auto idx = [&](std::vector<int> e) { return g.index_of(sym(std::move(e), 4)); };
  // every edge raises dimension by one and increments exactly one entry
  for (const auto& e : g.edges) {
    CHECK(g.verts[e.to].dim() == g.verts[e.from].dim() + 1);
    auto a = g.verts[e.from].e, b = g.verts[e.to].e;
    int changed = 0;
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) {
        ++changed;
        CHECK(b[i] == a[i] + 1);
        CHECK(e.reflection == a[i]);
      }
    CHECK(changed == 1);
  }
  CHECK(std::is_sorted(g.edges.begin(), g.edges.end(),
                       [](const gr::BruhatEdge& a, const gr::BruhatEdge& b) {
                         return std::tie(a.from, a.to) < std::tie(b.from, b.to);
                       }));
  // the hexagon: 12 -> 13 -> {14, 23} -> 24 -> 34
  auto has_edge = [&](int u, int v) {
    return std::any_of(g.edges.begin(), g.edges.end(), [&](const auto& e) {
      return e.from == u && e.to == v;
    });
  };
  CHECK(has_edge(idx({1, 2}), idx({1, 3})));
  CHECK(has_edge(idx({1, 3}), idx({1, 4})));
  CHECK(has_edge(idx({1, 3}), idx({2, 3})));
  CHECK(has_edge(idx({1, 4}), idx({2, 4})));
  CHECK(has_edge(idx({2, 3}), idx({2, 4})));
  CHECK(has_edge(idx({2, 4}), idx({3, 4})));
  CHECK(g.index_of(sym({9, 9}, 4)) == -1);
}

TEST_CASE("projective space gives a path graph") {
  for (int n = 2; n <= 8; ++n) {
    auto g = gr::bruhat_graph(1, n);
    CHECK(g.verts.size() == static_cast<size_t>(n));
    CHECK(g.edges.size() == static_cast<size_t>(n - 1));
    for (int i = 0; i + 1 < n; ++i) {
      CHECK(g.edges[i].from == i);
      CHECK(g.edges[i].to == i + 1);
      CHECK(g.edges[i].reflection == i + 1);
    }
  }
}

TEST_CASE("decomposition by last entry") {
  auto pieces = gr::decompose(2, 4);
  REQUIRE(pieces.size() == 3);
  CHECK(pieces[0].last == 2);
  CHECK(pieces[0].suffix.str() == "e");
  CHECK(pieces[0].members.size() == 1);
  CHECK(pieces[1].last == 3);
  CHECK(pieces[1].suffix.str() == "s2");
  CHECK(pieces[1].members.size() == 2);
  CHECK(pieces[2].last == 4);
  CHECK(pieces[2].suffix.str() == "s3 s2");
  CHECK(pieces[2].members.size() == 3);
}

TEST_CASE("decomposition pieces factor words and mirror smaller graphs") {
  for (int n = 2; n <= 7; ++n)
    for (int k = 1; k < n; ++k) {
      auto pieces = gr::decompose(k, n);
      size_t total = 0;
      for (const auto& piece : pieces) {
        total += piece.members.size();
        // size C(last-1, k-1)
        mpz_class expect;
        mpz_bin_uiui(expect.get_mpz_t(), piece.last - 1, k - 1);
        CHECK(mpz_class(piece.members.size()) == expect);
        for (const auto& s : piece.members) {
          CHECK(s.e.back() == piece.last);
          // word = (word of the symbol with its last entry dropped) + suffix
          Word w = gr::symbol_to_word(s);
          Word expect_w;
          if (k > 1) {
            Symbol head = s;
            head.e.pop_back();
            head.k = k - 1;
            head.n = piece.last - 1;
            expect_w = gr::symbol_to_word(head);
          }
          expect_w.letters.insert(expect_w.letters.end(),
                                  piece.suffix.letters.begin(),
                                  piece.suffix.letters.end());
          CHECK(w == expect_w);
        }
        // the induced subgraph is the weak order graph one size down
        if (k >= 1 && piece.last >= 2) {
          auto big = gr::bruhat_graph(k, n);
          auto small = gr::bruhat_graph(k - 1, piece.last - 1);
          int inside = 0;
          for (const auto& e : big.edges) {
            const Symbol& a = big.verts[e.from];
            const Symbol& b = big.verts[e.to];
            if (a.e.back() != piece.last || b.e.back() != piece.last) continue;
            ++inside;
            if (k == 1) continue;  // both endpoints are the single member
            Symbol ha = a, hb = b;
            ha.e.pop_back();
            ha.k = k - 1;
            ha.n = piece.last - 1;
            hb.e.pop_back();
            hb.k = k - 1;
            hb.n = piece.last - 1;
            int u = small.index_of(ha), v = small.index_of(hb);
            REQUIRE(u >= 0);
            REQUIRE(v >= 0);
            bool found = std::any_of(
                small.edges.begin(), small.edges.end(), [&](const auto& se) {
                  return se.from == u && se.to == v &&
                         se.reflection == e.reflection;
                });
            CHECK(found);
          }
          if (k > 1)
            CHECK(inside == static_cast<int>(small.edges.size()));
          else
            CHECK(inside == 0);
        }
      }
      CHECK(total == gr::enum_symbols(k, n).size());
    }
}
