#include "grassmann/schubert.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace gr {

namespace {
int g_ambient_cap = kMaxN;
}

int ambient_cap() { return g_ambient_cap; }

void set_ambient_cap(int n) {
  if (n < 1) throw std::invalid_argument("cap must be positive");
  g_ambient_cap = n;
}

void validate_ambient(int k, int n) {
  if (k < 0 || n < 1 || k > n)
    throw std::invalid_argument("need 0 <= k <= n");
  if (n > g_ambient_cap)
    throw std::invalid_argument("ambient size exceeds the configured cap (" +
                                std::to_string(g_ambient_cap) + ")");
}

int Symbol::dim() const {
  int d = 0;
  for (size_t j = 0; j < e.size(); ++j) d += e[j] - static_cast<int>(j) - 1;
  return d;
}

std::vector<int> Symbol::young() const {
  // Partition read off right-to-left: row j (1-based, longest first) is
  // e[k-j] - (k-j+1).  Trailing zero rows are kept so there are always k.
  std::vector<int> nu(e.size());
  for (size_t j = 0; j < e.size(); ++j)
    nu[j] = e[e.size() - 1 - j] - static_cast<int>(e.size() - j);
  return nu;
}

std::string Symbol::str() const {
  std::ostringstream out;
  out << "(";
  for (size_t j = 0; j < e.size(); ++j) {
    if (j) out << ",";
    out << e[j];
  }
  out << ")";
  return out.str();
}

bool canonical_less(const Symbol& a, const Symbol& b) {
  int da = a.dim(), db = b.dim();
  if (da != db) return da < db;
  return a.e < b.e;
}

std::vector<Symbol> enum_symbols(int k, int n) {
  validate_ambient(k, n);
  std::vector<Symbol> out;
  std::vector<int> cur(k);
  for (int j = 0; j < k; ++j) cur[j] = j + 1;
  while (true) {
    out.push_back(Symbol{cur, k, n});
    // next k-subset of [1,n] in lex order
    int i = k - 1;
    while (i >= 0 && cur[i] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::string Word::str() const {
  if (letters.empty()) return "e";
  std::ostringstream out;
  for (size_t i = 0; i < letters.size(); ++i) {
    if (i) out << " ";
    out << "s" << letters[i];
  }
  return out.str();
}

Word symbol_to_word(const Symbol& sym) {
  // Raise each entry from its base position j to its final value e[j],
  // last entry first.  Letters are collected in application order and
  // reversed at the end, since the word acts leftmost-letter-last.
  std::vector<int> applied;
  int k = sym.k;
  for (int j = k; j >= 1; --j)
    for (int v = j; v < sym.e[j - 1]; ++v) applied.push_back(v);
  Word w;
  w.letters.assign(applied.rbegin(), applied.rend());
  return w;
}

Symbol word_to_symbol(const Word& w, int k, int n) {
  validate_ambient(k, n);
  std::vector<int> cur(k);
  for (int j = 0; j < k; ++j) cur[j] = j + 1;
  // Apply letters right-to-left; s_i moves the unique entry equal to i up
  // to i+1.  A letter that does not act, or collides, is rejected.
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    int i = *it;
    if (i < 1 || i >= n) throw std::invalid_argument("letter out of range");
    auto pos = std::find(cur.begin(), cur.end(), i);
    if (pos == cur.end())
      throw std::invalid_argument("word does not act on this Grassmannian");
    if (std::find(cur.begin(), cur.end(), i + 1) != cur.end())
      throw std::invalid_argument("word leaves the cell poset");
    *pos = i + 1;
  }
  return Symbol{cur, k, n};
}

int BruhatGraph::index_of(const Symbol& s) const {
  for (size_t i = 0; i < verts.size(); ++i)
    if (verts[i].e == s.e) return static_cast<int>(i);
  return -1;
}

BruhatGraph bruhat_graph(int k, int n) {
  validate_ambient(k, n);
  BruhatGraph g;
  g.k = k;
  g.n = n;
  g.verts = enum_symbols(k, n);
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < g.verts.size(); ++i) index[g.verts[i].e] = i;
  for (size_t i = 0; i < g.verts.size(); ++i) {
    const auto& e = g.verts[i].e;
    for (int j = 0; j < k; ++j) {
      // increment entry j if the successor value is free
      int v = e[j];
      if (v + 1 > n) continue;
      if (j + 1 < k && e[j + 1] == v + 1) continue;
      std::vector<int> f = e;
      ++f[j];
      g.edges.push_back({static_cast<int>(i), index.at(f), v});
    }
  }
  std::sort(g.edges.begin(), g.edges.end(),
            [](const BruhatEdge& a, const BruhatEdge& b) {
              return std::tie(a.from, a.to) < std::tie(b.from, b.to);
            });
  return g;
}

std::vector<DecompositionPiece> decompose(int k, int n) {
  validate_ambient(k, n);
  std::vector<DecompositionPiece> out;
  auto all = enum_symbols(k, n);
  for (int last = k; last <= n; ++last) {
    DecompositionPiece piece;
    piece.last = last;
    for (int v = last - 1; v >= k; --v) piece.suffix.letters.push_back(v);
    for (const auto& s : all)
      if (s.e.back() == last) piece.members.push_back(s);
    std::sort(piece.members.begin(), piece.members.end(), canonical_less);
    out.push_back(std::move(piece));
  }
  return out;
}

}  // namespace gr
