#pragma once
// Schubert cells of Gr(k,n): symbols, Weyl-word representatives, the weak
// Bruhat graph, and the Pascal-style decomposition into smaller Grassmannians.

#include <string>
#include <vector>

namespace gr {

// Default cap on the ambient dimension; C(16,8) = 12870 cells is the largest
// wedge basis the exact-arithmetic stages are sized for. The cap can be
// raised at runtime (set_ambient_cap), but memory and time for the matrix
// stages grow like C(n, n/2)^2.
inline constexpr int kMaxN = 16;

int ambient_cap();
void set_ambient_cap(int n);  // throws std::invalid_argument if n < 1

// Pivot k-tuple (1-based, strictly increasing) naming one Schubert cell.
struct Symbol {
  std::vector<int> e;  // entries sigma_1 < ... < sigma_k, values in [1, n]
  int k = 0;
  int n = 0;

  int dim() const;  // sum (sigma_j - j)
  // Partition (nu_1 >= ... >= nu_k >= 0), nu_j = sigma_{k-j+1} - (k-j+1);
  // trailing zero rows are kept so the output always has k parts.
  std::vector<int> young() const;
  std::string str() const;  // "(1,3)"

  bool operator==(const Symbol& o) const { return e == o.e && n == o.n; }
};

// Canonical total order: (dimension, lexicographic on entries). Every matrix
// basis downstream uses this order, so results are byte-reproducible.
bool canonical_less(const Symbol& a, const Symbol& b);

void validate_ambient(int k, int n);  // throws std::invalid_argument

// All C(n,k) symbols in canonical order.
std::vector<Symbol> enum_symbols(int k, int n);

// Reduced word of the minimal coset representative; letters[i] is the index
// of a simple reflection, leftmost letter applied last. Canonical choice:
// raise the last entry from k to sigma_k, then the previous entry, etc., so
// the word always ends in s_k (or is empty for the base symbol).
struct Word {
  std::vector<int> letters;
  int length() const { return static_cast<int>(letters.size()); }
  std::string str() const;  // "s2 s1 s3 s2", "e" when empty
  bool operator==(const Word& o) const { return letters == o.letters; }
};

Word symbol_to_word(const Symbol& s);

// Apply letters right to left to the base symbol (1,...,k). Throws
// std::invalid_argument if some letter does not act as a dimension-raising
// step (i.e. the word does not represent a minimal coset element).
Symbol word_to_symbol(const Word& w, int k, int n);

// Weak Bruhat graph: vertices in canonical order, edges raise dimension by 1
// by incrementing a single entry sigma -> sigma + 1 (the action of s_sigma).
struct BruhatEdge {
  int from = 0;        // index into verts
  int to = 0;          // index into verts
  int reflection = 0;  // the incremented entry value (index of s)
};

struct BruhatGraph {
  int k = 0;
  int n = 0;
  std::vector<Symbol> verts;
  std::vector<BruhatEdge> edges;  // sorted by (from, to)

  int index_of(const Symbol& s) const;  // -1 if absent
};

BruhatGraph bruhat_graph(int k, int n);

// Partition of the symbols by last entry j = k..n; piece j has C(j-1, k-1)
// members, each equal to a Gr(k-1, j-1) symbol extended by j, and shares the
// word suffix s_{j-1} s_{j-2} ... s_k (empty for j = k).
struct DecompositionPiece {
  int last = 0;  // common last entry of the members
  Word suffix;
  std::vector<Symbol> members;  // canonical order
};

std::vector<DecompositionPiece> decompose(int k, int n);

}  // namespace gr
