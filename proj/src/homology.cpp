#include "grassmann/homology.hpp"

#include <algorithm>
#include <sstream>

namespace gr {

ZMatrix multiply(const ZMatrix& A, const ZMatrix& B) {
  if (A.cols != B.rows) throw std::invalid_argument("dimension mismatch");
  ZMatrix C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int l = 0; l < A.cols; ++l) {
      const mpz_class& v = A.at(i, l);
      if (v == 0) continue;
      for (int j = 0; j < B.cols; ++j)
        if (B.at(l, j) != 0) C.at(i, j) += v * B.at(l, j);
    }
  return C;
}

namespace {

// Position of an entry with the smallest nonzero |value| at or after
// (r0, c0); returns {-1,-1} if the remaining block is zero.
std::pair<int, int> pick_pivot(const ZMatrix& m, int r0, int c0) {
  int br = -1, bc = -1;
  mpz_class best;
  for (int r = r0; r < m.rows; ++r)
    for (int c = c0; c < m.cols; ++c) {
      const mpz_class& v = m.at(r, c);
      if (v == 0) continue;
      mpz_class a = abs(v);
      if (br < 0 || a < best) {
        best = a;
        br = r;
        bc = c;
        if (best == 1) return {br, bc};
      }
    }
  return {br, bc};
}

void swap_rows(ZMatrix& m, int a, int b) {
  if (a == b) return;
  for (int c = 0; c < m.cols; ++c) std::swap(m.at(a, c), m.at(b, c));
}

void swap_cols(ZMatrix& m, int a, int b) {
  if (a == b) return;
  for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, a), m.at(r, b));
}

}  // namespace

SNFResult smith_normal_form(ZMatrix m) {
  SNFResult res;
  int t = 0;  // current diagonal slot
  int limit = std::min(m.rows, m.cols);
  while (t < limit) {
    auto [pr, pc] = pick_pivot(m, t, t);
    if (pr < 0) break;
    swap_rows(m, t, pr);
    swap_cols(m, t, pc);
    // clear row and column t by repeated reduction; pivot may move, so loop
    bool clean = false;
    while (!clean) {
      clean = true;
      for (int r = t + 1; r < m.rows; ++r) {
        if (m.at(r, t) == 0) continue;
        mpz_class q = m.at(r, t) / m.at(t, t);  // truncated division
        for (int c = t; c < m.cols; ++c) m.at(r, c) -= q * m.at(t, c);
        if (m.at(r, t) != 0) {  // remainder smaller than pivot: swap up
          swap_rows(m, t, r);
          clean = false;
        }
      }
      for (int c = t + 1; c < m.cols; ++c) {
        if (m.at(t, c) == 0) continue;
        mpz_class q = m.at(t, c) / m.at(t, t);
        for (int r = t; r < m.rows; ++r) m.at(r, c) -= q * m.at(r, t);
        if (m.at(t, c) != 0) {
          swap_cols(m, t, c);
          clean = false;
        }
      }
    }
    // divisibility: pivot must divide the rest of the block; if not, fold the
    // offending row in and restart the cleanup on this slot
    bool divides = true;
    for (int r = t + 1; r < m.rows && divides; ++r)
      for (int c = t + 1; c < m.cols && divides; ++c)
        if (m.at(r, c) % m.at(t, t) != 0) {
          for (int cc = t; cc < m.cols; ++cc) m.at(t, cc) += m.at(r, cc);
          divides = false;
        }
    if (!divides) continue;  // redo slot t with the folded row
    if (m.at(t, t) < 0) m.at(t, t) = -m.at(t, t);
    res.factors.push_back(m.at(t, t));
    ++t;
  }
  res.rank = static_cast<int>(res.factors.size());
  return res;
}

std::string AbGroup::str() const {
  if (rank == 0 && torsion.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < rank; ++i) {
    if (!first) out << " + ";
    out << "Z";
    first = false;
  }
  for (const Int& t : torsion) {
    if (!first) out << " + ";
    out << "Z_" << t.get_str();
    first = false;
  }
  return out.str();
}

CohomologyTable cohomology(const CochainComplex& c) {
  CohomologyTable table;
  table.k = c.k;
  table.n = c.n;
  table.coeffs = c.coeffs;
  int top = static_cast<int>(c.basis.size()) - 1;
  std::vector<SNFResult> snf(top);  // snf[d] for delta[d]: C^d -> C^{d+1}
  for (int d = 0; d < top; ++d) snf[d] = smith_normal_form(c.delta[d]);
  table.groups.resize(top + 1);
  for (int d = 0; d <= top; ++d) {
    int dim_d = static_cast<int>(c.basis[d].size());
    int rank_out = d < top ? snf[d].rank : 0;
    int rank_in = d > 0 ? snf[d - 1].rank : 0;
    AbGroup h;
    h.rank = dim_d - rank_out - rank_in;
    if (d > 0)
      for (const Int& f : snf[d - 1].factors)
        if (f > 1) h.torsion.push_back(f);
    table.groups[d] = h;
  }
  return table;
}

CohomologyTable cohomology_of(int k, int n, Coeffs coeffs) {
  IncidenceGraph g = build_graph(k, n, coeffs);
  return cohomology(solve_coboundary_signs(g));
}

CohomologyTable homology(int k, int n) {
  Coeffs dual = n % 2 == 0 ? Coeffs::trivial : Coeffs::twisted;
  CohomologyTable co = cohomology_of(k, n, dual);
  CohomologyTable table;
  table.k = k;
  table.n = n;
  table.coeffs = Coeffs::trivial;
  int top = k * (n - k);
  table.groups.resize(top + 1);
  for (int j = 0; j <= top; ++j) table.groups[j] = co.groups[top - j];
  return table;
}

Poly betti_polynomial(const CohomologyTable& t) {
  Poly acc('t');
  for (size_t d = 0; d < t.groups.size(); ++d)
    if (t.groups[d].rank > 0)
      acc = acc + Poly::monomial(t.groups[d].rank, static_cast<int>(d), 't');
  return acc;
}

}  // namespace gr
