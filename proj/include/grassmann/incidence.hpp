#pragma once
// Incidence graphs of Gr(k,n) for both coefficient systems: edge tags from
// cell-sign agreement, blow-up weights eta, solved coboundary signs, and the
// assembled integer cochain complex (entries 0, +/-2).

#include <string>
#include <vector>

#include "grassmann/schubert.hpp"
#include "grassmann/signs.hpp"
#include "grassmann/zmatrix.hpp"

namespace gr {

struct IncidenceEdge {
  int from = 0;
  int to = 0;
  int reflection = 0;
  bool dbl = false;  // double edge: endpoint cell signs agree
};

struct IncidenceGraph {
  int k = 0;
  int n = 0;
  Coeffs coeffs = Coeffs::trivial;
  KPSigns eps;                      // sign vector the graph was built with
  std::vector<Symbol> verts;        // canonical order
  std::vector<IncidenceEdge> edges; // same order as the weak Bruhat graph
  std::vector<int> vsign;           // cell sign per vertex
  std::vector<int> eta;             // blow-up weight per vertex

  int top_dim() const { return k * (n - k); }
  int index_of(const Symbol& s) const;
};

// Builds the graph, tags edges by sign agreement, and computes eta by BFS
// from the base cell (eta = 0 there, constant across double edges, +1 across
// single edges). Any path inconsistency throws std::logic_error — the
// construction guarantees there is none, so this firing means a bug.
IncidenceGraph build_graph(int k, int n, Coeffs c);

int eta_of(const Symbol& s, const IncidenceGraph& g);

// Closed-form eta for the trivial-coefficient graph (cross-check only; the
// BFS value is authoritative):
//   k odd:  sum floor(sigma_j/2)     - sum floor(j/2)
//   k even: sum floor((sigma_j-1)/2) - sum floor((j-1)/2)
int eta_closed_form(const Symbol& s);

// Cochain complex with one basis per degree (canonically ordered symbols of
// that dimension) and one coboundary matrix per degree.
struct CochainComplex {
  int k = 0;
  int n = 0;
  Coeffs coeffs = Coeffs::trivial;
  std::vector<std::vector<Symbol>> basis;  // basis[d]
  // delta[d] maps C^d -> C^{d+1}: rows index basis[d+1], cols basis[d].
  std::vector<ZMatrix> delta;
};

// Assigns +/-2 to every double edge so consecutive coboundaries compose to
// zero. The sign pattern is found by solving a GF(2) linear system over the
// double edges (each length-2 interval whose two routes are both double-
// double must cancel); delta o delta = 0 is then verified by explicit matrix
// multiplication. `variant` selects the free-variable fill (0 or 1) so that
// independence of the particular solution can be tested. Throws
// std::logic_error if the system is unsatisfiable or the final check fails.
CochainComplex solve_coboundary_signs(const IncidenceGraph& g, int variant = 0);

// Graphviz rendering: vertices labeled "(s1,...,sk) | dim=d | eta=h", double
// edges bold, single edges dashed.
std::string to_dot(const IncidenceGraph& g);

}  // namespace gr
