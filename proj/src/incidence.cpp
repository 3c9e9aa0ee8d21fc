#include "grassmann/incidence.hpp"

#include <map>
#include <queue>
#include <sstream>

namespace gr {

int IncidenceGraph::index_of(const Symbol& s) const {
  for (size_t i = 0; i < verts.size(); ++i)
    if (verts[i].e == s.e) return static_cast<int>(i);
  return -1;
}

IncidenceGraph build_graph(int k, int n, Coeffs coeffs) {
  BruhatGraph b = bruhat_graph(k, n);
  IncidenceGraph g;
  g.k = k;
  g.n = n;
  g.coeffs = coeffs;
  g.eps = graph_sign_vector(k, n, coeffs);
  g.verts = std::move(b.verts);
  g.vsign.resize(g.verts.size());
  for (size_t i = 0; i < g.verts.size(); ++i)
    g.vsign[i] = cell_sign(g.verts[i], g.eps);
  g.edges.reserve(b.edges.size());
  for (const auto& e : b.edges)
    g.edges.push_back(
        {e.from, e.to, e.reflection, g.vsign[e.from] == g.vsign[e.to]});

  // eta by BFS over the (undirected view of the) edge set.
  g.eta.assign(g.verts.size(), -1);
  std::vector<std::vector<int>> adj(g.verts.size());
  for (size_t ei = 0; ei < g.edges.size(); ++ei) {
    adj[g.edges[ei].from].push_back(static_cast<int>(ei));
    adj[g.edges[ei].to].push_back(static_cast<int>(ei));
  }
  g.eta[0] = 0;
  std::queue<int> bfs;
  bfs.push(0);
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop();
    for (int ei : adj[v]) {
      const auto& e = g.edges[ei];
      int w = e.from == v ? e.to : e.from;
      int val = g.eta[v] + (e.dbl ? 0 : 1) * (e.from == v ? 1 : -1);
      if (g.eta[w] == -1) {
        g.eta[w] = val;
        bfs.push(w);
      } else if (g.eta[w] != val) {
        throw std::logic_error("eta is path-dependent");
      }
    }
  }
  for (int h : g.eta)
    if (h < 0) throw std::logic_error("graph is not connected");
  return g;
}

int eta_of(const Symbol& s, const IncidenceGraph& g) {
  int i = g.index_of(s);
  if (i < 0) throw std::invalid_argument("symbol not in graph");
  return g.eta[i];
}

int eta_closed_form(const Symbol& s) {
  int acc = 0;
  if (s.k % 2 == 1) {
    for (int j = 1; j <= s.k; ++j) acc += s.e[j - 1] / 2 - j / 2;
  } else {
    for (int j = 1; j <= s.k; ++j) acc += (s.e[j - 1] - 1) / 2 - (j - 1) / 2;
  }
  return acc;
}

namespace {

// GF(2) elimination over the double-edge sign variables; returns one
// satisfying assignment (free variables all = variant).
std::vector<char> solve_gf2(int nvars, std::vector<std::vector<int>> rows,
                            int variant) {
  // Each row: list of variable ids, last element is the parity bit slot.
  // Represent as bitsets for elimination.
  int words = (nvars + 64) / 64 + 1;  // last bit after vars = rhs
  std::vector<std::vector<uint64_t>> mat;
  auto bit = [&](std::vector<uint64_t>& r, int i) { r[i / 64] ^= 1ull << (i % 64); };
  auto test = [&](const std::vector<uint64_t>& r, int i) {
    return (r[i / 64] >> (i % 64)) & 1ull;
  };
  for (auto& row : rows) {
    std::vector<uint64_t> r(words, 0);
    for (int v : row) bit(r, v);
    bit(r, nvars);  // rhs = 1 for every constraint
    mat.push_back(std::move(r));
  }
  std::vector<int> pivot_of_var(nvars, -1);
  int rank = 0;
  for (int col = 0; col < nvars && rank < static_cast<int>(mat.size()); ++col) {
    int piv = -1;
    for (int r = rank; r < static_cast<int>(mat.size()); ++r)
      if (test(mat[r], col)) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(mat[rank], mat[piv]);
    for (int r = 0; r < static_cast<int>(mat.size()); ++r)
      if (r != rank && test(mat[r], col))
        for (int w = 0; w < words; ++w) mat[r][w] ^= mat[rank][w];
    pivot_of_var[col] = rank;
    ++rank;
  }
  for (int r = rank; r < static_cast<int>(mat.size()); ++r)
    if (test(mat[r], nvars))
      throw std::logic_error("coboundary sign system is unsatisfiable");

  std::vector<char> x(nvars, 0);
  for (int v = 0; v < nvars; ++v)
    if (pivot_of_var[v] < 0) x[v] = static_cast<char>(variant & 1);
  // back-substitute pivots (matrix is fully reduced, so each pivot row reads
  // off directly)
  for (int v = 0; v < nvars; ++v) {
    if (pivot_of_var[v] < 0) continue;
    const auto& row = mat[pivot_of_var[v]];
    char val = test(row, nvars) ? 1 : 0;
    for (int u = v + 1; u < nvars; ++u)
      if (test(row, u) && x[u]) val ^= 1;
    x[v] = val;
  }
  return x;
}

}  // namespace

CochainComplex solve_coboundary_signs(const IncidenceGraph& g, int variant) {
  // Variables: one per double edge.
  std::vector<int> var_of_edge(g.edges.size(), -1);
  int nvars = 0;
  for (size_t ei = 0; ei < g.edges.size(); ++ei)
    if (g.edges[ei].dbl) var_of_edge[ei] = nvars++;

  std::vector<std::vector<int>> out_edges(g.verts.size());
  for (size_t ei = 0; ei < g.edges.size(); ++ei)
    out_edges[g.edges[ei].from].push_back(static_cast<int>(ei));

  // Constraints: for every two-step path pair v -> a -> w, v -> b -> w with
  // all four edges double, the route signs must cancel.
  std::vector<std::vector<int>> rows;
  for (size_t v = 0; v < g.verts.size(); ++v) {
    std::map<int, std::vector<std::pair<int, int>>> routes;  // w -> (e1,e2)
    for (int e1 : out_edges[v])
      for (int e2 : out_edges[g.edges[e1].to])
        routes[g.edges[e2].to].push_back({e1, e2});
    for (const auto& [w, rts] : routes) {
      std::vector<std::pair<int, int>> dd;
      for (auto [e1, e2] : rts)
        if (g.edges[e1].dbl && g.edges[e2].dbl) dd.push_back({e1, e2});
      if (dd.empty()) continue;
      if (dd.size() % 2 != 0)
        throw std::logic_error("interval with an odd number of double routes");
      // pair them up: route 0 against route 1 (intervals here have at most
      // two routes in total)
      rows.push_back({var_of_edge[dd[0].first], var_of_edge[dd[0].second],
                      var_of_edge[dd[1].first], var_of_edge[dd[1].second]});
    }
  }
  std::vector<char> x = solve_gf2(nvars, std::move(rows), variant);

  CochainComplex cx;
  cx.k = g.k;
  cx.n = g.n;
  cx.coeffs = g.coeffs;
  int top = g.top_dim();
  cx.basis.resize(top + 1);
  std::vector<int> pos(g.verts.size());
  for (size_t i = 0; i < g.verts.size(); ++i) {
    int d = g.verts[i].dim();
    pos[i] = static_cast<int>(cx.basis[d].size());
    cx.basis[d].push_back(g.verts[i]);
  }
  cx.delta.resize(top);
  for (int d = 0; d < top; ++d)
    cx.delta[d] = ZMatrix(static_cast<int>(cx.basis[d + 1].size()),
                          static_cast<int>(cx.basis[d].size()));
  for (size_t ei = 0; ei < g.edges.size(); ++ei) {
    const auto& e = g.edges[ei];
    if (!e.dbl) continue;
    int d = g.verts[e.from].dim();
    cx.delta[d].at(pos[e.to], pos[e.from]) = x[var_of_edge[ei]] ? -2 : 2;
  }
  for (int d = 0; d + 1 < top; ++d)
    if (!multiply(cx.delta[d + 1], cx.delta[d]).is_zero())
      throw std::logic_error("coboundary squared is nonzero");
  return cx;
}

std::string to_dot(const IncidenceGraph& g) {
  std::ostringstream out;
  out << "digraph G {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=box];\n";
  for (size_t i = 0; i < g.verts.size(); ++i) {
    const auto& s = g.verts[i];
    out << "  v" << i << " [label=\"" << s.str() << " | dim=" << s.dim()
        << " | eta=" << g.eta[i] << "\"];\n";
  }
  for (const auto& e : g.edges) {
    out << "  v" << e.from << " -> v" << e.to << " [style="
        << (e.dbl ? "bold" : "dashed") << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace gr
