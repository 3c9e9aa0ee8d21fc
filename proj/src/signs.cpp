#include "grassmann/signs.hpp"

#include <queue>
#include <stdexcept>

namespace gr {

KPSigns h_minus(int n) {
  KPSigns s;
  s.odd_parity = true;
  s.eps.resize(n);
  for (int j = 1; j <= n; ++j) s.eps[j - 1] = (j / 2) % 2 == 0 ? 1 : -1;
  return s;
}

KPSigns h_plus(int n) {
  KPSigns s;
  s.odd_parity = false;
  s.eps.resize(n);
  for (int j = 1; j <= n; ++j) s.eps[j - 1] = ((j - 1) / 2) % 2 == 0 ? 1 : -1;
  return s;
}

KPSigns kp_sign_vector(int k, int n) {
  validate_ambient(k, n);
  return k % 2 == 1 ? h_minus(n) : h_plus(n);
}

KPSigns graph_sign_vector(int k, int n, Coeffs coeffs) {
  validate_ambient(k, n);
  bool odd = coeffs == Coeffs::trivial ? k % 2 == 1 : k % 2 == 0;
  return odd ? h_minus(n) : h_plus(n);
}

int cell_sign(const Symbol& sym, const KPSigns& eps) {
  int s = 1;
  for (int j : sym.e) s *= eps.at(j);
  return s;
}

std::vector<int> toda_from_kp(const KPSigns& eps) {
  std::vector<int> t(eps.n() - 1);
  for (int i = 1; i < eps.n(); ++i) t[i - 1] = eps.at(i) * eps.at(i + 1);
  return t;
}

std::vector<int> weyl_propagate(const std::vector<int>& t, int i) {
  int m = static_cast<int>(t.size());
  if (i < 1 || i > m) throw std::invalid_argument("reflection out of range");
  std::vector<int> r = t;
  if (i - 2 >= 0) r[i - 2] = t[i - 2] * t[i - 1];
  if (i < m) r[i] = t[i] * t[i - 1];
  return r;
}

std::vector<char> toda_double_edges(const BruhatGraph& g, Coeffs coeffs) {
  std::vector<int> base(g.n - 1, -1);
  if (coeffs == Coeffs::twisted && g.k < g.n) base[g.k - 1] = 1;

  // Propagate the consecutive-pair signs outward from the base cell along
  // Bruhat edges; every path to a vertex must give the same state.
  std::vector<std::vector<int>> state(g.verts.size());
  std::vector<std::vector<int>> out_edges(g.verts.size());
  for (size_t e = 0; e < g.edges.size(); ++e)
    out_edges[g.edges[e].from].push_back(static_cast<int>(e));

  state[0] = base;  // verts[0] is the unique dimension-0 cell
  std::queue<int> bfs;
  bfs.push(0);
  std::vector<char> seen(g.verts.size(), 0);
  seen[0] = 1;
  std::vector<char> dbl(g.edges.size(), 0);
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop();
    for (int ei : out_edges[v]) {
      const BruhatEdge& e = g.edges[ei];
      dbl[ei] = state[v][e.reflection - 1] > 0 ? 1 : 0;
      std::vector<int> next = weyl_propagate(state[v], e.reflection);
      if (!seen[e.to]) {
        seen[e.to] = 1;
        state[e.to] = std::move(next);
        bfs.push(e.to);
      } else if (state[e.to] != next) {
        throw std::logic_error("sign propagation is path-dependent");
      }
    }
  }
  return dbl;
}

}  // namespace gr
