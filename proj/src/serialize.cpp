#include "grassmann/serialize.hpp"

#include <sstream>

namespace gr {

namespace {

int64_t to_i64(const Int& v) {
  if (!v.fits_slong_p())
    throw std::overflow_error("coefficient does not fit in 64 bits");
  return v.get_si();
}

std::string dash_str(const Symbol& s) {
  std::ostringstream out;
  for (size_t i = 0; i < s.e.size(); ++i) {
    if (i) out << "-";
    out << s.e[i];
  }
  return out.str();
}

}  // namespace

Json to_json(const Poly& p) {
  Json j;
  j["var"] = std::string(1, p.var());
  Json coeffs = Json::array();
  for (const Int& c : p.coeffs()) coeffs.push_back(to_i64(c));
  j["coeffs"] = coeffs;
  return j;
}

Json to_json(const Symbol& s) {
  Json j;
  j["entries"] = s.e;
  j["dim"] = s.dim();
  j["word"] = symbol_to_word(s).str();
  j["young"] = s.young();
  return j;
}

Json to_json(const AbGroup& g) {
  Json j;
  j["rank"] = g.rank;
  Json tor = Json::array();
  for (const Int& t : g.torsion) tor.push_back(to_i64(t));
  j["torsion"] = tor;
  j["pretty"] = g.str();
  return j;
}

Json to_json(const CohomologyTable& t) {
  Json j;
  j["k"] = t.k;
  j["n"] = t.n;
  j["coeffs"] = t.coeffs == Coeffs::twisted ? "twisted" : "trivial";
  Json groups = Json::array();
  for (const AbGroup& g : t.groups) groups.push_back(to_json(g));
  j["groups"] = groups;
  return j;
}

Json to_json(const IncidenceGraph& g) {
  Json j;
  j["k"] = g.k;
  j["n"] = g.n;
  j["coeffs"] = g.coeffs == Coeffs::twisted ? "twisted" : "trivial";
  Json eps = Json::array();
  for (int v : g.eps.eps) eps.push_back(v);
  j["epsilon"] = eps;
  Json verts = Json::array();
  for (size_t i = 0; i < g.verts.size(); ++i) {
    Json v = to_json(g.verts[i]);
    v["sign"] = g.vsign[i];
    v["eta"] = g.eta[i];
    verts.push_back(v);
  }
  j["vertices"] = verts;
  Json edges = Json::array();
  for (const auto& e : g.edges) {
    Json ed;
    ed["from"] = e.from;
    ed["to"] = e.to;
    ed["reflection"] = e.reflection;
    ed["double"] = e.dbl;
    edges.push_back(ed);
  }
  j["edges"] = edges;
  return j;
}

Json to_json(const CrossingEvent& e) {
  Json j;
  j["segment"] = e.segment;
  j["s_interval"] = Json::array({e.s_lo, e.s_hi});
  j["from_cell"] = dash_str(e.from_cell);
  j["to_cell"] = dash_str(e.to_cell);
  return j;
}

std::string csv_grid(const std::vector<GridCell>& grid) {
  std::ostringstream out;
  out << "x,y,cell,tau_sign\n";
  for (const auto& c : grid)
    out << c.x << "," << c.y << "," << dash_str(c.cell) << "," << c.tau_sign
        << "\n";
  return out.str();
}

}  // namespace gr
