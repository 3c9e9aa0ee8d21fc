#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "grassmann/serialize.hpp"
#include "grassmann/verify.hpp"

namespace {

using gr::Coeffs;
using gr::Json;

int g_k = 0, g_n = 0;

void add_kn(CLI::App* cmd) {
  cmd->add_option("-k", g_k, "number of rows (subspace dimension)")
      ->required();
  cmd->add_option("-n", g_n, "ambient dimension")->required();
}

gr::Symbol parse_symbol(const std::string& text, int k, int n) {
  gr::Symbol s;
  s.k = k;
  s.n = n;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, '-')) {
    if (part.empty()) throw CLI::ValidationError("cell", "empty entry");
    s.e.push_back(std::stoi(part));
  }
  if (static_cast<int>(s.e.size()) != k)
    throw CLI::ValidationError("cell", "expected " + std::to_string(k) +
                                           " dash-separated entries");
  for (int i = 0; i < k; ++i) {
    if (s.e[i] < 1 || s.e[i] > n)
      throw CLI::ValidationError("cell", "entry out of range");
    if (i > 0 && s.e[i] <= s.e[i - 1])
      throw CLI::ValidationError("cell", "entries must increase");
  }
  return s;
}

std::pair<double, double> parse_range(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw CLI::ValidationError("range", "expected LO:HI");
  return {std::stod(text.substr(0, colon)), std::stod(text.substr(colon + 1))};
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_cells(bool text) {
  auto symbols = gr::enum_symbols(g_k, g_n);
  if (text) {
    for (const auto& s : symbols) {
      std::cout << s.str() << "  dim=" << s.dim()
                << "  word=" << gr::symbol_to_word(s).str() << "  young=[";
      auto y = s.young();
      for (size_t i = 0; i < y.size(); ++i)
        std::cout << (i ? "," : "") << y[i];
      std::cout << "]\n";
    }
    return 0;
  }
  Json j;
  j["schema"] = 1;
  j["k"] = g_k;
  j["n"] = g_n;
  Json cells = Json::array();
  for (const auto& s : symbols) cells.push_back(gr::to_json(s));
  j["cells"] = cells;
  emit(j);
  return 0;
}

int cmd_graph(bool twisted, const std::string& format) {
  gr::IncidenceGraph g =
      gr::build_graph(g_k, g_n, twisted ? Coeffs::twisted : Coeffs::trivial);
  if (format == "dot") {
    std::cout << gr::to_dot(g);
    return 0;
  }
  Json j;
  j["schema"] = 1;
  j["graph"] = gr::to_json(g);
  emit(j);
  return 0;
}

int cmd_cohomology(bool twisted) {
  gr::CohomologyTable t = gr::cohomology_of(
      g_k, g_n, twisted ? Coeffs::twisted : Coeffs::trivial);
  Json j;
  j["schema"] = 1;
  j["cohomology"] = gr::to_json(t);
  emit(j);
  return 0;
}

int cmd_homology() {
  gr::CohomologyTable t = gr::homology(g_k, g_n);
  Json j;
  j["schema"] = 1;
  Json ht = gr::to_json(t);
  ht["indexing"] = "homological";
  j["homology"] = ht;
  emit(j);
  return 0;
}

int cmd_poincare(bool twisted) {
  gr::Poly p =
      twisted ? gr::poincare_twisted(g_k, g_n) : gr::poincare(g_k, g_n);
  Json j;
  j["schema"] = 1;
  j["poincare"] = gr::to_json(p);
  j["pretty"] = p.str();
  emit(j);
  return 0;
}

int cmd_ppoly(bool twisted, const std::string& source) {
  gr::Poly p;
  if (source == "graph") {
    p = gr::p_from_graph(gr::build_graph(
        g_k, g_n, twisted ? Coeffs::twisted : Coeffs::trivial));
  } else if (twisted) {
    p = gr::p_star_poly(g_k, g_n);
  } else {
    p = gr::p_poly(g_k, g_n);
  }
  Json j;
  j["schema"] = 1;
  j["p"] = gr::to_json(p);
  j["pretty"] = p.str();
  emit(j);
  return 0;
}

int cmd_fq(bool oracle, int64_t q) {
  gr::Poly closed = gr::grass_points_closed(g_k, g_n);
  Json j;
  j["schema"] = 1;
  j["k"] = g_k;
  j["n"] = g_n;
  j["closed"] = gr::to_json(closed);
  j["pretty"] = closed.str();
  int exit_code = 0;
  if (oracle) {
    gr::PrimeField f = gr::make_prime_field(q);
    gr::PointCountCheck chk = gr::verify_p_relation(g_k, g_n, f);
    j["q"] = q;
    j["closed_at_q"] = chk.closed.get_str();
    j["p_relation_at_q"] = chk.via_p.get_str();
    j["oracle"] = chk.oracle;
    j["match"] = chk.ok;
    if (!chk.ok) exit_code = 1;
  }
  emit(j);
  return exit_code;
}

int cmd_kp_scan(const std::string& path, int samples, bool all_plus) {
  gr::KPSigns eps;
  if (all_plus)
    eps.eps.assign(g_n, 1);
  else
    eps = gr::kp_sign_vector(g_k, g_n);
  gr::SpectralData d = gr::default_spectral(g_k, g_n, eps);
  std::vector<gr::TimeVector> waypoints;
  std::stringstream ss(path);
  std::string token;
  std::vector<std::string> names;
  while (std::getline(ss, token, ';')) {
    gr::Symbol s = parse_symbol(token, g_k, g_n);
    names.push_back(token);
    waypoints.push_back(gr::cell_center(s, d));
  }
  if (waypoints.size() < 2)
    throw CLI::ValidationError("--path", "need at least two cells");
  auto events = gr::blowup_scan(g_k, d, waypoints, samples);
  Json j;
  j["schema"] = 1;
  j["k"] = g_k;
  j["n"] = g_n;
  j["path"] = names;
  j["samples"] = samples;
  Json evs = Json::array();
  for (const auto& e : events) evs.push_back(gr::to_json(e));
  j["crossings"] = evs;
  j["count"] = events.size();
  emit(j);
  return 0;
}

int cmd_kp_grid(double t3, const std::string& xr, const std::string& yr,
                double step) {
  auto [x_lo, x_hi] = parse_range(xr);
  auto [y_lo, y_hi] = parse_range(yr);
  gr::SpectralData d =
      gr::default_spectral(g_k, g_n, gr::kp_sign_vector(g_k, g_n));
  auto grid = gr::dominance_grid(g_k, d, t3, x_lo, x_hi, y_lo, y_hi, step);
  std::cout << gr::csv_grid(grid);
  return 0;
}

int cmd_verify(int max_n) {
  auto results = gr::run_all_checks(max_n);
  int failures = 0;
  for (const auto& r : results) {
    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << "(criterion "
              << r.criterion << ") " << r.name;
    if (!r.detail.empty()) std::cout << " -- " << r.detail;
    std::cout << "\n";
    if (!r.pass) ++failures;
  }
  std::cout << (failures == 0 ? "all checks passed"
                              : std::to_string(failures) + " check(s) failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"real Grassmannian cell complexes, cohomology and KP flows"};
  app.require_subcommand(1);

  bool twisted = false;
  std::string format = "json";
  bool text = false;
  bool oracle = false;
  int64_t q = 5;
  std::string path;
  int samples = 4096;
  bool all_plus = false;
  double t3 = 0.0, step = 0.5;
  std::string xr = "-10:10", yr = "-10:10";
  int max_n = 0;
  std::string source = "closed";

  auto* cells = app.add_subcommand("cells", "list Schubert cells");
  add_kn(cells);
  cells->add_flag("--text", text, "plain text instead of JSON");

  auto* graph = app.add_subcommand("graph", "incidence graph");
  add_kn(graph);
  graph->add_flag("--twisted", twisted, "twisted coefficient system");
  graph->add_option("--format", format, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}));

  auto* coh = app.add_subcommand("cohomology", "integral cohomology table");
  add_kn(coh);
  coh->add_flag("--twisted", twisted, "twisted coefficient system");

  auto* hom = app.add_subcommand("homology", "integral homology via duality");
  add_kn(hom);

  auto* poin = app.add_subcommand("poincare", "Betti polynomial closed form");
  add_kn(poin);
  poin->add_flag("--twisted", twisted, "twisted coefficient system");

  auto* pp = app.add_subcommand("ppoly", "blow-up polynomial");
  add_kn(pp);
  pp->add_flag("--twisted", twisted, "twisted coefficient system");
  pp->add_option("--source", source, "closed form or graph alternating sum")
      ->check(CLI::IsMember({"closed", "graph"}));

  auto* fq = app.add_subcommand("fq", "finite-field point counts");
  add_kn(fq);
  fq->add_flag("--oracle", oracle, "run the exhaustive enumeration oracle");
  fq->add_option("--q", q, "field size (prime, 1 mod 4)");

  auto* scan = app.add_subcommand("kp-scan", "tau sign changes along a path");
  add_kn(scan);
  scan->add_option("--path", path,
                   "semicolon-separated cells, e.g. 1-3;2-3;2-4")
      ->required();
  scan->add_option("--samples", samples, "samples per segment");
  scan->add_flag("--all-plus", all_plus, "use the all-plus sign vector");

  auto* grid = app.add_subcommand("kp-grid", "dominant-cell grid as CSV");
  add_kn(grid);
  grid->add_option("--t3", t3, "fixed third time");
  grid->add_option("--x", xr, "x range LO:HI");
  grid->add_option("--y", yr, "y range LO:HI");
  grid->add_option("--step", step, "grid spacing");

  auto* ver = app.add_subcommand("verify", "run the full invariant suite");
  ver->add_option("--max-n", max_n,
                  "trim the sweep bounds (0 = documented defaults)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(cells)) return cmd_cells(text);
    if (app.got_subcommand(graph)) return cmd_graph(twisted, format);
    if (app.got_subcommand(coh)) return cmd_cohomology(twisted);
    if (app.got_subcommand(hom)) return cmd_homology();
    if (app.got_subcommand(poin)) return cmd_poincare(twisted);
    if (app.got_subcommand(pp)) return cmd_ppoly(twisted, source);
    if (app.got_subcommand(fq)) return cmd_fq(oracle, q);
    if (app.got_subcommand(scan)) return cmd_kp_scan(path, samples, all_plus);
    if (app.got_subcommand(grid)) return cmd_kp_grid(t3, xr, yr, step);
    if (app.got_subcommand(ver)) return cmd_verify(max_n);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
