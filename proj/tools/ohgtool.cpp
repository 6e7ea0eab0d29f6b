// ohgtool: balance, spectra and tensor criteria for oriented hypergraphs.
//
// Exit codes: 0 success, 2 bad input, 3 internal disagreement.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ohg/ohg.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_input = 2;
constexpr int exit_disagreement = 3;

using nlohmann::json;

struct Common {
  std::string file;
  bool as_json = false;
  double tol = ohg::linalg::default_abs_tol;
  std::uint64_t seed = 0x5eed;
  std::size_t max_cycles = ohg::BatteryLimits{}.max_cycles;

  ohg::report::Settings settings() const {
    ohg::report::Settings s;
    s.spectral.abs = tol;
    s.seed = seed;
    s.limits.max_cycles = max_cycles;
    return s;
  }
};

void add_common(CLI::App* cmd, Common& c, bool needs_file) {
  if (needs_file) cmd->add_option("file", c.file, "instance file (.ohg text or JSON mirror)")->required();
  cmd->add_flag("--json", c.as_json, "emit a JSON report");
  cmd->add_option("--tol", c.tol, "spectral membership tolerance (absolute)")->capture_default_str();
  cmd->add_option("--seed", c.seed, "master seed")->capture_default_str();
  cmd->add_option("--max-cycles", c.max_cycles, "cycle enumeration budget")->capture_default_str();
}

std::string join(const std::vector<std::size_t>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i] + 1;
  return os.str();
}

std::string describe_walk(const ohg::Hypergraph& h, const ohg::Walk& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.elements.size(); ++i) {
    auto a = w.elements[i];
    os << (i ? " " : "") << (a.is_vertex() ? "v" + std::to_string(a.index + 1) : h.edge_name(a.index));
  }
  return os.str();
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_check(const Common& c, bool battery) {
  const auto g = ohg::io::parse_file(c.file);
  const auto s = c.settings();
  const auto v = ohg::incidence_balance(g);
  json rep = ohg::report::envelope(g.structure(), s);
  rep["verdict"] = ohg::report::verdict(g, v);
  bool ok = ohg::verdict_is_sound(g, v);
  std::optional<ohg::BalanceBattery> bat;
  if (battery) {
    bat = ohg::equivalence_battery(g, s.limits);
    json st = json::array();
    for (bool b : bat->statements) st.push_back(b);
    rep["battery"] = {{"statements", st}, {"agree", bat->agree()}};
    ok = ok && bat->agree();
  }
  if (c.as_json) {
    emit(rep);
  } else if (const auto* b = std::get_if<ohg::Balanced>(&v)) {
    std::cout << "balanced\n  X = {" << join(b->x) << "}\n  Y = {" << join(b->y) << "}"
              << (b->trivial() ? "  (trivial bipartition)" : "") << "\n  switch vertices {"
              << join(b->certificate.vertices) << "} edges {" << join(b->certificate.edges) << "}\n";
  } else {
    std::cout << "unbalanced\n  negative cycle: " << describe_walk(g.structure(), std::get<ohg::Unbalanced>(v).cycle)
              << '\n';
  }
  if (!c.as_json && bat) std::cout << "  battery " << (bat->agree() ? "agrees" : "DISAGREES") << '\n';
  if (ohg::singleton_edge_count(g.structure()) > 0 && !c.as_json)
    std::cout << "  note: " << ohg::singleton_edge_count(g.structure()) << " singleton edge(s)\n";
  return ok ? exit_ok : exit_disagreement;
}

int cmd_spectra(const Common& c) {
  const auto g = ohg::io::parse_file(c.file);
  const auto s = c.settings();
  const auto tests = ohg::spectral_balance_tests(g, s.spectral);
  const bool balanced = ohg::is_balanced(ohg::incidence_balance(g));
  json rep = ohg::report::envelope(g.structure(), s);
  rep["balanced"] = balanced;
  rep["spectra"] = {
      {"M_singular_values", ohg::linalg::singular_values(ohg::incidence_matrix(g), s.spectral.jacobi)},
      {"A_eigenvalues", ohg::linalg::sym_eigenvalues(ohg::adjacency_matrix(g), s.spectral.jacobi)},
      {"L_eigenvalues", ohg::linalg::sym_eigenvalues(ohg::laplacian_matrix(g), s.spectral.jacobi)},
  };
  rep["tests"] = ohg::report::spectral(tests, balanced);
  bool contradiction = false;
  for (const auto& r : tests.reports)
    contradiction = contradiction || ohg::compare_with_structure(r, balanced) == ohg::SpectralAgreement::contradiction;
  if (c.as_json) {
    emit(rep);
  } else {
    std::cout << (balanced ? "balanced" : "unbalanced") << '\n';
    for (const auto& r : tests.reports)
      std::cout << "  " << ohg::to_string(r.criterion) << ": target " << r.target << " "
                << (r.decision ? "in" : "not in") << " spectrum (margin " << r.margin << ") "
                << ohg::to_string(ohg::compare_with_structure(r, balanced)) << '\n';
  }
  return contradiction ? exit_disagreement : exit_ok;
}

int cmd_tensor(const Common& c) {
  const auto g = ohg::io::parse_file(c.file);
  const auto s = c.settings();
  ohg::require_even_uniform(g.structure());
  const auto signed_g = ohg::induced_signed(g);
  const auto nqz = ohg::nqz_spectral_radius(g.structure(), s.nqz);
  const auto ob = ohg::odd_bipartite(g.structure());
  ohg::TensorBatteryOptions opt;
  opt.nqz = s.nqz;
  opt.seed = s.seed;
  const auto bat = ohg::theorem_battery_even(signed_g, opt);
  json rep = ohg::report::envelope(g.structure(), s);
  rep["nqz"] = {{"rho", nqz.rho}, {"iterations", nqz.iterations}, {"perron", nqz.perron}};
  rep["odd_bipartite"] = ohg::report::odd_bipartite_json(ob);
  rep["battery"] = ohg::report::tensor_battery(bat);
  rep["incidence_balanced"] = ohg::is_balanced(ohg::incidence_balance(g));
  if (c.as_json) {
    emit(rep);
  } else {
    std::cout << "rho = " << nqz.rho << " (" << nqz.iterations << " iterations)\n"
              << "odd bipartite: " << (std::holds_alternative<ohg::OddBipartition>(ob) ? "yes" : "no") << '\n'
              << "battery:";
    for (bool b : bat.statements) std::cout << ' ' << (b ? "T" : "F");
    std::cout << (bat.agree() ? "  (agree)" : "  (DISAGREE)") << '\n';
  }
  return bat.agree() ? exit_ok : exit_disagreement;
}

int cmd_switch(const Common& c, const std::vector<std::size_t>& vertices, const std::vector<std::size_t>& edges,
               const std::string& out) {
  const auto g = ohg::io::parse_file(c.file);
  ohg::SwitchCertificate cert;
  for (auto v : vertices) {
    if (v == 0 || v > g.vertex_count())
      throw ohg::Error(ohg::ErrorCode::unknown_vertex, "vertex " + std::to_string(v) + " is not in the instance");
    cert.vertices.push_back(v - 1);
  }
  for (auto e : edges) {
    if (e == 0 || e > g.edge_count())
      throw ohg::Error(ohg::ErrorCode::unknown_edge, "edge " + std::to_string(e) + " is not in the instance");
    cert.edges.push_back(e - 1);
  }
  const auto switched = ohg::apply_switches(g, cert);
  const auto text = c.as_json ? ohg::io::serialize_json(switched) : ohg::io::serialize_text(switched);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) throw ohg::Error(ohg::ErrorCode::syntax_error, "cannot write " + out);
    f << text;
  }
  return exit_ok;
}

int cmd_gen(const Common& c, ohg::GenerateParams p, std::size_t k, const std::string& out) {
  if (k > 0) p.min_size = p.max_size = k;
  const auto g = ohg::generate(p, c.seed);
  const auto text = c.as_json ? ohg::io::serialize_json(g) : ohg::io::serialize_text(g);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) throw ohg::Error(ohg::ErrorCode::syntax_error, "cannot write " + out);
    f << text;
  }
  return exit_ok;
}

int cmd_battery(const Common& c, std::size_t count, std::size_t tensor_count, const std::string& fault_name) {
  ohg::OracleFault fault = ohg::OracleFault::none;
  if (fault_name == "cycle-signs") fault = ohg::OracleFault::cycle_signs;
  else if (fault_name == "spectral-target") fault = ohg::OracleFault::spectral_target;
  else if (fault_name == "parity-rhs") fault = ohg::OracleFault::parity_rhs;
  const auto sum = ohg::battery::run(count, tensor_count, c.seed, fault);
  json rep = {
      {"tool", ohg::report::tool_version},
      {"seed", c.seed},
      {"tolerances", ohg::report::tolerance_table(c.settings())},
      {"fault", fault_name},
      {"structural", {{"instances", sum.structural_instances},
                      {"failures", sum.structural_failures},
                      {"balanced", sum.balanced},
                      {"indeterminate", sum.indeterminate}}},
      {"tensor", {{"instances", sum.tensor_instances},
                  {"failures", sum.tensor_failures},
                  {"converse_witnesses", sum.converse_witnesses}}},
      {"failing_instances", sum.failures},
      {"clean", sum.clean()},
  };
  if (c.as_json) {
    emit(rep);
  } else {
    std::cout << "structural: " << sum.structural_instances << " instances, " << sum.structural_failures
              << " failures, " << sum.balanced << " balanced, " << sum.indeterminate << " indeterminate\n"
              << "tensor: " << sum.tensor_instances << " instances, " << sum.tensor_failures << " failures, "
              << sum.converse_witnesses << " all-true but unbalanced\n";
    for (const auto& f : sum.failures) std::cout << "  FAIL " << f << '\n';
  }
  return sum.clean() ? exit_ok : exit_disagreement;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Balance and switching equivalence of oriented hypergraphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ohg::report::tool_version));

  Common common;

  auto* check = app.add_subcommand("check", "decide incidence balance and print a certificate");
  add_common(check, common, true);
  bool with_battery = false;
  check->add_flag("--battery", with_battery, "also evaluate all five equivalent statements");

  auto* spectra = app.add_subcommand("spectra", "M/A/L spectra and the three spectral balance tests");
  add_common(spectra, common, true);

  auto* tensor = app.add_subcommand("tensor", "tensor criteria for even-uniform instances");
  add_common(tensor, common, true);

  auto* sw = app.add_subcommand("switch", "apply vertex and edge switchings");
  add_common(sw, common, true);
  std::vector<std::size_t> sw_vertices, sw_edges;
  std::string sw_out;
  sw->add_option("--vertices", sw_vertices, "vertices to switch (1-based)")->delimiter(',');
  sw->add_option("--edges", sw_edges, "edges to switch (1-based)")->delimiter(',');
  sw->add_option("-o,--out", sw_out, "output file (default stdout)");

  auto* gen = app.add_subcommand("gen", "write a random instance");
  add_common(gen, common, false);
  ohg::GenerateParams params;
  std::size_t k = 0;
  std::string gen_out;
  gen->add_option("-n,--vertices", params.n, "vertex count")->required();
  gen->add_option("-m,--edges", params.m, "edge count")->required();
  gen->add_option("-k,--uniformity", k, "fixed edge size (overrides --min-size/--max-size)");
  gen->add_option("--min-size", params.min_size)->capture_default_str();
  gen->add_option("--max-size", params.max_size)->capture_default_str();
  gen->add_option("--p-neg", params.p_neg, "probability of a negative incidence")->capture_default_str();
  gen->add_flag("--connected", params.connected, "grow a connected instance");
  gen->add_option("-o,--out", gen_out, "output file (default stdout)");

  auto* bat = app.add_subcommand("battery", "cross-validate every route on random ensembles");
  add_common(bat, common, false);
  std::size_t count = 200, tensor_count = 100;
  std::string fault = "none";
  bat->add_option("--count", count, "structural instances")->capture_default_str();
  bat->add_option("--tensor-count", tensor_count, "even-uniform instances")->capture_default_str();
  bat->add_option("--inject-fault", fault, "corrupt one oracle")
      ->check(CLI::IsMember({"none", "cycle-signs", "spectral-target", "parity-rhs"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? exit_ok : exit_input;
  }

  try {
    if (*check) return cmd_check(common, with_battery);
    if (*spectra) return cmd_spectra(common);
    if (*tensor) return cmd_tensor(common);
    if (*sw) return cmd_switch(common, sw_vertices, sw_edges, sw_out);
    if (*gen) return cmd_gen(common, params, k, gen_out);
    if (*bat) return cmd_battery(common, count, tensor_count, fault);
  } catch (const ohg::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_input;
  }
  return exit_input;
}
