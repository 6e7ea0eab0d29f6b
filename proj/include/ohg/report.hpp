#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "ohg/balance.hpp"
#include "ohg/core.hpp"
#include "ohg/spectral.hpp"
#include "ohg/switching.hpp"
#include "ohg/tensor.hpp"
#include "ohg/walks.hpp"

// JSON reports. Vertex and edge ids are 1-based; edges also carry their name.

namespace ohg::report {

using nlohmann::json;

inline constexpr const char* tool_version = "ohgtool 1.0.0";

struct Settings {
  SpectralTolerances spectral;
  NqzOptions nqz;
  BatteryLimits limits;
  std::uint64_t seed = 0x5eed;
};

inline json tolerance_table(const Settings& s) {
  return {
      {"jacobi_offdiag_rel", s.spectral.jacobi},
      {"jacobi_sweep_budget", linalg::default_sweep_budget},
      {"membership_abs", s.spectral.abs},
      {"membership_rel", s.spectral.rel},
      {"indeterminate_factor", 10.0},
      {"nqz_tol", s.nqz.tol},
      {"nqz_max_iters", s.nqz.max_iters},
      {"nqz_shift", s.nqz.shift},
      {"minus_rho_residual_factor", 10.0},
      {"similarity_tol", similarity_tol},
      {"max_cycles", s.limits.max_cycles},
      {"max_paths", s.limits.max_paths},
  };
}

inline json ids(const std::vector<std::size_t>& xs) {
  json out = json::array();
  for (auto x : xs) out.push_back(x + 1);
  return out;
}

inline json signs(const std::vector<Sign>& xs) {
  json out = json::array();
  for (auto s : xs) out.push_back(value(s));
  return out;
}

inline json summary(const Hypergraph& h) {
  const auto k = h.uniformity();
  return {
      {"n", h.vertex_count()},
      {"m", h.edge_count()},
      {"uniformity", k ? json(*k) : json(nullptr)},
      {"connected", is_connected(h)},
      {"singleton_edges", singleton_edge_count(h)},
  };
}

inline json element_json(const Hypergraph& h, Element a) {
  if (a.is_vertex()) return {{"vertex", a.index + 1}};
  return {{"edge", a.index + 1}, {"name", h.edge_name(a.index)}};
}

inline json walk_json(const Hypergraph& h, const Walk& w) {
  json out = json::array();
  for (auto a : w.elements) out.push_back(element_json(h, a));
  return out;
}

inline json certificate_json(const SwitchCertificate& c) {
  return {{"vertices", ids(c.vertices)}, {"edges", ids(c.edges)}};
}

inline json verdict(const OrientedHypergraph& g, const BalanceVerdict& v) {
  if (const auto* b = std::get_if<Balanced>(&v)) {
    return {
        {"balanced", true},
        {"X", ids(b->x)},
        {"Y", ids(b->y)},
        {"trivial_bipartition", b->trivial()},
        {"labeling", {{"vertices", signs(b->labeling.vertex)}, {"edges", signs(b->labeling.edge)}}},
        {"certificate", certificate_json(b->certificate)},
    };
  }
  const auto& u = std::get<Unbalanced>(v);
  return {
      {"balanced", false},
      {"cycle", walk_json(g.structure(), u.cycle)},
      {"cycle_sign", value(incidence_sign_of(u.cycle, g))},
  };
}

inline json spectral(const SpectralTests& t, const std::optional<bool>& balanced) {
  json out = json::array();
  for (const auto& r : t.reports) {
    json j = {
        {"criterion", std::string(to_string(r.criterion))},
        {"target", r.target},
        {"spectrum", r.spectrum},
        {"contains_target", r.decision},
        {"margin", r.margin},
        {"threshold", r.tolerances.threshold(r.target)},
    };
    if (balanced) j["agreement"] = std::string(to_string(compare_with_structure(r, *balanced)));
    out.push_back(std::move(j));
  }
  return out;
}

inline json parity_certificate(const ParityCertificate& c) {
  return {
      {"W", ids(c.w)},
      {"signature", signs(c.s)},
      {"eigenvalue", c.eigenvalue},
      {"eigenvector", c.eigenvector},
      {"residual", c.residual},
      {"residual_bound", c.residual_bound},
      {"exact", c.exact},
  };
}

inline json tensor_battery(const TensorBattery& b) {
  json st = json::array();
  for (bool s : b.statements) st.push_back(s);
  json out = {{"statements", st}, {"agree", b.agree()}, {"sound", b.sound}, {"rho", b.rho}};
  out["W"] = b.w ? ids(*b.w) : json(nullptr);
  out["minus_rho_certificate"] = b.minus_rho ? parity_certificate(*b.minus_rho) : json(nullptr);
  out["lap_zero_certificate"] = b.lap_zero ? parity_certificate(*b.lap_zero) : json(nullptr);
  return out;
}

inline json odd_bipartite_json(const OddBipartiteResult& r) {
  if (const auto* p = std::get_if<OddBipartition>(&r))
    return {{"odd_bipartite", true}, {"V1", ids(p->first)}, {"V2", ids(p->second)}};
  return {{"odd_bipartite", false}, {"witness_edges", ids(std::get<NotOddBipartite>(r).edges)}};
}

inline json envelope(const Hypergraph& h, const Settings& s) {
  return {{"tool", tool_version}, {"seed", s.seed}, {"tolerances", tolerance_table(s)}, {"instance", summary(h)}};
}

// -------------------------------------------------------------- re-checking

namespace detail {

inline std::vector<std::size_t> zero_based(const json& arr, std::size_t bound) {
  std::vector<std::size_t> out;
  for (const auto& x : arr) {
    const auto v = x.get<std::int64_t>();
    if (v < 1 || static_cast<std::size_t>(v) > bound) throw Error(ErrorCode::syntax_error, "id out of range");
    out.push_back(static_cast<std::size_t>(v - 1));
  }
  return out;
}

inline Walk walk_from(const json& arr, const Hypergraph& h) {
  Walk w;
  for (const auto& a : arr) {
    if (a.contains("vertex")) {
      w.elements.push_back(Element::vertex(zero_based(json::array({a["vertex"]}), h.vertex_count())[0]));
    } else {
      w.elements.push_back(Element::edge(zero_based(json::array({a.at("edge")}), h.edge_count())[0]));
    }
  }
  return w;
}

}  // namespace detail

/// Re-verifies a verdict object produced by `verdict` against g using only
/// the fields in the JSON.
inline bool verify_verdict(const OrientedHypergraph& g, const json& j) {
  try {
    const auto& h = g.structure();
    if (j.at("balanced").get<bool>()) {
      const auto x = detail::zero_based(j.at("X"), h.vertex_count());
      const auto y = detail::zero_based(j.at("Y"), h.vertex_count());
      SwitchCertificate c{detail::zero_based(j.at("certificate").at("vertices"), h.vertex_count()),
                          detail::zero_based(j.at("certificate").at("edges"), h.edge_count())};
      return verify_bipartition(g, x, y) && apply_switches(g, c) == all_positive_variant(g);
    }
    const auto w = detail::walk_from(j.at("cycle"), h);
    return is_cycle(w, g) && incidence_sign_of(w, g) == Sign::negative;
  } catch (const Error&) {
    return false;
  } catch (const json::exception&) {
    return false;
  }
}

/// Re-verifies a parity certificate: W solves the parity system and the
/// signature eigenvector meets its residual bound for the named operator.
inline bool verify_parity_certificate(const SignedHypergraph& g, const json& c, bool laplacian) {
  try {
    const auto w = detail::zero_based(c.at("W"), g.vertex_count());
    const auto sys = parity_system(g);
    linalg::BitVector x(g.vertex_count());
    for (auto v : w) x.set(v);
    if (!linalg::satisfies(sys, x)) return false;
    const auto s = signature(g.vertex_count(), w);
    if (laplacian) {
      for (auto r : lap_apply_signature(g, s))
        if (r != 0) return false;
      return true;
    }
    const auto vec = c.at("eigenvector").get<std::vector<double>>();
    if (vec.size() != g.vertex_count()) return false;
    for (std::size_t v = 0; v < vec.size(); ++v)
      if ((vec[v] < 0) != (s[v] == Sign::negative)) return false;
    return eigenpair_residual(g, c.at("eigenvalue").get<double>(), to_complex(vec)) <=
           c.at("residual_bound").get<double>();
  } catch (const Error&) {
    return false;
  } catch (const json::exception&) {
    return false;
  }
}

}  // namespace ohg::report
