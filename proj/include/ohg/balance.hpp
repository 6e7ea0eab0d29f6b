#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <queue>
#include <variant>
#include <vector>

#include "ohg/core.hpp"
#include "ohg/switching.hpp"
#include "ohg/walks.hpp"

namespace ohg {

/// Deliberate corruption of one cross-validation oracle. Used to prove that the
/// batteries notice a broken route.
enum class OracleFault { none, cycle_signs, spectral_target, parity_rhs };

/// l : V u E -> {+1, -1} with sigma(e, v) = l(e) l(v) on every incidence.
struct Labeling {
  std::vector<Sign> vertex;
  std::vector<Sign> edge;
};

struct Balanced {
  std::vector<VertexId> x;  ///< vertices labelled +1
  std::vector<VertexId> y;  ///< vertices labelled -1
  Labeling labeling;
  SwitchCertificate certificate;  ///< takes G^sigma to G^+

  bool trivial() const noexcept { return x.empty() || y.empty(); }
};

struct Unbalanced {
  Walk cycle;  ///< incidence sign -1
};

using BalanceVerdict = std::variant<Balanced, Unbalanced>;

inline bool is_balanced(const BalanceVerdict& v) noexcept { return std::holds_alternative<Balanced>(v); }

/// Decides incidence balance by BFS-labelling the signed incidence graph.
/// Each component's smallest vertex gets +1. On a conflict the fundamental
/// cycle through the offending incidence is returned in canonical form.
inline BalanceVerdict incidence_balance(const OrientedHypergraph& g) {
  const auto& h = g.structure();
  const std::size_t n = h.vertex_count(), m = h.edge_count();
  IncidenceGraph ig(h);
  std::vector<int> label(n + m, 0);
  std::vector<std::size_t> parent(n + m, SIZE_MAX), depth(n + m, 0);

  auto sign_between = [&](std::size_t a, std::size_t b) {
    const std::size_t v = std::min(a, b), e = std::max(a, b) - n;
    return value(g.orientation(e, v));
  };
  auto fundamental_cycle = [&](std::size_t a, std::size_t b) {
    std::vector<std::size_t> up_a{a}, up_b{b};
    std::size_t x = a, y = b;
    while (depth[x] > depth[y]) up_a.push_back(x = parent[x]);
    while (depth[y] > depth[x]) up_b.push_back(y = parent[y]);
    while (x != y) {
      up_a.push_back(x = parent[x]);
      up_b.push_back(y = parent[y]);
    }
    // up_a: a .. lca, up_b: b .. lca
    Walk w;
    for (auto node : up_a) w.elements.push_back(ig.element(node));
    for (auto it = up_b.rbegin() + 1; it != up_b.rend(); ++it) w.elements.push_back(ig.element(*it));
    w.elements.push_back(ig.element(a));
    return canonical_cycle(w);
  };

  for (std::size_t root = 0; root < n + m; ++root) {
    if (label[root] != 0) continue;
    label[root] = 1;
    std::queue<std::size_t> q;
    q.push(root);
    while (!q.empty()) {
      const auto a = q.front();
      q.pop();
      for (auto b : ig.neighbours(a)) {
        const int want = label[a] * sign_between(a, b);
        if (label[b] == 0) {
          label[b] = want;
          parent[b] = a;
          depth[b] = depth[a] + 1;
          q.push(b);
        } else if (label[b] != want) {
          return Unbalanced{fundamental_cycle(a, b)};
        }
      }
    }
  }

  Balanced out;
  out.labeling.vertex.resize(n);
  out.labeling.edge.resize(m);
  for (VertexId v = 0; v < n; ++v) {
    out.labeling.vertex[v] = sign_of(label[v]);
    (label[v] > 0 ? out.x : out.y).push_back(v);
    if (label[v] < 0) out.certificate.vertices.push_back(v);
  }
  for (EdgeId e = 0; e < m; ++e) {
    out.labeling.edge[e] = sign_of(label[n + e]);
    if (label[n + e] < 0) out.certificate.edges.push_back(e);
  }
  return out;
}

/// True iff every edge meets X only in incidences of one orientation p and Y
/// only in incidences of orientation -p. Empty parts are allowed.
inline bool verify_bipartition(const OrientedHypergraph& g, const std::vector<VertexId>& x,
                               const std::vector<VertexId>& y) {
  const auto& h = g.structure();
  std::vector<int> side(h.vertex_count(), 0);
  auto place = [&](const std::vector<VertexId>& part, int s) {
    for (auto v : part) {
      if (v >= h.vertex_count() || side[v] != 0)
        throw Error(ErrorCode::not_a_partition, "vertex " + std::to_string(v + 1) + " misplaced");
      side[v] = s;
    }
  };
  place(x, 1);
  place(y, -1);
  for (VertexId v = 0; v < h.vertex_count(); ++v)
    if (side[v] == 0) throw Error(ErrorCode::not_a_partition, "vertex " + std::to_string(v + 1) + " unassigned");
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    auto members = h.edge(e);
    auto os = g.orientations(e);
    const int p = side[members[0]] * value(os[0]);
    for (std::size_t i = 1; i < members.size(); ++i)
      if (side[members[i]] * value(os[i]) != p) return false;
  }
  return true;
}

/// Re-checks a verdict against its own certificate.
inline bool verdict_is_sound(const OrientedHypergraph& g, const BalanceVerdict& verdict) {
  if (const auto* b = std::get_if<Balanced>(&verdict)) {
    if (b->labeling.vertex.size() != g.vertex_count() || b->labeling.edge.size() != g.edge_count()) return false;
    for (const auto& i : g.incidences())
      if (b->labeling.edge[i.edge] * b->labeling.vertex[i.vertex] != i.orientation) return false;
    return verify_bipartition(g, b->x, b->y) &&
           apply_switches(g, b->certificate) == all_positive_variant(g);
  }
  const auto& u = std::get<Unbalanced>(verdict);
  return is_cycle(u.cycle, g) && incidence_sign_of(u.cycle, g) == Sign::negative;
}

struct BatteryLimits {
  std::size_t max_cycles = 200'000;
  std::size_t max_paths = 200'000;
  std::size_t exhaustive_vertex_limit = 20;
  OracleFault fault = OracleFault::none;
};

/// Outcome of evaluating the five balance statements independently:
/// (1) a balancing bipartition exists, (2) every cycle has positive incidence
/// sign, (3) all a-b paths share a sign, (4) the signed incidence graph is
/// balanced, (5) G^sigma is switching equivalent to G^+.
struct BalanceBattery {
  std::array<bool, 5> statements{};
  bool sound = true;  ///< verdict certificate re-verified
  BalanceVerdict verdict;

  bool agree() const noexcept {
    for (bool s : statements)
      if (s != statements[0]) return false;
    return sound;
  }
  /// 1-based number of the first statement that differs from statement 1.
  std::optional<std::size_t> first_discrepancy() const noexcept {
    for (std::size_t i = 1; i < statements.size(); ++i)
      if (statements[i] != statements[0]) return i + 1;
    return std::nullopt;
  }
};

inline BalanceBattery equivalence_battery(const OrientedHypergraph& g, const BatteryLimits& limits = {}) {
  const auto& h = g.structure();
  const std::size_t n = h.vertex_count();
  BalanceBattery rep{.statements = {}, .sound = true, .verdict = incidence_balance(g)};

  // (1) exhaustive search over bipartitions.
  if (n <= limits.exhaustive_vertex_limit) {
    bool found = false;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n) && !found; ++mask) {
      std::vector<VertexId> x, y;
      for (VertexId v = 0; v < n; ++v) ((mask >> v) & 1 ? y : x).push_back(v);
      found = verify_bipartition(g, x, y);
    }
    rep.statements[0] = found;
  } else if (const auto* b = std::get_if<Balanced>(&rep.verdict)) {
    rep.statements[0] = verify_bipartition(g, b->x, b->y);
  }

  // (2) cycle oracle.
  auto cycles = enumerate_cycles(g, limits.max_cycles);
  if (cycles.truncated) throw Error(ErrorCode::oracle_budget_exceeded, "cycle enumeration budget exceeded");
  bool all_positive = true;
  for (const auto& c : cycles.cycles) {
    Sign s = limits.fault == OracleFault::cycle_signs ? -c.sign : c.sign;
    all_positive = all_positive && s == Sign::positive;
  }
  rep.statements[1] = all_positive;

  // (3) path signs over every connected pair of elements.
  auto comps = connected_components(h);
  std::vector<Element> elems;
  for (VertexId v = 0; v < n; ++v) elems.push_back(Element::vertex(v));
  for (EdgeId e = 0; e < h.edge_count(); ++e) elems.push_back(Element::edge(e));
  auto comp_of = [&](Element x) {
    return x.is_vertex() ? comps.vertex_component[x.index] : comps.edge_component[x.index];
  };
  bool consistent = true;
  for (std::size_t i = 0; i < elems.size() && consistent; ++i)
    for (std::size_t j = i + 1; j < elems.size() && consistent; ++j) {
      if (comp_of(elems[i]) != comp_of(elems[j])) continue;
      auto r = paths_sign_consistent(g, elems[i], elems[j], limits.max_paths);
      if (r.truncated) throw Error(ErrorCode::oracle_budget_exceeded, "path enumeration budget exceeded");
      consistent = r.consistent;
    }
  rep.statements[2] = consistent;

  // (4) labelling of the signed incidence graph, certificate re-checked.
  rep.sound = verdict_is_sound(g, rep.verdict);
  rep.statements[3] = is_balanced(rep.verdict);

  // (5) switching equivalence to G^+.
  auto eq = oriented_switch_equivalent(g, all_positive_variant(g));
  if (const auto* cert = std::get_if<SwitchCertificate>(&eq)) {
    rep.statements[4] = apply_switches(g, *cert) == all_positive_variant(g);
  } else {
    const auto& cyc = std::get<OrientedNotEquivalent>(eq).cycle;
    rep.sound = rep.sound && is_cycle(cyc, g) && incidence_sign_of(cyc, g) == Sign::negative;
    rep.statements[4] = false;
  }
  return rep;
}

}  // namespace ohg
