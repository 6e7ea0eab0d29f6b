#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <queue>
#include <string>
#include <vector>

#include "ohg/core.hpp"

namespace ohg {

enum class ElementKind : std::uint8_t { vertex = 0, edge = 1 };

/// An element of V(G) u E(G). Vertices order before edges.
struct Element {
  ElementKind kind;
  std::size_t index;

  static constexpr Element vertex(VertexId v) { return {ElementKind::vertex, v}; }
  static constexpr Element edge(EdgeId e) { return {ElementKind::edge, e}; }
  bool is_vertex() const noexcept { return kind == ElementKind::vertex; }

  friend auto operator<=>(const Element&, const Element&) = default;
  friend bool operator==(const Element&, const Element&) = default;
};

/// Alternating vertex/edge sequence a0, a1, ..., at. The incidence between
/// consecutive elements is implied, since a vertex occurs in an edge at most once.
struct Walk {
  std::vector<Element> elements;

  std::size_t length() const noexcept { return elements.empty() ? 0 : elements.size() - 1; }
  friend bool operator==(const Walk&, const Walk&) = default;
};

/// Nodes of the incidence graph: vertices 0..n-1 followed by edges n..n+m-1.
class IncidenceGraph {
 public:
  explicit IncidenceGraph(const Hypergraph& h) : n_(h.vertex_count()), adj_(h.vertex_count() + h.edge_count()) {
    for (EdgeId e = 0; e < h.edge_count(); ++e)
      for (VertexId v : h.edge(e)) {
        adj_[v].push_back(n_ + e);
        adj_[n_ + e].push_back(v);
      }
    for (auto& row : adj_) std::sort(row.begin(), row.end());
  }

  std::size_t node_count() const noexcept { return adj_.size(); }
  const std::vector<std::size_t>& neighbours(std::size_t node) const { return adj_[node]; }
  std::size_t node(Element a) const { return a.is_vertex() ? a.index : n_ + a.index; }
  Element element(std::size_t node) const {
    return node < n_ ? Element::vertex(node) : Element::edge(node - n_);
  }

 private:
  std::size_t n_;
  std::vector<std::vector<std::size_t>> adj_;
};

namespace detail {

inline bool element_in_range(const Hypergraph& h, Element a) {
  return a.is_vertex() ? a.index < h.vertex_count() : a.index < h.edge_count();
}

}  // namespace detail

/// The incidences traversed by `walk`; throws InvalidWalk if the sequence does
/// not alternate or a step is not an incidence of g.
inline std::vector<Incidence> walk_incidences(const Walk& walk, const OrientedHypergraph& g) {
  const auto& h = g.structure();
  if (walk.elements.empty()) throw Error(ErrorCode::invalid_walk, "empty walk");
  for (Element a : walk.elements)
    if (!detail::element_in_range(h, a)) throw Error(ErrorCode::invalid_walk, "element out of range");
  std::vector<Incidence> out;
  out.reserve(walk.length());
  for (std::size_t j = 1; j < walk.elements.size(); ++j) {
    Element a = walk.elements[j - 1], b = walk.elements[j];
    if (a.kind == b.kind) throw Error(ErrorCode::invalid_walk, "consecutive elements of the same kind");
    const EdgeId e = a.is_vertex() ? b.index : a.index;
    const VertexId v = a.is_vertex() ? a.index : b.index;
    if (!h.contains(e, v))
      throw Error(ErrorCode::invalid_walk,
                  "vertex " + std::to_string(v + 1) + " not incident to " + h.edge_name(e), e);
    out.push_back({e, v, g.orientation(e, v)});
  }
  return out;
}

/// sigma_I(P): product of the orientations of the walk's incidences.
inline Sign incidence_sign_of(const Walk& walk, const OrientedHypergraph& g) {
  Sign s = Sign::positive;
  for (const auto& i : walk_incidences(walk, g)) s *= i.orientation;
  return s;
}

/// sigma_A(P) = (-1)^{floor(t/2)} sigma_I(P).
inline Sign adjacency_sign_of(const Walk& walk, const OrientedHypergraph& g) {
  return parity_sign(walk.length() / 2) * incidence_sign_of(walk, g);
}

namespace detail {

inline bool distinct_incidences(const std::vector<Incidence>& is) {
  std::vector<std::pair<EdgeId, VertexId>> keys;
  for (const auto& i : is) keys.emplace_back(i.edge, i.vertex);
  std::sort(keys.begin(), keys.end());
  return std::adjacent_find(keys.begin(), keys.end()) == keys.end();
}

inline bool distinct_elements(std::vector<Element> xs) {
  std::sort(xs.begin(), xs.end());
  return std::adjacent_find(xs.begin(), xs.end()) == xs.end();
}

}  // namespace detail

inline bool is_path(const Walk& walk, const OrientedHypergraph& g) {
  try {
    auto is = walk_incidences(walk, g);
    return detail::distinct_elements(walk.elements) && detail::distinct_incidences(is);
  } catch (const Error&) {
    return false;
  }
}

inline bool is_cycle(const Walk& walk, const OrientedHypergraph& g) {
  if (walk.elements.size() < 3 || walk.elements.front() != walk.elements.back()) return false;
  try {
    auto is = walk_incidences(walk, g);
    std::vector<Element> inner(walk.elements.begin(), walk.elements.end() - 1);
    return detail::distinct_elements(inner) && detail::distinct_incidences(is);
  } catch (const Error&) {
    return false;
  }
}

/// Canonical form of a closed walk: the lexicographically smallest of all
/// rotations in both directions, written with a0 == at.
inline Walk canonical_cycle(const Walk& cycle) {
  if (cycle.elements.size() < 2) return cycle;
  std::vector<Element> ring(cycle.elements.begin(), cycle.elements.end() - 1);
  const std::size_t len = ring.size();
  std::vector<Element> best;
  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t start = 0; start < len; ++start) {
      std::vector<Element> cand(len);
      for (std::size_t j = 0; j < len; ++j)
        cand[j] = dir == 0 ? ring[(start + j) % len] : ring[(start + len - j) % len];
      if (best.empty() || cand < best) best = std::move(cand);
    }
  }
  best.push_back(best.front());
  return {std::move(best)};
}

/// Connected components of the incidence graph, labelled in order of their
/// smallest element.
struct Components {
  std::size_t count = 0;
  std::vector<std::size_t> vertex_component;
  std::vector<std::size_t> edge_component;
};

inline Components connected_components(const Hypergraph& h) {
  IncidenceGraph ig(h);
  std::vector<std::size_t> comp(ig.node_count(), SIZE_MAX);
  std::size_t count = 0;
  for (std::size_t s = 0; s < ig.node_count(); ++s) {
    if (comp[s] != SIZE_MAX) continue;
    std::queue<std::size_t> q;
    q.push(s);
    comp[s] = count;
    while (!q.empty()) {
      auto a = q.front();
      q.pop();
      for (auto b : ig.neighbours(a))
        if (comp[b] == SIZE_MAX) {
          comp[b] = count;
          q.push(b);
        }
    }
    ++count;
  }
  Components c;
  c.count = count;
  c.vertex_component.assign(comp.begin(), comp.begin() + static_cast<std::ptrdiff_t>(h.vertex_count()));
  c.edge_component.assign(comp.begin() + static_cast<std::ptrdiff_t>(h.vertex_count()), comp.end());
  return c;
}

/// True iff the incidence graph on V u E is connected. An empty hypergraph
/// and a single isolated vertex count as connected.
inline bool is_connected(const Hypergraph& h) { return connected_components(h).count <= 1; }

struct SignedCycle {
  Walk cycle;
  Sign sign;
};

struct CycleEnumeration {
  std::vector<SignedCycle> cycles;
  bool truncated = false;
};

/// All simple cycles of the incidence graph with their incidence signs, in
/// canonical form. Exponential in the worst case: a test oracle for small
/// instances. Stops after `max_count` cycles or `max_steps` DFS expansions.
inline CycleEnumeration enumerate_cycles(const OrientedHypergraph& g, std::size_t max_count,
                                         std::size_t max_steps = 50'000'000) {
  IncidenceGraph ig(g.structure());
  CycleEnumeration out;
  std::size_t steps = 0;
  std::vector<std::size_t> path;
  std::vector<char> on_path(ig.node_count(), 0);

  // Cycles are rooted at their smallest node; the second node must be smaller
  // than the last so each cycle is recorded in one direction only.
  auto dfs = [&](auto&& self, std::size_t root, std::size_t a) -> bool {
    for (auto b : ig.neighbours(a)) {
      if (++steps > max_steps) return false;
      if (b == root && path.size() >= 3) {
        if (path[1] < path.back()) {
          Walk w;
          for (auto node : path) w.elements.push_back(ig.element(node));
          w.elements.push_back(ig.element(root));
          out.cycles.push_back({canonical_cycle(w), incidence_sign_of(w, g)});
          if (out.cycles.size() >= max_count) return false;
        }
        continue;
      }
      if (b <= root || on_path[b]) continue;
      on_path[b] = 1;
      path.push_back(b);
      const bool go_on = self(self, root, b);
      path.pop_back();
      on_path[b] = 0;
      if (!go_on) return false;
    }
    return true;
  };

  for (std::size_t root = 0; root < ig.node_count(); ++root) {
    path.assign(1, root);
    on_path[root] = 1;
    const bool go_on = dfs(dfs, root, root);
    on_path[root] = 0;
    if (!go_on) {
      out.truncated = true;
      break;
    }
  }
  return out;
}

struct PathSignReport {
  bool consistent = true;
  std::size_t paths = 0;
  bool truncated = false;
};

/// Enumerates simple a-b paths and checks they share one incidence sign.
inline PathSignReport paths_sign_consistent(const OrientedHypergraph& g, Element a, Element b,
                                            std::size_t max_paths) {
  const auto& h = g.structure();
  if (!detail::element_in_range(h, a) || !detail::element_in_range(h, b))
    throw Error(ErrorCode::invalid_walk, "element out of range");
  IncidenceGraph ig(h);
  const std::size_t src = ig.node(a), dst = ig.node(b);
  auto comps = connected_components(h);
  auto comp_of = [&](Element x) {
    return x.is_vertex() ? comps.vertex_component[x.index] : comps.edge_component[x.index];
  };
  if (comp_of(a) != comp_of(b))
    throw Error(ErrorCode::disconnected_pair, "no walk joins the two elements");

  PathSignReport rep;
  if (src == dst) {
    rep.paths = 1;
    return rep;
  }
  std::vector<char> on_path(ig.node_count(), 0);
  std::optional<Sign> first;
  auto sign_at = [&](std::size_t x, std::size_t y) {
    Element ex = ig.element(x), ey = ig.element(y);
    EdgeId e = ex.is_vertex() ? ey.index : ex.index;
    VertexId v = ex.is_vertex() ? ex.index : ey.index;
    return g.orientation(e, v);
  };
  auto dfs = [&](auto&& self, std::size_t x, Sign acc) -> bool {
    for (auto y : ig.neighbours(x)) {
      if (on_path[y]) continue;
      Sign s = acc * sign_at(x, y);
      if (y == dst) {
        ++rep.paths;
        if (!first) first = s;
        else if (*first != s) rep.consistent = false;
        if (rep.paths >= max_paths) return false;
        continue;
      }
      on_path[y] = 1;
      const bool go_on = self(self, y, s);
      on_path[y] = 0;
      if (!go_on) return false;
    }
    return true;
  };
  on_path[src] = 1;
  rep.truncated = !dfs(dfs, src, Sign::positive);
  return rep;
}

}  // namespace ohg
