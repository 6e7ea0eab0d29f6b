#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ohg/error.hpp"

namespace ohg {

/// A value in {+1, -1}: incidence orientations, edge signs, switching labels.
enum class Sign : std::int8_t { negative = -1, positive = 1 };

constexpr int value(Sign s) noexcept { return static_cast<int>(s); }
constexpr Sign operator*(Sign a, Sign b) noexcept {
  return a == b ? Sign::positive : Sign::negative;
}
constexpr Sign operator-(Sign s) noexcept {
  return s == Sign::positive ? Sign::negative : Sign::positive;
}
constexpr Sign& operator*=(Sign& a, Sign b) noexcept { return a = a * b; }
constexpr Sign sign_of(int v) noexcept { return v < 0 ? Sign::negative : Sign::positive; }
/// (-1)^p
constexpr Sign parity_sign(std::size_t p) noexcept {
  return p % 2 == 0 ? Sign::positive : Sign::negative;
}

// Vertex and edge ids are dense 0-based indices. Text formats and reports use
// the 1-based label `id + 1` for vertices.
using VertexId = std::size_t;
using EdgeId = std::size_t;

struct Incidence {
  EdgeId edge;
  VertexId vertex;
  Sign orientation;
  friend bool operator==(const Incidence&, const Incidence&) = default;
};

/// Underlying hypergraph: vertex count plus an ordered list of edges, each a
/// set of vertices stored in increasing order.
class Hypergraph {
 public:
  Hypergraph() = default;

  /// Precondition: every edge is nonempty, sorted, duplicate free and in range.
  Hypergraph(std::size_t n, std::vector<std::vector<VertexId>> edges,
             std::vector<std::string> names)
      : n_(n), edges_(std::move(edges)), names_(std::move(names)), incident_(n) {
    names_.resize(edges_.size());
    for (EdgeId e = 0; e < edges_.size(); ++e) {
      if (names_[e].empty()) names_[e] = "e" + std::to_string(e + 1);
      for (VertexId v : edges_[e]) incident_[v].push_back(e);
    }
  }

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::span<const VertexId> edge(EdgeId e) const {
    check_edge(e);
    return edges_[e];
  }
  const std::string& edge_name(EdgeId e) const {
    check_edge(e);
    return names_[e];
  }
  std::size_t edge_size(EdgeId e) const { return edge(e).size(); }

  /// Edges incident to v, in increasing edge order.
  std::span<const EdgeId> edges_of(VertexId v) const {
    check_vertex(v);
    return incident_[v];
  }
  std::size_t degree(VertexId v) const { return edges_of(v).size(); }

  /// Position of v inside edge e, if incident.
  std::optional<std::size_t> position(EdgeId e, VertexId v) const {
    const auto& members = edges_[e];
    auto it = std::lower_bound(members.begin(), members.end(), v);
    if (it == members.end() || *it != v) return std::nullopt;
    return static_cast<std::size_t>(it - members.begin());
  }
  bool contains(EdgeId e, VertexId v) const {
    check_edge(e);
    return position(e, v).has_value();
  }

  std::size_t incidence_count() const noexcept {
    std::size_t total = 0;
    for (const auto& e : edges_) total += e.size();
    return total;
  }

  /// k when every edge has exactly k vertices; nullopt for mixed sizes or no edges.
  std::optional<std::size_t> uniformity() const noexcept {
    if (edges_.empty()) return std::nullopt;
    const std::size_t k = edges_.front().size();
    for (const auto& e : edges_)
      if (e.size() != k) return std::nullopt;
    return k;
  }

  /// Same vertex count and the same vertex set for every edge index. Names ignored.
  bool same_structure(const Hypergraph& other) const noexcept {
    return n_ == other.n_ && edges_ == other.edges_;
  }

  void check_vertex(VertexId v) const {
    if (v >= n_) throw Error(ErrorCode::unknown_vertex, "vertex " + std::to_string(v + 1));
  }
  void check_edge(EdgeId e) const {
    if (e >= edges_.size())
      throw Error(ErrorCode::unknown_edge, "edge index " + std::to_string(e), e);
  }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<VertexId>> edges_;
  std::vector<std::string> names_;
  std::vector<std::vector<EdgeId>> incident_;
};

/// One edge as written by a user: optional name plus signed 1-based vertex
/// labels, `+v` for orientation +1 and `-v` for -1.
struct EdgeSpec {
  std::string name;
  std::vector<std::int64_t> labels;
};

/// A hypergraph together with an orientation of every incidence.
class OrientedHypergraph {
 public:
  OrientedHypergraph() = default;

  /// Orientations are aligned with `structure.edge(e)`.
  OrientedHypergraph(Hypergraph structure, std::vector<std::vector<Sign>> orientations)
      : structure_(std::move(structure)), orientation_(std::move(orientations)) {
    if (orientation_.size() != structure_.edge_count())
      throw Error(ErrorCode::dimension_mismatch, "orientation table does not match edge count");
    for (EdgeId e = 0; e < orientation_.size(); ++e)
      if (orientation_[e].size() != structure_.edge_size(e))
        throw Error(ErrorCode::dimension_mismatch, "orientation row size mismatch", e);
  }

  const Hypergraph& structure() const noexcept { return structure_; }
  std::size_t vertex_count() const noexcept { return structure_.vertex_count(); }
  std::size_t edge_count() const noexcept { return structure_.edge_count(); }

  std::span<const Sign> orientations(EdgeId e) const {
    structure_.check_edge(e);
    return orientation_[e];
  }

  /// sigma(e, v); throws NotAdjacentInEdge when v is not in e.
  Sign orientation(EdgeId e, VertexId v) const {
    structure_.check_edge(e);
    structure_.check_vertex(v);
    auto pos = structure_.position(e, v);
    if (!pos)
      throw Error(ErrorCode::not_adjacent_in_edge,
                  "vertex " + std::to_string(v + 1) + " is not in edge " + structure_.edge_name(e), e);
    return orientation_[e][*pos];
  }

  std::vector<Incidence> incidences() const {
    std::vector<Incidence> out;
    out.reserve(structure_.incidence_count());
    for (EdgeId e = 0; e < edge_count(); ++e) {
      auto members = structure_.edge(e);
      for (std::size_t i = 0; i < members.size(); ++i)
        out.push_back({e, members[i], orientation_[e][i]});
    }
    return out;
  }

  friend bool operator==(const OrientedHypergraph&, const OrientedHypergraph&) = default;

 private:
  Hypergraph structure_;
  std::vector<std::vector<Sign>> orientation_;
};

/// A hypergraph together with a sign gamma(e) on every edge.
class SignedHypergraph {
 public:
  SignedHypergraph() = default;
  SignedHypergraph(Hypergraph structure, std::vector<Sign> gamma)
      : structure_(std::move(structure)), gamma_(std::move(gamma)) {
    if (gamma_.size() != structure_.edge_count())
      throw Error(ErrorCode::dimension_mismatch, "edge sign vector does not match edge count");
  }

  /// Every edge carries the same sign.
  static SignedHypergraph uniform(const Hypergraph& structure, Sign s) {
    return {structure, std::vector<Sign>(structure.edge_count(), s)};
  }

  const Hypergraph& structure() const noexcept { return structure_; }
  std::size_t vertex_count() const noexcept { return structure_.vertex_count(); }
  std::size_t edge_count() const noexcept { return structure_.edge_count(); }
  Sign gamma(EdgeId e) const {
    structure_.check_edge(e);
    return gamma_[e];
  }
  std::span<const Sign> gammas() const noexcept { return gamma_; }

  friend bool operator==(const SignedHypergraph&, const SignedHypergraph&) = default;

 private:
  Hypergraph structure_;
  std::vector<Sign> gamma_;
};

/// Validates and builds an oriented hypergraph on vertices 1..n. Edge order is
/// preserved; members of an edge are stored sorted by vertex.
inline OrientedHypergraph build(std::size_t n, const std::vector<EdgeSpec>& specs) {
  std::vector<std::vector<VertexId>> edges;
  std::vector<std::vector<Sign>> orientations;
  std::vector<std::string> names;
  edges.reserve(specs.size());
  for (std::size_t e = 0; e < specs.size(); ++e) {
    const auto& spec = specs[e];
    const std::string label = spec.name.empty() ? "#" + std::to_string(e + 1) : spec.name;
    if (spec.labels.empty()) throw Error(ErrorCode::empty_edge, "edge " + label + " is empty", e);
    std::vector<std::pair<VertexId, Sign>> members;
    for (std::int64_t l : spec.labels) {
      const std::uint64_t mag = l < 0 ? static_cast<std::uint64_t>(-l) : static_cast<std::uint64_t>(l);
      if (mag == 0 || mag > n)
        throw Error(ErrorCode::vertex_out_of_range,
                    "vertex " + std::to_string(mag) + " in edge " + label + " outside 1.." + std::to_string(n), e);
      members.emplace_back(static_cast<VertexId>(mag - 1), l < 0 ? Sign::negative : Sign::positive);
    }
    std::sort(members.begin(), members.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < members.size(); ++i)
      if (members[i].first == members[i - 1].first)
        throw Error(ErrorCode::duplicate_vertex_in_edge,
                    "vertex " + std::to_string(members[i].first + 1) + " repeated in edge " + label, e);
    std::vector<VertexId> vs;
    std::vector<Sign> os;
    for (auto [v, s] : members) {
      vs.push_back(v);
      os.push_back(s);
    }
    edges.push_back(std::move(vs));
    orientations.push_back(std::move(os));
    names.push_back(spec.name);
  }
  return {Hypergraph(n, std::move(edges), std::move(names)), std::move(orientations)};
}

/// Convenience overload: anonymous edges given as signed label lists.
inline OrientedHypergraph build(std::size_t n, const std::vector<std::vector<std::int64_t>>& edges) {
  std::vector<EdgeSpec> specs;
  specs.reserve(edges.size());
  for (const auto& labels : edges) specs.push_back({"", labels});
  return build(n, specs);
}

/// sgn e = (-1)^{|e|-1} * prod_{v in e} sigma(e, v).
inline Sign edge_sign(const OrientedHypergraph& g, EdgeId e) {
  auto os = g.orientations(e);
  Sign s = parity_sign(os.size() - 1);
  for (Sign o : os) s *= o;
  return s;
}

/// sgn(u, v; e) = -sigma(e, u) sigma(e, v).
inline Sign adjacency_sign(const OrientedHypergraph& g, VertexId u, VertexId v, EdgeId e) {
  g.structure().check_edge(e);
  if (u == v || u >= g.vertex_count() || v >= g.vertex_count() || !g.structure().contains(e, u) ||
      !g.structure().contains(e, v))
    throw Error(ErrorCode::not_adjacent_in_edge,
                "vertices " + std::to_string(u + 1) + "," + std::to_string(v + 1) +
                    " are not adjacent in edge " + g.structure().edge_name(e),
                e);
  return -(g.orientation(e, u) * g.orientation(e, v));
}

/// The signed hypergraph with gamma(e) = sgn e.
inline SignedHypergraph induced_signed(const OrientedHypergraph& g) {
  std::vector<Sign> gamma(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) gamma[e] = edge_sign(g, e);
  return {g.structure(), std::move(gamma)};
}

/// G^+: same structure, every orientation +1.
inline OrientedHypergraph all_positive_variant(const Hypergraph& structure) {
  std::vector<std::vector<Sign>> os(structure.edge_count());
  for (EdgeId e = 0; e < structure.edge_count(); ++e)
    os[e].assign(structure.edge_size(e), Sign::positive);
  return {structure, std::move(os)};
}
inline OrientedHypergraph all_positive_variant(const OrientedHypergraph& g) {
  return all_positive_variant(g.structure());
}

/// Number of edges with a single vertex; reports flag them since they are
/// degenerate under the balance definition.
inline std::size_t singleton_edge_count(const Hypergraph& h) {
  std::size_t count = 0;
  for (EdgeId e = 0; e < h.edge_count(); ++e) count += h.edge_size(e) == 1;
  return count;
}

}  // namespace ohg
