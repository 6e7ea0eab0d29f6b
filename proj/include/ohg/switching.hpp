#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <queue>
#include <variant>
#include <vector>

#include "ohg/core.hpp"
#include "ohg/linalg.hpp"
#include "ohg/walks.hpp"

namespace ohg {

/// Vertex switchings at U and edge switchings at F. Both lists are sorted.
struct SwitchCertificate {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  bool empty() const noexcept { return vertices.empty() && edges.empty(); }
  friend bool operator==(const SwitchCertificate&, const SwitchCertificate&) = default;
};

/// Vertex switchings of a signed hypergraph at W.
struct SignedSwitchCertificate {
  std::vector<VertexId> vertices;
  friend bool operator==(const SignedSwitchCertificate&, const SignedSwitchCertificate&) = default;
};

/// Cycle of the incidence graph along which sigma * tau multiplies to -1.
struct OrientedNotEquivalent {
  Walk cycle;
};

/// Edges whose parity equations add up to 0 = 1.
struct SignedNotEquivalent {
  std::vector<EdgeId> edges;
};

using OrientedEquivalence = std::variant<SwitchCertificate, OrientedNotEquivalent>;
using SignedEquivalence = std::variant<SignedSwitchCertificate, SignedNotEquivalent>;

/// s_v = -1 exactly for v in `subset`.
inline std::vector<Sign> signature(std::size_t n, const std::vector<std::size_t>& subset) {
  std::vector<Sign> s(n, Sign::positive);
  for (auto v : subset) s.at(v) = Sign::negative;
  return s;
}

inline OrientedHypergraph apply_switches(const OrientedHypergraph& g, const SwitchCertificate& cert) {
  const auto& h = g.structure();
  for (auto v : cert.vertices) h.check_vertex(v);
  for (auto e : cert.edges) h.check_edge(e);
  // Duplicates cancel, matching repeated application of an involution.
  std::vector<Sign> t(g.vertex_count(), Sign::positive), s(g.edge_count(), Sign::positive);
  for (auto v : cert.vertices) t[v] = -t[v];
  for (auto e : cert.edges) s[e] = -s[e];
  std::vector<std::vector<Sign>> os(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto members = h.edge(e);
    auto cur = g.orientations(e);
    os[e].resize(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) os[e][i] = s[e] * cur[i] * t[members[i]];
  }
  return {h, std::move(os)};
}

inline OrientedHypergraph vertex_switch(const OrientedHypergraph& g, VertexId v) {
  return apply_switches(g, {{v}, {}});
}

inline OrientedHypergraph edge_switch(const OrientedHypergraph& g, EdgeId e) {
  return apply_switches(g, {{}, {e}});
}

/// Negates gamma(e) for every edge meeting W in an odd number of vertices.
inline SignedHypergraph apply_vertex_switches(const SignedHypergraph& g, const SignedSwitchCertificate& cert) {
  const auto& h = g.structure();
  std::vector<char> in_w(g.vertex_count(), 0);
  for (auto v : cert.vertices) {
    h.check_vertex(v);
    in_w[v] ^= 1;
  }
  std::vector<Sign> gamma(g.gammas().begin(), g.gammas().end());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    std::size_t hits = 0;
    for (auto v : h.edge(e)) hits += in_w[v];
    if (hits % 2 == 1) gamma[e] = -gamma[e];
  }
  return {h, std::move(gamma)};
}

namespace detail {

/// Union-find carrying the parity of each node relative to its parent.
class ParityUnionFind {
 public:
  explicit ParityUnionFind(std::size_t n) : parent_(n), parity_(n, 0), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  /// Root of x and the parity of x relative to it.
  std::pair<std::size_t, int> find(std::size_t x) {
    int p = 0;
    std::size_t r = x;
    while (parent_[r] != r) {
      p ^= parity_[r];
      r = parent_[r];
    }
    // Path compression keeping parities consistent.
    int acc = p;
    while (parent_[x] != x) {
      const std::size_t next = parent_[x];
      const int px = parity_[x];
      parent_[x] = r;
      parity_[x] = acc;
      acc ^= px;
      x = next;
    }
    return {r, p};
  }

  /// Requires parity(a) ^ parity(b) == p. Returns false on contradiction.
  bool unite(std::size_t a, std::size_t b, int p) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == p;
    if (rank_[ra] < rank_[rb]) std::swap(ra, rb);
    parent_[rb] = ra;
    parity_[rb] = pa ^ pb ^ p;
    if (rank_[ra] == rank_[rb]) ++rank_[ra];
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<int> parity_;
  std::vector<int> rank_;
};

/// Path between two nodes inside a forest given as adjacency lists.
inline std::vector<std::size_t> forest_path(const std::vector<std::vector<std::size_t>>& forest,
                                            std::size_t from, std::size_t to) {
  std::vector<std::size_t> prev(forest.size(), SIZE_MAX);
  std::queue<std::size_t> q;
  q.push(from);
  prev[from] = from;
  while (!q.empty()) {
    auto a = q.front();
    q.pop();
    if (a == to) break;
    for (auto b : forest[a])
      if (prev[b] == SIZE_MAX) {
        prev[b] = a;
        q.push(b);
      }
  }
  std::vector<std::size_t> path;
  for (std::size_t x = to; x != from; x = prev[x]) path.push_back(x);
  path.push_back(from);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace detail

/// Finds edge and vertex switchings taking tau to sigma, i.e.
/// sigma(e,v) = s(e) tau(e,v) t(v) for every incidence. The smallest element
/// of each component is labelled +1. The certificate is symmetric: it also
/// takes sigma to tau.
inline OrientedEquivalence oriented_switch_equivalent(const OrientedHypergraph& sigma,
                                                      const OrientedHypergraph& tau) {
  const auto& h = sigma.structure();
  if (!h.same_structure(tau.structure()))
    throw Error(ErrorCode::structure_mismatch, "oriented hypergraphs have different underlying structure");
  const std::size_t n = h.vertex_count(), m = h.edge_count();
  IncidenceGraph ig(h);
  detail::ParityUnionFind uf(n + m);
  std::vector<std::vector<std::size_t>> forest(n + m);

  for (EdgeId e = 0; e < m; ++e) {
    auto members = h.edge(e);
    auto so = sigma.orientations(e), to = tau.orientations(e);
    for (std::size_t i = 0; i < members.size(); ++i) {
      const std::size_t a = members[i], b = n + e;
      const int p = (so[i] * to[i]) == Sign::negative;
      auto [ra, pa] = uf.find(a);
      auto [rb, pb] = uf.find(b);
      if (ra == rb) {
        if ((pa ^ pb) != p) {
          Walk w;
          for (auto node : detail::forest_path(forest, a, b)) w.elements.push_back(ig.element(node));
          w.elements.push_back(ig.element(a));
          return OrientedNotEquivalent{canonical_cycle(w)};
        }
        continue;
      }
      uf.unite(a, b, p);
      forest[a].push_back(b);
      forest[b].push_back(a);
    }
  }

  std::vector<int> flip(n + m, -1);  // per root: parity of the component's smallest node
  SwitchCertificate cert;
  for (std::size_t node = 0; node < n + m; ++node) {
    auto [r, p] = uf.find(node);
    if (flip[r] < 0) flip[r] = p;
    if ((p ^ flip[r]) == 1) {
      if (node < n) cert.vertices.push_back(node);
      else cert.edges.push_back(node - n);
    }
  }
  return cert;
}

/// Parity routing for signed switching: sum_{v in e} w_v = [gamma1(e) != gamma2(e)].
inline linalg::Gf2System signed_switch_system(const SignedHypergraph& g1, const SignedHypergraph& g2) {
  const auto& h = g1.structure();
  linalg::Gf2System sys(h.vertex_count());
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    auto members = h.edge(e);
    sys.add_equation(std::span<const std::size_t>(members.data(), members.size()), g1.gamma(e) != g2.gamma(e));
  }
  return sys;
}

/// Vertex set W whose switching turns gamma1 into gamma2, or an infeasibility
/// witness. W is the canonical GF(2) solution.
inline SignedEquivalence signed_switch_equivalent(const SignedHypergraph& g1, const SignedHypergraph& g2) {
  if (!g1.structure().same_structure(g2.structure()))
    throw Error(ErrorCode::structure_mismatch, "signed hypergraphs have different underlying structure");
  auto result = linalg::gf2_solve(signed_switch_system(g1, g2));
  if (auto* x = std::get_if<linalg::BitVector>(&result)) return SignedSwitchCertificate{x->ones()};
  return SignedNotEquivalent{std::get<linalg::Gf2Infeasible>(result).rows};
}

}  // namespace ohg
