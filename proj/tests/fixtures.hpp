#pragma once

#include <random>
#include <vector>

#include "ohg/core.hpp"
#include "ohg/generate.hpp"

namespace fixtures {

using ohg::OrientedHypergraph;

/// One edge {1, 2} with orientations (+1, -1).
inline OrientedHypergraph e1() { return ohg::build(2, {{1, -2}}); }

/// 4-uniform cycle C3^{4,2}, all incidences +1 except (e1,2), (e2,6), (e3,3).
inline OrientedHypergraph ex() { return ohg::build(6, {{1, -2, 3, 4}, {1, 2, 5, -6}, {-3, 4, 5, 6}}); }

/// Triangle on {1,2,3}; the only negative incidence is vertex 1 of edge {1,2}.
inline OrientedHypergraph triangle_neg() { return ohg::build(3, {{-1, 2}, {2, 3}, {1, 3}}); }

inline OrientedHypergraph triangle_pos() { return ohg::build(3, {{1, 2}, {2, 3}, {1, 3}}); }

/// Single all-positive k-edge on vertices 1..k.
inline OrientedHypergraph single_edge(std::size_t k) {
  std::vector<std::int64_t> e;
  for (std::size_t v = 1; v <= k; ++v) e.push_back(static_cast<std::int64_t>(v));
  return ohg::build(k, {e});
}

/// Two 4-edges sharing {1,2}; the second carries two negative incidences, so
/// every edge sign equals that of G+, yet the instance is not incidence balanced.
inline OrientedHypergraph sign_preserving() { return ohg::build(6, {{1, 2, 3, 4}, {1, -2, 5, -6}}); }

/// 2-uniform cycle on n vertices, all positive.
inline OrientedHypergraph cycle(std::size_t n) {
  std::vector<std::vector<std::int64_t>> es;
  for (std::size_t v = 1; v <= n; ++v)
    es.push_back({static_cast<std::int64_t>(v), static_cast<std::int64_t>(v % n + 1)});
  return ohg::build(n, es);
}

/// Random connected instance for property tests.
inline OrientedHypergraph random_connected(std::mt19937_64& rng, std::size_t max_n = 8, std::size_t max_m = 6,
                                           std::size_t max_size = 4, double p_neg = 0.4) {
  ohg::GenerateParams p;
  p.n = std::uniform_int_distribution<std::size_t>(2, max_n)(rng);
  p.max_size = max_size;
  p.min_size = 2;
  const std::size_t m_min = std::max<std::size_t>(1, (p.n - 1 + max_size - 2) / (max_size - 1));
  p.m = std::uniform_int_distribution<std::size_t>(m_min, std::max(m_min, max_m))(rng);
  p.p_neg = p_neg;
  p.connected = true;
  return ohg::generate(p, rng());
}

}  // namespace fixtures
