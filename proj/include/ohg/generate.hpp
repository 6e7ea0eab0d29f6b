#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "ohg/core.hpp"
#include "ohg/switching.hpp"

namespace ohg {

struct GenerateParams {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t min_size = 2;  ///< edge sizes drawn uniformly from [min_size, max_size]
  std::size_t max_size = 2;
  double p_neg = 0.0;        ///< probability of a -1 orientation per incidence
  bool connected = false;
};

/// Per-instance seed derived from a master seed (splitmix64 finaliser).
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Random oriented hypergraph, deterministic in the seed. With `connected`,
/// the first edges grow a spanning structure: each later edge meets the
/// vertices covered so far, and enough new vertices are brought in each step
/// that the remaining edges can still cover the rest.
inline OrientedHypergraph generate(const GenerateParams& p, std::uint64_t seed) {
  if (p.min_size == 0 || p.min_size > p.max_size)
    throw Error(ErrorCode::infeasible_parameters, "edge size range is empty");
  if (p.m > 0 && p.min_size > p.n)
    throw Error(ErrorCode::infeasible_parameters, "edge size exceeds vertex count");
  if (p.p_neg < 0.0 || p.p_neg > 1.0) throw Error(ErrorCode::infeasible_parameters, "p_neg outside [0, 1]");
  const std::size_t kmax = std::min(p.max_size, p.n);
  if (p.connected) {
    if (p.m == 0 ? p.n > 1 : 1 + p.m * (kmax - 1) < p.n)
      throw Error(ErrorCode::infeasible_parameters, "too few or too small edges to connect every vertex");
  }

  std::mt19937_64 rng(seed);
  auto uniform = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  auto pick = [&](std::vector<VertexId>& pool, std::size_t count) {
    std::vector<VertexId> out;
    for (std::size_t i = 0; i < count; ++i) {
      const auto j = uniform(i, pool.size() - 1);
      std::swap(pool[i], pool[j]);
      out.push_back(pool[i]);
    }
    return out;
  };

  std::vector<VertexId> covered, uncovered(p.n);
  for (VertexId v = 0; v < p.n; ++v) uncovered[v] = v;
  std::vector<std::vector<VertexId>> edges;

  for (std::size_t j = 0; j < p.m; ++j) {
    const std::size_t remaining = p.m - j - 1;
    std::vector<VertexId> members;
    if (p.connected && !uncovered.empty()) {
      const std::size_t capacity = remaining * (kmax - 1);
      // Candidate sizes for which a valid count of new vertices exists.
      std::vector<std::pair<std::size_t, std::pair<std::size_t, std::size_t>>> options;
      for (std::size_t s = p.min_size; s <= kmax; ++s) {
        std::size_t lo = uncovered.size() > capacity ? uncovered.size() - capacity : 0;
        std::size_t hi = std::min(uncovered.size(), covered.empty() ? s : s - 1);
        if (s > covered.size()) lo = std::max(lo, s - covered.size());
        if (covered.empty()) lo = std::max(lo, s);
        if (lo <= hi) options.push_back({s, {lo, hi}});
      }
      if (options.empty()) throw Error(ErrorCode::infeasible_parameters, "cannot grow a connected instance");
      const auto& [s, range] = options[uniform(0, options.size() - 1)];
      const std::size_t fresh = uniform(range.first, range.second);
      auto added = pick(uncovered, fresh);
      auto old = pick(covered, s - fresh);
      uncovered.erase(uncovered.begin(), uncovered.begin() + static_cast<std::ptrdiff_t>(fresh));
      members = old;
      members.insert(members.end(), added.begin(), added.end());
      covered.insert(covered.end(), added.begin(), added.end());
    } else {
      std::vector<VertexId> all(p.n);
      for (VertexId v = 0; v < p.n; ++v) all[v] = v;
      members = pick(all, uniform(p.min_size, kmax));
    }
    std::sort(members.begin(), members.end());
    edges.push_back(std::move(members));
  }

  std::bernoulli_distribution neg(p.p_neg);
  std::vector<EdgeSpec> specs;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    EdgeSpec spec{"e" + std::to_string(e + 1), {}};
    for (auto v : edges[e]) {
      const auto label = static_cast<std::int64_t>(v + 1);
      spec.labels.push_back(neg(rng) ? -label : label);
    }
    specs.push_back(std::move(spec));
  }
  return build(p.n, specs);
}

/// Random vertex and edge subsets, each element included with probability 1/2.
inline SwitchCertificate random_certificate(const Hypergraph& h, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  SwitchCertificate c;
  for (VertexId v = 0; v < h.vertex_count(); ++v)
    if (coin(rng)) c.vertices.push_back(v);
  for (EdgeId e = 0; e < h.edge_count(); ++e)
    if (coin(rng)) c.edges.push_back(e);
  return c;
}

}  // namespace ohg
