#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ohg/balance.hpp"
#include "ohg/core.hpp"
#include "ohg/generate.hpp"
#include "ohg/spectral.hpp"
#include "ohg/switching.hpp"
#include "ohg/tensor.hpp"

// Cross-validation over random ensembles: the structural, matrix and tensor
// routes must reach the same verdict on every instance.

namespace ohg::battery {

enum class Family { random_orientation, switched_positive, switched_positive_one_flip, sign_preserving_flips };

inline const char* to_string(Family f) {
  switch (f) {
    case Family::random_orientation: return "random";
    case Family::switched_positive: return "switched-positive";
    case Family::switched_positive_one_flip: return "one-flip";
    case Family::sign_preserving_flips: return "sign-preserving";
  }
  return "?";
}

namespace detail {

inline OrientedHypergraph flip_incidence(const OrientedHypergraph& g, EdgeId e, std::size_t pos) {
  std::vector<std::vector<Sign>> os;
  for (EdgeId f = 0; f < g.edge_count(); ++f) os.emplace_back(g.orientations(f).begin(), g.orientations(f).end());
  os[e][pos] = -os[e][pos];
  return {g.structure(), std::move(os)};
}

/// Applies one member of a family to a fresh structure.
inline OrientedHypergraph shape(const GenerateParams& base, Family fam, std::mt19937_64& rng) {
  auto p = base;
  p.p_neg = fam == Family::random_orientation ? std::uniform_real_distribution<double>(0.2, 0.6)(rng) : 0.0;
  auto g = generate(p, rng());
  if (fam == Family::random_orientation) return g;
  g = apply_switches(g, random_certificate(g.structure(), rng()));
  if (g.edge_count() == 0) return g;
  if (fam == Family::switched_positive_one_flip) {
    const EdgeId e = std::uniform_int_distribution<EdgeId>(0, g.edge_count() - 1)(rng);
    const std::size_t pos = std::uniform_int_distribution<std::size_t>(0, g.structure().edge_size(e) - 1)(rng);
    return flip_incidence(g, e, pos);
  }
  if (fam == Family::sign_preserving_flips) {
    // Flipping two incidences of one edge keeps its edge sign.
    std::bernoulli_distribution coin(0.5);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const auto size = g.structure().edge_size(e);
      if (size < 2 || !coin(rng)) continue;
      const std::size_t a = std::uniform_int_distribution<std::size_t>(0, size - 1)(rng);
      std::size_t b = std::uniform_int_distribution<std::size_t>(0, size - 2)(rng);
      if (b >= a) ++b;
      g = flip_incidence(flip_incidence(g, e, a), e, b);
    }
  }
  return g;
}

}  // namespace detail

struct Sample {
  OrientedHypergraph instance;
  Family family;
  std::uint64_t seed;
};

/// Connected instances with n <= 8, m <= 6 and edge sizes in [1, 4].
inline std::vector<Sample> structural_ensemble(std::size_t count, std::uint64_t master_seed) {
  std::vector<Sample> out;
  for (std::size_t i = 0; i < count; ++i) {
    const auto seed = derive_seed(master_seed, i);
    std::mt19937_64 rng(seed);
    GenerateParams p;
    p.n = std::uniform_int_distribution<std::size_t>(2, 8)(rng);
    p.max_size = 4;
    p.min_size = std::bernoulli_distribution(0.2)(rng) ? 1 : 2;
    const std::size_t m_min = std::max<std::size_t>(1, (p.n - 1 + 2) / 3);
    p.m = std::uniform_int_distribution<std::size_t>(m_min, 6)(rng);
    p.connected = true;
    const auto fam = static_cast<Family>(i % 3);
    out.push_back({detail::shape(p, fam, rng), fam, seed});
  }
  return out;
}

/// Connected even-uniform instances, k in {2, 4}, n <= 8, m <= 6.
inline std::vector<Sample> even_uniform_ensemble(std::size_t count, std::uint64_t master_seed) {
  std::vector<Sample> out;
  for (std::size_t i = 0; i < count; ++i) {
    const auto seed = derive_seed(master_seed, i);
    std::mt19937_64 rng(seed);
    GenerateParams p;
    const std::size_t k = i % 2 == 0 ? 4 : 2;
    p.min_size = p.max_size = k;
    if (k == 2) {
      p.n = std::uniform_int_distribution<std::size_t>(3, 7)(rng);
      p.m = std::uniform_int_distribution<std::size_t>(p.n - 1, 6)(rng);
    } else {
      p.n = std::uniform_int_distribution<std::size_t>(4, 8)(rng);
      p.m = std::uniform_int_distribution<std::size_t>(std::max<std::size_t>(1, (p.n - 1 + 2) / 3), 6)(rng);
    }
    p.connected = true;
    const auto fam = static_cast<Family>((i / 2) % 4);
    out.push_back({detail::shape(p, fam, rng), fam, seed});
  }
  return out;
}

/// Every orientation of a fixed structure (2^incidences instances).
inline std::vector<OrientedHypergraph> orientation_sweep(const Hypergraph& h) {
  const std::size_t total = h.incidence_count();
  std::vector<OrientedHypergraph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << total); ++mask) {
    std::vector<std::vector<Sign>> os(h.edge_count());
    std::size_t bit = 0;
    for (EdgeId e = 0; e < h.edge_count(); ++e)
      for (std::size_t i = 0; i < h.edge_size(e); ++i, ++bit)
        os[e].push_back((mask >> bit) & 1 ? Sign::negative : Sign::positive);
    out.emplace_back(h, std::move(os));
  }
  return out;
}

/// Matrix identities that hold on every instance.
struct MatrixIdentities {
  bool laplacian_is_gram = true;  ///< L = M^T M in exact integers
  double min_laplacian_eigenvalue = 0;
  double max_singular_value = 0;
  double positive_max_singular_value = 0;

  bool psd(double tol = 1e-9) const noexcept { return min_laplacian_eigenvalue >= -tol; }
  bool dominated(double tol = 1e-7) const noexcept {
    return max_singular_value <= positive_max_singular_value + tol;
  }
};

inline MatrixIdentities matrix_identities(const OrientedHypergraph& g) {
  MatrixIdentities out;
  const auto m = incidence_matrix(g);
  const auto l = laplacian_matrix(g);
  for (std::size_t i = 0; i < m.cols(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      long long s = 0;
      for (std::size_t r = 0; r < m.rows(); ++r)
        s += static_cast<long long>(m(r, i)) * static_cast<long long>(m(r, j));
      if (static_cast<long long>(l(i, j)) != s || l(i, j) != static_cast<double>(s)) out.laplacian_is_gram = false;
    }
  const auto eig = linalg::sym_eigenvalues(l);
  out.min_laplacian_eigenvalue = eig.empty() ? 0.0 : eig.front();
  const auto sv = linalg::singular_values(m);
  const auto sv_plus = linalg::singular_values(incidence_matrix(all_positive_variant(g)));
  out.max_singular_value = sv.empty() ? 0.0 : sv.back();
  out.positive_max_singular_value = sv_plus.empty() ? 0.0 : sv_plus.back();
  return out;
}

struct StructuralCheck {
  BalanceBattery battery;
  SpectralTests spectral;
  std::array<SpectralAgreement, 3> agreement{};
  MatrixIdentities identities;

  bool balanced() const noexcept { return is_balanced(battery.verdict); }
  bool passed() const noexcept {
    if (!battery.agree()) return false;
    for (auto a : agreement)
      if (a == SpectralAgreement::contradiction) return false;
    return identities.laplacian_is_gram && identities.psd() && identities.dominated();
  }
};

inline StructuralCheck check_structural(const OrientedHypergraph& g, const BatteryLimits& limits = {}) {
  StructuralCheck c{equivalence_battery(g, limits), {}, {}, matrix_identities(g)};
  const double shift = limits.fault == OracleFault::spectral_target ? 0.5 : 0.0;
  c.spectral = spectral_balance_tests(g, {}, shift);
  for (std::size_t i = 0; i < 3; ++i) c.agreement[i] = compare_with_structure(c.spectral.reports[i], c.balanced());
  return c;
}

struct TensorCheck {
  TensorBattery battery;
  bool incidence_balanced = false;

  bool all_true() const noexcept {
    for (bool s : battery.statements)
      if (!s) return false;
    return true;
  }
  /// Incidence balance implies the six statements; the converse may fail.
  bool implication_holds() const noexcept { return !incidence_balanced || all_true(); }
  bool converse_witness() const noexcept { return all_true() && !incidence_balanced; }
  bool passed() const noexcept { return battery.agree() && implication_holds(); }
};

inline TensorCheck check_tensor(const OrientedHypergraph& g, const TensorBatteryOptions& opt = {}) {
  return {theorem_battery_even(induced_signed(g), opt), is_balanced(incidence_balance(g))};
}

/// Aggregate of a full battery run (the `battery` command).
struct Summary {
  std::size_t structural_instances = 0;
  std::size_t structural_failures = 0;
  std::size_t balanced = 0;
  std::size_t indeterminate = 0;
  std::size_t tensor_instances = 0;
  std::size_t tensor_failures = 0;
  std::size_t converse_witnesses = 0;
  std::vector<std::string> failures;

  bool clean() const noexcept { return structural_failures == 0 && tensor_failures == 0; }
};

inline Summary run(std::size_t structural_count, std::size_t tensor_count, std::uint64_t seed,
                   OracleFault fault = OracleFault::none) {
  Summary s;
  BatteryLimits limits;
  limits.fault = fault;
  for (const auto& sample : structural_ensemble(structural_count, seed)) {
    auto c = check_structural(sample.instance, limits);
    ++s.structural_instances;
    s.balanced += c.balanced();
    for (auto a : c.agreement) s.indeterminate += a == SpectralAgreement::indeterminate;
    if (!c.passed()) {
      ++s.structural_failures;
      s.failures.push_back("structural seed " + std::to_string(sample.seed) + " (" + to_string(sample.family) + ")");
    }
  }
  TensorBatteryOptions topt;
  topt.fault = fault;
  for (const auto& sample : even_uniform_ensemble(tensor_count, derive_seed(seed, 0x7e45))) {
    auto c = check_tensor(sample.instance, topt);
    ++s.tensor_instances;
    s.converse_witnesses += c.converse_witness();
    if (!c.passed()) {
      ++s.tensor_failures;
      s.failures.push_back("tensor seed " + std::to_string(sample.seed) + " (" + to_string(sample.family) + ")");
    }
  }
  return s;
}

}  // namespace ohg::battery
