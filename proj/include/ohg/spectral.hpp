#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <string_view>
#include <vector>

#include "ohg/balance.hpp"
#include "ohg/core.hpp"
#include "ohg/linalg.hpp"
#include "ohg/walks.hpp"

namespace ohg {

/// M(G^sigma): row e, column v, entry sigma(e, v) or 0.
inline linalg::RectMatrix incidence_matrix(const OrientedHypergraph& g) {
  linalg::RectMatrix m(g.edge_count(), g.vertex_count());
  for (const auto& i : g.incidences()) m(i.edge, i.vertex) = value(i.orientation);
  return m;
}

/// A(G^sigma): a_uv = sum over edges containing u != v of sigma(e,u) sigma(e,v).
inline linalg::DenseSymMatrix adjacency_matrix(const OrientedHypergraph& g) {
  linalg::DenseSymMatrix a(g.vertex_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto members = g.structure().edge(e);
    auto os = g.orientations(e);
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        a.add(members[i], members[j], value(os[i] * os[j]));
  }
  return a;
}

/// L(G^sigma) = D(G) + A(G^sigma).
inline linalg::DenseSymMatrix laplacian_matrix(const OrientedHypergraph& g) {
  auto l = adjacency_matrix(g);
  for (VertexId v = 0; v < g.vertex_count(); ++v) l.add(v, v, static_cast<double>(g.structure().degree(v)));
  return l;
}

enum class SpectralCriterion { m_singular, l_eigen, a_eigen };

constexpr std::string_view to_string(SpectralCriterion c) {
  switch (c) {
    case SpectralCriterion::m_singular: return "M-singular";
    case SpectralCriterion::l_eigen: return "L-eigen";
    case SpectralCriterion::a_eigen: return "A-eigen";
  }
  return "?";
}

struct SpectralTolerances {
  double jacobi = linalg::default_jacobi_tol;
  double abs = linalg::default_abs_tol;
  double rel = linalg::default_rel_tol;

  double threshold(double target) const noexcept { return std::max(abs, rel * std::abs(target)); }
};

/// One spectral balance test: is the G^+ extremal value in the G^sigma spectrum?
struct SpectralReport {
  SpectralCriterion criterion;
  double target = 0;
  std::vector<double> spectrum;
  bool decision = false;
  double margin = 0;
  SpectralTolerances tolerances;
};

struct SpectralTests {
  std::array<SpectralReport, 3> reports;

  bool consistent() const noexcept {
    return reports[0].decision == reports[1].decision && reports[1].decision == reports[2].decision;
  }
};

inline SpectralReport make_spectral_report(SpectralCriterion c, double target, std::vector<double> spectrum,
                                           const SpectralTolerances& tol) {
  auto mem = linalg::spectrum_contains(spectrum, target, tol.abs, tol.rel);
  return {c, target, std::move(spectrum), mem.contained, mem.margin, tol};
}

/// Tests whether lambda_max(M(G^+)), rho(L(G^+)) and rho(A(G^+)) lie in the
/// singular values of M(G^sigma), the spectrum of L(G^sigma) and the spectrum
/// of A(G^sigma). For a connected G each holds exactly when G^sigma is
/// incidence balanced. `target_shift` perturbs the targets (fault injection).
inline SpectralTests spectral_balance_tests(const OrientedHypergraph& g, const SpectralTolerances& tol = {},
                                            double target_shift = 0.0) {
  if (!is_connected(g.structure()))
    throw Error(ErrorCode::disconnected_input, "spectral balance tests need a connected hypergraph");
  const auto plus = all_positive_variant(g);

  auto sv_plus = linalg::singular_values(incidence_matrix(plus), tol.jacobi);
  auto l_plus = linalg::sym_eigenvalues(laplacian_matrix(plus), tol.jacobi);
  auto a_plus = linalg::sym_eigenvalues(adjacency_matrix(plus), tol.jacobi);
  auto top = [](const std::vector<double>& xs) { return xs.empty() ? 0.0 : xs.back(); };

  SpectralTests out{{
      make_spectral_report(SpectralCriterion::m_singular, top(sv_plus) + target_shift,
                           linalg::singular_values(incidence_matrix(g), tol.jacobi), tol),
      make_spectral_report(SpectralCriterion::l_eigen, top(l_plus) + target_shift,
                           linalg::sym_eigenvalues(laplacian_matrix(g), tol.jacobi), tol),
      make_spectral_report(SpectralCriterion::a_eigen, top(a_plus) + target_shift,
                           linalg::sym_eigenvalues(adjacency_matrix(g), tol.jacobi), tol),
  }};
  return out;
}

enum class SpectralAgreement { agree, indeterminate, contradiction };

constexpr std::string_view to_string(SpectralAgreement a) {
  switch (a) {
    case SpectralAgreement::agree: return "agree";
    case SpectralAgreement::indeterminate: return "numerically-indeterminate";
    case SpectralAgreement::contradiction: return "contradiction";
  }
  return "?";
}

/// Compares one spectral decision with the structural verdict, which is ground
/// truth. A disagreement whose margin is within 10x the membership threshold is
/// reported as indeterminate rather than as a contradiction.
inline SpectralAgreement compare_with_structure(const SpectralReport& r, bool balanced) {
  if (r.decision == balanced) return SpectralAgreement::agree;
  const double thr = r.tolerances.threshold(r.target);
  return r.margin <= 10.0 * thr ? SpectralAgreement::indeterminate : SpectralAgreement::contradiction;
}

}  // namespace ohg
