#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <variant>
#include <vector>

#include "ohg/balance.hpp"
#include "ohg/core.hpp"
#include "ohg/linalg.hpp"
#include "ohg/switching.hpp"
#include "ohg/walks.hpp"

namespace ohg {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

// Adjacency and Laplacian tensors of a k-uniform signed hypergraph are never
// stored. The adjacency tensor has entry gamma(e)/(k-1)! at every permutation
// of an edge, so contracting it with x^{k-1} sums (k-1)! equal terms per edge:
//   (A x^{k-1})_v = sum_{e ni v} gamma(e) prod_{u in e, u != v} x_u.

/// Edge size k of a uniform hypergraph; throws NotUniform otherwise.
inline std::size_t require_uniform(const Hypergraph& h) {
  auto k = h.uniformity();
  if (!k) throw Error(ErrorCode::not_uniform, "hypergraph is not uniform");
  return *k;
}

inline std::size_t require_even_uniform(const Hypergraph& h) {
  const auto k = require_uniform(h);
  if (k % 2 != 0) throw Error(ErrorCode::odd_uniformity, "edge size " + std::to_string(k) + " is odd");
  return k;
}

namespace detail {

/// out_v += coeff * prod_{u in e, u != v} x_u for every v in e, using prefix
/// and suffix products.
template <class T>
void accumulate_edge(std::span<const VertexId> members, T coeff, const std::vector<T>& x, std::vector<T>& out) {
  const std::size_t k = members.size();
  std::vector<T> prefix(k + 1, T(1)), suffix(k + 1, T(1));
  for (std::size_t i = 0; i < k; ++i) prefix[i + 1] = prefix[i] * x[members[i]];
  for (std::size_t i = k; i-- > 0;) suffix[i] = suffix[i + 1] * x[members[i]];
  for (std::size_t i = 0; i < k; ++i) out[members[i]] += coeff * prefix[i] * suffix[i + 1];
}

template <class T>
T int_pow(T x, std::size_t p) {
  T r(1);
  for (std::size_t i = 0; i < p; ++i) r *= x;
  return r;
}

inline void check_dimension(const SignedHypergraph& g, std::size_t size) {
  if (size != g.vertex_count()) throw Error(ErrorCode::dimension_mismatch, "vector length differs from vertex count");
}

}  // namespace detail

/// A x^{k-1} for the adjacency tensor of g.
inline ComplexVector adj_apply(const SignedHypergraph& g, const ComplexVector& x) {
  require_uniform(g.structure());
  detail::check_dimension(g, x.size());
  ComplexVector out(x.size(), Complex(0));
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    detail::accumulate_edge(g.structure().edge(e), Complex(value(g.gamma(e))), x, out);
  return out;
}

/// L x^{k-1} = D x^{[k-1]} + A x^{k-1}.
inline ComplexVector lap_apply(const SignedHypergraph& g, const ComplexVector& x) {
  const auto k = require_uniform(g.structure());
  auto out = adj_apply(g, x);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    out[v] += static_cast<double>(g.structure().degree(v)) * detail::int_pow(x[v], k - 1);
  return out;
}

/// A x^k = sum_e k gamma(e) x^e.
inline Complex adj_form(const SignedHypergraph& g, const ComplexVector& x) {
  const auto k = require_uniform(g.structure());
  detail::check_dimension(g, x.size());
  Complex total(0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    Complex prod(1);
    for (auto v : g.structure().edge(e)) prod *= x[v];
    total += static_cast<double>(k) * static_cast<double>(value(g.gamma(e))) * prod;
  }
  return total;
}

/// L x^k = sum_e (sum_{v in e} x_v^k + k gamma(e) x^e).
inline Complex lap_form(const SignedHypergraph& g, const ComplexVector& x) {
  const auto k = require_uniform(g.structure());
  Complex total = adj_form(g, x);
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    for (auto v : g.structure().edge(e)) total += detail::int_pow(x[v], k);
  return total;
}

enum class TensorKind { adjacency, laplacian };

/// Implicit adjacency or Laplacian tensor of a uniform signed hypergraph.
class TensorView {
 public:
  TensorView(SignedHypergraph source, TensorKind kind)
      : k_(require_uniform(source.structure())), kind_(kind), source_(std::move(source)) {
    if (k_ < 2) throw Error(ErrorCode::not_uniform, "tensor order must be at least 2");
  }

  std::size_t order() const noexcept { return k_; }
  std::size_t dimension() const noexcept { return source_.vertex_count(); }
  TensorKind kind() const noexcept { return kind_; }
  const SignedHypergraph& source() const noexcept { return source_; }

  ComplexVector apply(const ComplexVector& x) const {
    return kind_ == TensorKind::adjacency ? adj_apply(source_, x) : lap_apply(source_, x);
  }
  Complex form(const ComplexVector& x) const {
    return kind_ == TensorKind::adjacency ? adj_form(source_, x) : lap_form(source_, x);
  }

 private:
  std::size_t k_;
  TensorKind kind_;
  SignedHypergraph source_;
};

/// max_v |(A x^{k-1})_v - lambda x_v^{k-1}| after scaling x to unit max-modulus.
inline double eigenpair_residual(const SignedHypergraph& g, Complex lambda, ComplexVector x) {
  const auto k = require_uniform(g.structure());
  detail::check_dimension(g, x.size());
  double scale = 0;
  for (const auto& c : x) scale = std::max(scale, std::abs(c));
  if (scale == 0) throw Error(ErrorCode::zero_vector, "eigenvector candidate is zero");
  for (auto& c : x) c /= scale;
  const auto y = adj_apply(g, x);
  double res = 0;
  for (std::size_t v = 0; v < x.size(); ++v)
    res = std::max(res, std::abs(y[v] - lambda * detail::int_pow(x[v], k - 1)));
  return res;
}

inline ComplexVector to_complex(const std::vector<double>& x) { return {x.begin(), x.end()}; }

// ------------------------------------------------------------- NQZ iteration

struct NqzOptions {
  double tol = 1e-8;
  std::size_t max_iters = 100'000;
  double shift = 1.0;
};

struct NqzResult {
  double rho = 0;
  std::vector<double> perron;  ///< positive, max entry 1
  std::size_t iterations = 0;
  std::vector<double> lower;   ///< lambda_min per iteration (unshifted)
  std::vector<double> upper;   ///< lambda_max per iteration (unshifted)
};

/// Spectral radius and Perron vector of the adjacency tensor A(G) of a
/// connected k-uniform hypergraph (all edge coefficients positive), by the
/// Ng-Qi-Zhou power method on A(G) + shift * I. Stops once the Collatz-Wielandt
/// bounds are within tol of each other.
inline NqzResult nqz_spectral_radius(const Hypergraph& h, const NqzOptions& opt = {}) {
  const auto k = require_uniform(h);
  if (!is_connected(h)) throw Error(ErrorCode::disconnected_input, "NQZ iteration needs a connected hypergraph");
  const std::size_t n = h.vertex_count();
  const double root = 1.0 / static_cast<double>(k - 1);
  std::vector<double> x(n, 1.0), y(n);
  NqzResult out;
  for (std::size_t it = 0; it < opt.max_iters; ++it) {
    std::fill(y.begin(), y.end(), 0.0);
    for (EdgeId e = 0; e < h.edge_count(); ++e) detail::accumulate_edge(h.edge(e), 1.0, x, y);
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (VertexId v = 0; v < n; ++v) {
      const double r = y[v] / detail::int_pow(x[v], k - 1);
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    out.lower.push_back(lo);
    out.upper.push_back(hi);
    out.iterations = it + 1;
    if (hi - lo < opt.tol) {
      out.rho = 0.5 * (lo + hi);
      out.perron = x;
      return out;
    }
    double mx = 0;
    for (VertexId v = 0; v < n; ++v) {
      x[v] = std::pow(y[v] + opt.shift * detail::int_pow(x[v], k - 1), root);
      mx = std::max(mx, x[v]);
    }
    for (auto& c : x) c /= mx;
  }
  throw Error(ErrorCode::no_convergence, "NQZ iteration did not converge in " + std::to_string(opt.max_iters) +
                                             " iterations");
}

// ------------------------------------------------------------- parity criteria

struct OddBipartition {
  std::vector<VertexId> first;   ///< V1, the GF(2) solution support
  std::vector<VertexId> second;  ///< V2
};

struct NotOddBipartite {
  std::vector<EdgeId> edges;
};

using OddBipartiteResult = std::variant<OddBipartition, NotOddBipartite>;

/// Finds {V1, V2} meeting every edge of an even-uniform hypergraph in an odd
/// number of vertices on each side.
inline OddBipartiteResult odd_bipartite(const Hypergraph& h) {
  require_even_uniform(h);
  linalg::Gf2System sys(h.vertex_count());
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    auto members = h.edge(e);
    sys.add_equation(std::span<const std::size_t>(members.data(), members.size()), true);
  }
  auto res = linalg::gf2_solve(sys);
  if (auto* w = std::get_if<linalg::Gf2Infeasible>(&res)) return NotOddBipartite{w->rows};
  const auto& x = std::get<linalg::BitVector>(res);
  OddBipartition out;
  for (VertexId v = 0; v < h.vertex_count(); ++v) (x.test(v) ? out.first : out.second).push_back(v);
  return out;
}

/// Positive edges must meet W in an odd number of vertices, negative edges in
/// an even number: sum_{v in e} w_v = [gamma(e) = +1].
inline linalg::Gf2System parity_system(const SignedHypergraph& g) {
  linalg::Gf2System sys(g.vertex_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto members = g.structure().edge(e);
    sys.add_equation(std::span<const std::size_t>(members.data(), members.size()), g.gamma(e) == Sign::positive);
  }
  return sys;
}

/// A signature found from the parity system together with the verified
/// eigenvector it induces.
struct ParityCertificate {
  std::vector<VertexId> w;
  std::vector<Sign> s;
  double eigenvalue = 0;
  std::vector<double> eigenvector;
  double residual = 0;
  double residual_bound = 0;
  bool exact = false;  ///< residual computed in integer arithmetic

  bool verified() const noexcept { return residual <= residual_bound; }
};

struct NotHEigenvalue {
  std::vector<EdgeId> edges;
};
struct NoZeroHEigenvalue {
  std::vector<EdgeId> edges;
};

using MinusRhoResult = std::variant<ParityCertificate, NotHEigenvalue>;
using LapZeroResult = std::variant<ParityCertificate, NoZeroHEigenvalue>;

namespace detail {

inline void require_connected(const Hypergraph& h) {
  if (!is_connected(h)) throw Error(ErrorCode::disconnected_input, "hypergraph is not connected");
}

}  // namespace detail

/// Decides whether -rho(A(G)) is an H-eigenvalue of A(g) for a connected
/// even-uniform g. On success the eigenvector s * y (y the Perron vector of
/// A(G)) is verified to residual 10 * tol.
inline MinusRhoResult h_eigen_minus_rho(const SignedHypergraph& g, const NqzOptions& opt = {}) {
  require_even_uniform(g.structure());
  detail::require_connected(g.structure());
  auto res = linalg::gf2_solve(parity_system(g));
  if (auto* bad = std::get_if<linalg::Gf2Infeasible>(&res)) return NotHEigenvalue{bad->rows};
  ParityCertificate cert;
  cert.w = std::get<linalg::BitVector>(res).ones();
  cert.s = signature(g.vertex_count(), cert.w);
  auto nqz = nqz_spectral_radius(g.structure(), opt);
  cert.eigenvalue = -nqz.rho;
  cert.eigenvector.resize(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) cert.eigenvector[v] = value(cert.s[v]) * nqz.perron[v];
  cert.residual = eigenpair_residual(g, cert.eigenvalue, to_complex(cert.eigenvector));
  cert.residual_bound = 10 * opt.tol;
  return cert;
}

/// Integer evaluation of (L x^{k-1})_v for x in {+1, -1}^n:
/// x_v sum_{e ni v} (1 + gamma(e) x^e).
inline std::vector<std::int64_t> lap_apply_signature(const SignedHypergraph& g, const std::vector<Sign>& x) {
  detail::check_dimension(g, x.size());
  std::vector<std::int64_t> out(g.vertex_count(), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    Sign prod = Sign::positive;
    for (auto v : g.structure().edge(e)) prod *= x[v];
    const std::int64_t term = 1 + value(g.gamma(e) * prod);
    for (auto v : g.structure().edge(e)) out[v] += value(x[v]) * term;
  }
  return out;
}

/// Decides whether 0 is an H-eigenvalue of L(g) for a connected even-uniform g,
/// certifying with a +1/-1 eigenvector checked in exact integer arithmetic.
inline LapZeroResult lap_zero_h_eigen(const SignedHypergraph& g) {
  require_even_uniform(g.structure());
  detail::require_connected(g.structure());
  auto res = linalg::gf2_solve(parity_system(g));
  if (auto* bad = std::get_if<linalg::Gf2Infeasible>(&res)) return NoZeroHEigenvalue{bad->rows};
  ParityCertificate cert;
  cert.w = std::get<linalg::BitVector>(res).ones();
  cert.s = signature(g.vertex_count(), cert.w);
  cert.eigenvalue = 0;
  for (Sign s : cert.s) cert.eigenvector.push_back(value(s));
  std::int64_t worst = 0;
  for (auto r : lap_apply_signature(g, cert.s)) worst = std::max<std::int64_t>(worst, r < 0 ? -r : r);
  cert.residual = static_cast<double>(worst);
  cert.residual_bound = 0;
  cert.exact = true;
  return cert;
}

// ------------------------------------------------------------- similarity

struct TensorSimilarity {
  std::vector<VertexId> w;
  std::vector<Sign> s;
  double residual = 0;  ///< max deviation on the random test vector
};

struct NotSimilar {
  std::vector<EdgeId> edges;
};

using SimilarityResult = std::variant<TensorSimilarity, NotSimilar>;

namespace detail {

inline ComplexVector random_complex(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  ComplexVector x(n);
  for (auto& c : x) c = {d(rng), d(rng)};
  return x;
}

inline ComplexVector signed_scale(const std::vector<Sign>& s, ComplexVector x) {
  for (std::size_t i = 0; i < x.size(); ++i) x[i] *= static_cast<double>(value(s[i]));
  return x;
}

inline double max_deviation(const ComplexVector& a, const ComplexVector& b) {
  double d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace detail

inline constexpr double similarity_tol = 1e-10;

/// max |T2 x^{k-1} - s * T1 (s*x)^{k-1}|: zero exactly when S T1 S = T2 (in
/// the diagonal-product sense), sampled on one random complex vector.
inline double similarity_defect(const TensorView& t1, const TensorView& t2, const std::vector<Sign>& s,
                                std::uint64_t seed) {
  const auto x = detail::random_complex(t1.dimension(), seed);
  return detail::max_deviation(t2.apply(x), detail::signed_scale(s, t1.apply(detail::signed_scale(s, x))));
}

/// Finds a signature S with A(g2) = S A(g1) S via the signed switching system,
/// then checks the identity on a random complex vector.
inline SimilarityResult signed_tensor_similarity(const SignedHypergraph& g1, const SignedHypergraph& g2,
                                                 std::uint64_t seed = 0x5eed) {
  auto eq = signed_switch_equivalent(g1, g2);
  if (auto* bad = std::get_if<SignedNotEquivalent>(&eq)) return NotSimilar{bad->edges};
  TensorSimilarity out;
  out.w = std::get<SignedSwitchCertificate>(eq).vertices;
  out.s = signature(g1.vertex_count(), out.w);
  out.residual = similarity_defect(TensorView(g1, TensorKind::adjacency), TensorView(g2, TensorKind::adjacency),
                                   out.s, seed);
  return out;
}

// ------------------------------------------------------------- six-way battery

struct TensorBatteryOptions {
  NqzOptions nqz;
  std::uint64_t seed = 0x5eed;
  std::size_t exhaustive_vertex_limit = 20;
  OracleFault fault = OracleFault::none;
};

/// The six equivalent statements for a connected even-uniform signed
/// hypergraph g versus Gamma G^+ (every edge sign -1):
/// (1) switching equivalent to Gamma G^+, (2) S A(g) S = -A(G),
/// (3) -rho(A(G)) is an H-eigenvalue of A(g), (4) S L(g) S = L(G),
/// (5) 0 is an H-eigenvalue of L(g), (6) the parity bipartition exists.
struct TensorBattery {
  std::array<bool, 6> statements{};
  std::optional<std::vector<VertexId>> w;  ///< from statement (1)
  std::optional<ParityCertificate> minus_rho;
  std::optional<ParityCertificate> lap_zero;
  double rho = 0;
  bool sound = true;  ///< every produced certificate re-verified

  bool agree() const noexcept {
    for (bool s : statements)
      if (s != statements[0]) return false;
    return sound;
  }
};

namespace detail {

/// gamma(e) s^e = -1 on every edge: S A(g) S and -A(G) agree entrywise.
inline bool signature_negates_all(const SignedHypergraph& g, const std::vector<Sign>& s) {
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    Sign p = g.gamma(e);
    for (auto v : g.structure().edge(e)) p *= s[v];
    if (p != Sign::negative) return false;
  }
  return true;
}

inline std::optional<std::vector<Sign>> exhaustive_signature(const SignedHypergraph& g) {
  const std::size_t n = g.vertex_count();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Sign> s(n);
    for (std::size_t v = 0; v < n; ++v) s[v] = (mask >> v) & 1 ? Sign::negative : Sign::positive;
    if (signature_negates_all(g, s)) return s;
  }
  return std::nullopt;
}

}  // namespace detail

inline TensorBattery theorem_battery_even(const SignedHypergraph& g, const TensorBatteryOptions& opt = {}) {
  require_even_uniform(g.structure());
  detail::require_connected(g.structure());
  const auto& h = g.structure();
  const auto g_plus = SignedHypergraph::uniform(h, Sign::negative);  // Gamma G^+ for even k
  TensorBattery rep;

  // (1)
  auto eq = signed_switch_equivalent(g, g_plus);
  if (auto* c = std::get_if<SignedSwitchCertificate>(&eq)) {
    rep.w = c->vertices;
    rep.statements[0] = apply_vertex_switches(g, *c) == g_plus;
    rep.sound = rep.sound && rep.statements[0];
  }

  // (2), (4): from W when available, otherwise exhaustive search over signatures.
  std::optional<std::vector<Sign>> s;
  if (rep.w) s = signature(h.vertex_count(), *rep.w);
  else if (h.vertex_count() <= opt.exhaustive_vertex_limit) s = detail::exhaustive_signature(g);
  if (s && detail::signature_negates_all(g, *s)) {
    const TensorView a_g(g, TensorKind::adjacency), l_g(g, TensorKind::laplacian);
    // -A(G) is the adjacency tensor of Gamma G^+; L(G) is its Laplacian tensor.
    const TensorView a_neg(g_plus, TensorKind::adjacency), l_plus(g_plus, TensorKind::laplacian);
    rep.statements[1] = similarity_defect(a_g, a_neg, *s, opt.seed) <= similarity_tol;
    rep.statements[3] = similarity_defect(l_g, l_plus, *s, opt.seed + 1) <= similarity_tol;
  }

  // (3)
  auto mr = h_eigen_minus_rho(g, opt.nqz);
  if (auto* cert = std::get_if<ParityCertificate>(&mr)) {
    rep.statements[2] = cert->verified();
    rep.rho = -cert->eigenvalue;
    rep.minus_rho = *cert;
  } else {
    rep.rho = nqz_spectral_radius(h, opt.nqz).rho;
  }

  // (5)
  auto lz = lap_zero_h_eigen(g);
  if (auto* cert = std::get_if<ParityCertificate>(&lz)) {
    rep.statements[4] = cert->verified();
    rep.lap_zero = *cert;
  }

  // (6)
  auto sys = parity_system(g);
  if (opt.fault == OracleFault::parity_rhs && sys.equation_count() > 0) {
    auto eqs = sys.equations();
    linalg::Gf2System flipped(sys.variable_count());
    for (std::size_t i = 0; i < eqs.size(); ++i) {
      auto row = eqs[i];
      if (i == 0) row.rhs = !row.rhs;
      flipped.add_equation(std::move(row));
    }
    sys = std::move(flipped);
  }
  auto six = linalg::gf2_solve(sys);
  if (auto* x = std::get_if<linalg::BitVector>(&six)) {
    rep.statements[5] = linalg::satisfies(sys, *x);
    rep.sound = rep.sound && rep.statements[5];
  } else {
    rep.sound = rep.sound && linalg::verifies(sys, std::get<linalg::Gf2Infeasible>(six));
  }
  return rep;
}

}  // namespace ohg
