#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <variant>
#include <vector>

#include "ohg/error.hpp"

namespace ohg::linalg {

inline constexpr double default_jacobi_tol = 1e-12;
inline constexpr std::size_t default_sweep_budget = 100;
inline constexpr double default_abs_tol = 1e-7;
inline constexpr double default_rel_tol = 1e-9;

/// Real row-major m x n matrix.
class RectMatrix {
 public:
  RectMatrix() = default;
  RectMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}
  RectMatrix(std::size_t rows, std::size_t cols, std::vector<double> values)
      : rows_(rows), cols_(cols), data_(std::move(values)) {
    if (data_.size() != rows * cols) throw Error(ErrorCode::dimension_mismatch, "matrix storage size");
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::span<const double> values() const noexcept { return data_; }

  RectMatrix transposed() const {
    RectMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const RectMatrix&, const RectMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<double> data_;
};

/// Real symmetric matrix; symmetry is checked exactly on construction.
class DenseSymMatrix {
 public:
  DenseSymMatrix() = default;
  explicit DenseSymMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}
  DenseSymMatrix(std::size_t n, std::vector<double> values) : n_(n), data_(std::move(values)) {
    if (data_.size() != n * n) throw Error(ErrorCode::dimension_mismatch, "matrix storage size");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (data_[i * n + j] != data_[j * n + i])
          throw Error(ErrorCode::dimension_mismatch, "matrix is not symmetric");
  }

  std::size_t order() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  /// Sets a_ij and a_ji together.
  void set(std::size_t i, std::size_t j, double v) {
    data_[i * n_ + j] = v;
    data_[j * n_ + i] = v;
  }
  void add(std::size_t i, std::size_t j, double v) {
    data_[i * n_ + j] += v;
    if (i != j) data_[j * n_ + i] += v;
  }
  std::span<const double> values() const noexcept { return data_; }

  double trace() const noexcept {
    double t = 0;
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
  }
  double frobenius_norm() const noexcept {
    double s = 0;
    for (double v : data_) s += v * v;
    return std::sqrt(s);
  }

  friend bool operator==(const DenseSymMatrix&, const DenseSymMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

/// M^T M.
inline DenseSymMatrix gram(const RectMatrix& m) {
  DenseSymMatrix g(m.cols());
  for (std::size_t i = 0; i < m.cols(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j) {
      double s = 0;
      for (std::size_t r = 0; r < m.rows(); ++r) s += m(r, i) * m(r, j);
      g.set(i, j, s);
    }
  return g;
}

/// All eigenvalues of a symmetric matrix, ascending, by cyclic Jacobi
/// rotations. Sweeps until the off-diagonal Frobenius norm drops below
/// tol * ||A||_F.
inline std::vector<double> sym_eigenvalues(const DenseSymMatrix& input, double tol = default_jacobi_tol,
                                           std::size_t sweep_budget = default_sweep_budget) {
  const std::size_t n = input.order();
  std::vector<double> a(input.values().begin(), input.values().end());
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
  const double threshold = tol * input.frobenius_norm();
  auto off_norm = [&] {
    double s = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += at(i, j) * at(i, j);
    return std::sqrt(s);
  };

  std::size_t sweep = 0;
  while (off_norm() > threshold) {
    if (sweep++ >= sweep_budget)
      throw Error(ErrorCode::no_convergence, "Jacobi sweep budget exhausted");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
        at(p, q) = 0.0;
        at(q, p) = 0.0;
      }
    }
  }
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = at(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

/// The min(m, n) singular values of M, ascending: square roots of the
/// eigenvalues of the smaller Gram matrix, with round-off negatives clipped.
inline std::vector<double> singular_values(const RectMatrix& m, double tol = default_jacobi_tol) {
  const DenseSymMatrix g = m.rows() < m.cols() ? gram(m.transposed()) : gram(m);
  const auto eig = sym_eigenvalues(g, tol);
  const double floor = -10.0 * tol * std::max(1.0, g.frobenius_norm());
  std::vector<double> sv;
  sv.reserve(eig.size());
  for (double l : eig) {
    if (l < floor) throw Error(ErrorCode::no_convergence, "Gram matrix has a clearly negative eigenvalue");
    sv.push_back(std::sqrt(std::max(l, 0.0)));
  }
  return sv;
}

struct Membership {
  bool contained;
  double margin;  ///< distance from target to the nearest spectrum point
};

/// Tests min_i |lambda_i - target| <= max(abs_tol, rel_tol * |target|).
inline Membership spectrum_contains(std::span<const double> spectrum, double target,
                                    double abs_tol = default_abs_tol, double rel_tol = default_rel_tol) {
  if (spectrum.empty()) throw Error(ErrorCode::empty_spectrum, "spectrum is empty");
  double margin = std::numeric_limits<double>::infinity();
  for (double l : spectrum) margin = std::min(margin, std::abs(l - target));
  return {margin <= std::max(abs_tol, rel_tol * std::abs(target)), margin};
}

// ---------------------------------------------------------------- GF(2)

/// Fixed-width bit vector packed into 64-bit words.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  std::size_t size() const noexcept { return bits_; }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  void set(std::size_t i, bool v = true) {
    const std::uint64_t mask = std::uint64_t{1} << (i % 64);
    if (v) words_[i / 64] |= mask;
    else words_[i / 64] &= ~mask;
  }
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
  BitVector& operator^=(const BitVector& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
    return *this;
  }
  bool none() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }
  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  /// Parity of the bitwise AND with another vector.
  bool dot(const BitVector& o) const noexcept {
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & o.words_[w];
    return std::popcount(acc) % 2 == 1;
  }
  std::vector<std::size_t> ones() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < bits_; ++i)
      if (test(i)) out.push_back(i);
    return out;
  }

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

struct Gf2Equation {
  BitVector coefficients;
  bool rhs = false;
};

/// Linear system over GF(2): each row is sum of selected variables = rhs.
class Gf2System {
 public:
  explicit Gf2System(std::size_t variables) : variables_(variables) {}

  std::size_t variable_count() const noexcept { return variables_; }
  std::size_t equation_count() const noexcept { return rows_.size(); }
  const std::vector<Gf2Equation>& equations() const noexcept { return rows_; }

  /// Adds sum_{i in vars} x_i = rhs; a repeated variable cancels.
  void add_equation(std::span<const std::size_t> vars, bool rhs) {
    BitVector c(variables_);
    for (auto v : vars) {
      if (v >= variables_) throw Error(ErrorCode::dimension_mismatch, "variable index out of range");
      c.flip(v);
    }
    rows_.push_back({std::move(c), rhs});
  }
  void add_equation(Gf2Equation eq) {
    if (eq.coefficients.size() != variables_)
      throw Error(ErrorCode::dimension_mismatch, "coefficient width differs from variable count");
    rows_.push_back(std::move(eq));
  }

 private:
  std::size_t variables_;
  std::vector<Gf2Equation> rows_;
};

/// Row subset whose coefficient sum vanishes while the right-hand sides sum to 1.
struct Gf2Infeasible {
  std::vector<std::size_t> rows;
};

using Gf2Result = std::variant<BitVector, Gf2Infeasible>;

/// Gauss-Jordan elimination with leftmost pivots. A feasible system yields the
/// solution with every free variable 0, which is the minimal solution when the
/// last variable is taken as most significant.
inline Gf2Result gf2_solve(const Gf2System& sys) {
  const std::size_t nv = sys.variable_count();
  const std::size_t ne = sys.equation_count();
  struct Row {
    BitVector coef;
    bool rhs;
    BitVector origin;  // which input rows were combined
  };
  std::vector<Row> rows;
  rows.reserve(ne);
  for (std::size_t r = 0; r < ne; ++r) {
    BitVector origin(ne);
    origin.set(r);
    rows.push_back({sys.equations()[r].coefficients, sys.equations()[r].rhs, std::move(origin)});
  }

  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < nv && rank < ne; ++col) {
    std::size_t sel = rank;
    while (sel < ne && !rows[sel].coef.test(col)) ++sel;
    if (sel == ne) continue;
    std::swap(rows[rank], rows[sel]);
    for (std::size_t r = 0; r < ne; ++r) {
      if (r != rank && rows[r].coef.test(col)) {
        rows[r].coef ^= rows[rank].coef;
        rows[r].rhs ^= rows[rank].rhs;
        rows[r].origin ^= rows[rank].origin;
      }
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (std::size_t r = rank; r < ne; ++r)
    if (rows[r].rhs) return Gf2Infeasible{rows[r].origin.ones()};

  BitVector x(nv);
  for (std::size_t r = 0; r < rank; ++r) x.set(pivot_col[r], rows[r].rhs);
  return x;
}

inline bool satisfies(const Gf2System& sys, const BitVector& x) {
  if (x.size() != sys.variable_count()) return false;
  for (const auto& eq : sys.equations())
    if (eq.coefficients.dot(x) != eq.rhs) return false;
  return true;
}

inline bool verifies(const Gf2System& sys, const Gf2Infeasible& w) {
  if (w.rows.empty()) return false;
  BitVector sum(sys.variable_count());
  bool rhs = false;
  for (auto r : w.rows) {
    if (r >= sys.equation_count()) return false;
    sum ^= sys.equations()[r].coefficients;
    rhs ^= sys.equations()[r].rhs;
  }
  return sum.none() && rhs;
}

}  // namespace ohg::linalg
