#pragma once

// Small dense matrices over a coefficient field, with exact (or pivoted
// floating-point) Gaussian elimination.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hdef/scalar.hpp"

namespace hdef {

template <Scalar C>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = from_int<C>(1);
    return m;
  }
  static Matrix diagonal(const std::vector<C>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  C& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const C& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (is_zero(a(i, k))) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
      }
    return r;
  }
  friend Matrix operator*(const C& s, Matrix a) {
    for (auto& x : a.data_) x *= s;
    return a;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  /// Conjugate transpose.
  Matrix adjoint() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = conjugate((*this)(i, j));
    return t;
  }

  bool is_lower_triangular() const {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (!is_zero((*this)(i, j))) return false;
    return true;
  }
  bool is_upper_triangular() const { return transpose().is_lower_triangular(); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<C> data_;
};

template <Scalar C>
bool near(const Matrix<C>& a, const Matrix<C>& b, double tol = kFloatTolerance) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!near(a(i, j), b(i, j), tol)) return false;
  return true;
}

/// First entry where a and b differ (row, col), if any.
template <Scalar C>
std::optional<std::pair<std::size_t, std::size_t>> first_difference(const Matrix<C>& a, const Matrix<C>& b,
                                                                     double tol = kFloatTolerance) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!near(a(i, j), b(i, j), tol)) return std::pair{i, j};
  return std::nullopt;
}

/// Row echelon reduction in place; returns pivot columns. In float mode
/// entries below tol * (largest entry) count as zero.
template <Scalar C>
std::vector<std::size_t> row_reduce(Matrix<C>& m, double tol = 1e-12) {
  double scale = 0.0;
  if constexpr (!is_exact_v<C>)
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) scale = std::max(scale, magnitude(m(i, j)));
  const double threshold = tol * std::max(scale, 1e-300);

  auto is_pivot_zero = [&](const C& x) {
    if constexpr (is_exact_v<C>)
      return is_zero(x);
    else
      return magnitude(x) <= threshold;
  };

  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t best = m.rows();
    double best_mag = -1.0;
    for (std::size_t r = row; r < m.rows(); ++r) {
      if (is_pivot_zero(m(r, col))) continue;
      if constexpr (is_exact_v<C>) {
        best = r;
        break;
      } else {
        if (magnitude(m(r, col)) > best_mag) {
          best_mag = magnitude(m(r, col));
          best = r;
        }
      }
    }
    if (best == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(best, j));
    C inv = from_int<C>(1) / m(row, col);
    for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      C f = m(r, col);
      for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <Scalar C>
std::size_t rank(Matrix<C> m, double tol = 1e-12) {
  return row_reduce(m, tol).size();
}

template <Scalar C>
Matrix<C> inverse(const Matrix<C>& m) {
  if (!m.square()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<C> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = from_int<C>(1);
  }
  auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw std::domain_error("matrix is singular");
  Matrix<C> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

template <Scalar C>
C determinant(Matrix<C> m) {
  if (!m.square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  C det = from_int<C>(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = n;
    double best = -1.0;
    for (std::size_t r = col; r < n; ++r) {
      if (is_zero(m(r, col))) continue;
      if constexpr (is_exact_v<C>) {
        piv = r;
        break;
      } else if (magnitude(m(r, col)) > best) {
        best = magnitude(m(r, col));
        piv = r;
      }
    }
    if (piv == n) return C{};
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(col, j), m(piv, j));
      det = -det;
    }
    det *= m(col, col);
    C inv = from_int<C>(1) / m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (is_zero(m(r, col))) continue;
      C f = m(r, col) * inv;
      for (std::size_t j = col; j < n; ++j) m(r, j) -= f * m(col, j);
    }
  }
  return det;
}

/// Solution x of A x = b when b lies in the column span of A (least
/// structure: any particular solution), plus the residual b - A x.
template <Scalar C>
struct SpanSolution {
  std::vector<C> coefficients;
  std::vector<C> residual;
  double residual_norm = 0.0;
  bool in_span = false;
};

template <Scalar C>
SpanSolution<C> solve_in_span(const Matrix<C>& a, const std::vector<C>& b, double tol = 1e-12) {
  const std::size_t m = a.rows(), n = a.cols();
  Matrix<C> aug(m, n + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  auto pivots = row_reduce(aug, tol);
  SpanSolution<C> sol;
  sol.coefficients.assign(n, C{});
  for (std::size_t r = 0; r < pivots.size(); ++r)
    if (pivots[r] < n) sol.coefficients[pivots[r]] = aug(r, n);

  sol.residual = b;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) sol.residual[i] -= a(i, j) * sol.coefficients[j];
  for (const auto& r : sol.residual) sol.residual_norm = std::max(sol.residual_norm, magnitude(r));
  if constexpr (is_exact_v<C>) {
    sol.in_span = true;
    for (const auto& r : sol.residual) sol.in_span = sol.in_span && is_zero(r);
  } else {
    double scale = 1.0;
    for (const auto& x : b) scale = std::max(scale, magnitude(x));
    sol.in_span = sol.residual_norm <= 1e-10 * scale;
  }
  return sol;
}

}  // namespace hdef
