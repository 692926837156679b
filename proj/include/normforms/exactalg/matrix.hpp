// Dense matrices over an arbitrary commutative coefficient ring, plus the
// determinant algorithms used throughout: a division-free minor expansion, a
// fraction-free Bareiss elimination (exact division), and plain Gaussian
// elimination over fields.
#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "normforms/error.hpp"

namespace normforms::exactalg {

template <class T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n, const T& one, const T& zero) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix operator+(const Matrix& o) const {
    require_same_shape(o);
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = r.data_[i] + o.data_[i];
    return r;
  }

  Matrix operator-(const Matrix& o) const {
    require_same_shape(o);
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = r.data_[i] - o.data_[i];
    return r;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch in product");
    if (data_.empty() || o.data_.empty()) throw std::invalid_argument("product of empty matrices");
    Matrix r(rows_, o.cols_, data_[0].zero_like());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& a = at(i, k);
        if (a.is_zero()) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) = r.at(i, j) + a * o.at(k, j);
      }
    return r;
  }

  Matrix scaled(const T& c) const {
    Matrix r = *this;
    for (auto& x : r.data_) x = x * c;
    return r;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }
  std::size_t rows_, cols_;
  std::vector<T> data_;
};

// Division-free determinant by expansion over column subsets. Exponential in
// n, intended for the small matrices this library deals in.
template <class T>
T det_cofactor(const Matrix<T>& m) {
  if (!m.square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) throw std::invalid_argument("determinant of an empty matrix");
  if (n > 20) throw std::invalid_argument("cofactor determinant limited to n <= 20");
  const T zero = m.at(0, 0).zero_like();
  std::unordered_map<std::uint32_t, T> layer;
  layer.emplace(0u, m.at(0, 0).one_like());
  for (std::size_t row = 0; row < n; ++row) {
    std::unordered_map<std::uint32_t, T> next;
    for (const auto& [mask, minor] : layer) {
      if (minor.is_zero()) continue;
      int parity = 0;
      for (std::size_t j = 0; j < n; ++j) {
        std::uint32_t bit = std::uint32_t{1} << j;
        if (mask & bit) {
          ++parity;
          continue;
        }
        const T& entry = m.at(row, j);
        if (entry.is_zero()) continue;
        T contrib = entry * minor;
        // Laplace sign along row `row`: (-1)^(row + position of j in the
        // chosen column set).
        if ((row + parity) % 2) contrib = -contrib;
        auto it = next.find(mask | bit);
        if (it == next.end())
          next.emplace(mask | bit, std::move(contrib));
        else
          it->second = it->second + contrib;
      }
    }
    layer = std::move(next);
  }
  std::uint32_t full = n == 32 ? ~0u : ((std::uint32_t{1} << n) - 1);
  auto it = layer.find(full);
  return it == layer.end() ? zero : it->second;
}

// Fraction-free elimination; every division is exact in the coefficient ring.
// Requires T::exact_divide.
template <class T>
T det_bareiss(const Matrix<T>& input) {
  if (!input.square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) throw std::invalid_argument("determinant of an empty matrix");
  Matrix<T> m = input;
  T prev = m.at(0, 0).one_like();
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k).is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m.at(r, k).is_zero()) ++r;
      if (r == n) return m.at(0, 0).zero_like();
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(r, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = num.is_zero() ? num : num.exact_divide(prev);
      }
      m.at(i, k) = m.at(0, 0).zero_like();
    }
    prev = m.at(k, k);
  }
  T d = m.at(n - 1, n - 1);
  return negate ? -d : d;
}

// Basis of the right nullspace over a field (T needs inv()).
template <class T>
std::vector<std::vector<T>> nullspace_gauss(const Matrix<T>& input) {
  const std::size_t rows = input.rows(), cols = input.cols();
  if (rows == 0 || cols == 0) throw std::invalid_argument("nullspace of an empty matrix");
  Matrix<T> m = input;
  const T zero = m.at(0, 0).zero_like();
  const T one = m.at(0, 0).one_like();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pr = r;
    while (pr < rows && m.at(pr, c).is_zero()) ++pr;
    if (pr == rows) continue;
    for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(r, j), m.at(pr, j));
    T inv = m.at(r, c).inv();
    for (std::size_t j = 0; j < cols; ++j) m.at(r, j) = m.at(r, j) * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      T f = m.at(i, c);
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<std::vector<T>> basis;
  std::size_t next_pivot = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    if (next_pivot < pivot_col.size() && pivot_col[next_pivot] == c) {
      ++next_pivot;
      continue;
    }
    std::vector<T> v(cols, zero);
    v[c] = one;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -m.at(i, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Gaussian elimination over a field (T needs inv()).
template <class T>
T det_gauss(const Matrix<T>& input) {
  if (!input.square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) throw std::invalid_argument("determinant of an empty matrix");
  Matrix<T> m = input;
  bool negate = false;
  T det = m.at(0, 0).one_like();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t r = k;
    while (r < n && m.at(r, k).is_zero()) ++r;
    if (r == n) return m.at(0, 0).zero_like();
    if (r != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(r, j));
      negate = !negate;
    }
    det = det * m.at(k, k);
    T pivot_inv = m.at(k, k).inv();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m.at(i, k).is_zero()) continue;
      T f = m.at(i, k) * pivot_inv;
      for (std::size_t j = k; j < n; ++j) m.at(i, j) = m.at(i, j) - f * m.at(k, j);
    }
  }
  return negate ? -det : det;
}

}  // namespace normforms::exactalg
