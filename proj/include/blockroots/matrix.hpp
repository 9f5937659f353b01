#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "blockroots/error.hpp"

namespace blockroots {

namespace detail {
inline bool is_finite(double v) { return std::isfinite(v); }
inline bool is_finite(const std::complex<double>& v) {
  return std::isfinite(v.real()) && std::isfinite(v.imag());
}
inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const std::complex<double>& v) { return std::abs(v); }
}  // namespace detail

// Dense row-major matrix. A default-constructed matrix is an empty 0x0
// placeholder; every other constructor requires rows, cols >= 1.
template <typename T>
class BasicMatrix {
 public:
  using value_type = T;

  BasicMatrix() = default;

  BasicMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
    require_shape(rows, cols);
  }

  BasicMatrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    require_shape(rows, cols);
    if (data_.size() != rows * cols) {
      throw Error(ErrorCode::DimensionMismatch,
                  "expected " + std::to_string(rows * cols) + " entries, got " +
                      std::to_string(data_.size()));
    }
    require_finite();
  }

  BasicMatrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    require_shape(rows_, cols_);
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged initializer rows");
      data_.insert(data_.end(), row.begin(), row.end());
    }
    require_finite();
  }

  static BasicMatrix zeros(std::size_t rows, std::size_t cols) { return BasicMatrix(rows, cols); }

  static BasicMatrix identity(std::size_t n) {
    BasicMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<T>& data() const noexcept { return data_; }
  std::vector<T>& data() noexcept { return data_; }

  bool all_finite() const {
    for (const auto& v : data_) {
      if (!detail::is_finite(v)) return false;
    }
    return true;
  }

  BasicMatrix transpose() const {
    BasicMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  BasicMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) {
      throw Error(ErrorCode::DimensionMismatch, "block out of range");
    }
    BasicMatrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  void set_block(std::size_t r0, std::size_t c0, const BasicMatrix& b) {
    if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) {
      throw Error(ErrorCode::DimensionMismatch, "block out of range");
    }
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  BasicMatrix& operator+=(const BasicMatrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  BasicMatrix& operator-=(const BasicMatrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  BasicMatrix& operator*=(T s) {
    for (auto& v : data_) v *= s;
    return *this;
  }

  friend BasicMatrix operator+(BasicMatrix a, const BasicMatrix& b) { return a += b; }
  friend BasicMatrix operator-(BasicMatrix a, const BasicMatrix& b) { return a -= b; }
  friend BasicMatrix operator-(BasicMatrix a) {
    for (auto& v : a.data_) v = -v;
    return a;
  }
  friend BasicMatrix operator*(BasicMatrix a, T s) { return a *= s; }
  friend BasicMatrix operator*(T s, BasicMatrix a) { return a *= s; }

  friend BasicMatrix operator*(const BasicMatrix& a, const BasicMatrix& b) {
    if (a.cols_ != b.rows_) {
      throw Error(ErrorCode::DimensionMismatch,
                  "product of " + a.shape_string() + " and " + b.shape_string());
    }
    BasicMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T aik = a(i, k);
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    }
    return c;
  }

  friend bool operator==(const BasicMatrix& a, const BasicMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string shape_string() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

 private:
  static void require_shape(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) {
      throw Error(ErrorCode::DimensionMismatch, "matrix dimensions must be at least 1x1");
    }
  }
  void require_same_shape(const BasicMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
      throw Error(ErrorCode::DimensionMismatch,
                  "shape " + shape_string() + " vs " + o.shape_string());
    }
  }
  void require_finite() const {
    if (!all_finite()) throw Error(ErrorCode::NonFiniteEntry, "matrix has a non-finite entry");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using Matrix = BasicMatrix<double>;
using CMatrix = BasicMatrix<std::complex<double>>;
using ComplexScalarList = std::vector<std::complex<double>>;

inline CMatrix to_complex(const Matrix& a) {
  CMatrix c(a.rows(), a.cols());
  for (std::size_t k = 0; k < a.size(); ++k) c.data()[k] = a.data()[k];
  return c;
}

}  // namespace blockroots
