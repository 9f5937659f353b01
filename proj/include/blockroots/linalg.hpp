#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <utility>
#include <vector>

#include "blockroots/error.hpp"
#include "blockroots/matrix.hpp"

namespace blockroots {

inline constexpr double kDefaultPivotRelTol = 1e-12;

template <typename T>
double frob_norm(const BasicMatrix<T>& a) {
  double s = 0.0;
  for (const auto& v : a.data()) {
    const double m = detail::magnitude(v);
    s += m * m;
  }
  return std::sqrt(s);
}

template <typename T>
struct LuFactorization {
  BasicMatrix<T> lu;             // unit-lower L below the diagonal, U on and above
  std::vector<std::size_t> perm; // row i of PA is row perm[i] of A
  int sign = 1;
  double min_pivot = 0.0;        // smallest |U_ii|
  double max_pivot = 0.0;
};

// Gaussian elimination with partial (row) pivoting. A negative threshold
// selects the default absolute threshold kDefaultPivotRelTol * ||a||_F.
template <typename T>
LuFactorization<T> lu_factor(const BasicMatrix<T>& a, double threshold = -1.0) {
  if (!a.is_square()) throw Error(ErrorCode::DimensionMismatch, "LU of non-square " + a.shape_string());
  const std::size_t n = a.rows();
  if (threshold < 0.0) threshold = kDefaultPivotRelTol * frob_norm(a);
  LuFactorization<T> f{a, std::vector<std::size_t>(n), 1,
                       std::numeric_limits<double>::infinity(), 0.0};
  std::iota(f.perm.begin(), f.perm.end(), std::size_t{0});
  auto& m = f.lu;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = detail::magnitude(m(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double v = detail::magnitude(m(i, k));
      if (v > best) {
        best = v;
        p = i;
      }
    }
    if (!(best > threshold) || best == 0.0) {
      throw Error(ErrorCode::SingularMatrix,
                  "pivot " + std::to_string(k) + " below threshold", k);
    }
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      std::swap(f.perm[k], f.perm[p]);
      f.sign = -f.sign;
    }
    f.min_pivot = std::min(f.min_pivot, best);
    f.max_pivot = std::max(f.max_pivot, best);
    const T pivot = m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const T factor = m(i, k) / pivot;
      m(i, k) = factor;
      if (factor == T(0)) continue;
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= factor * m(k, j);
    }
  }
  return f;
}

template <typename T>
BasicMatrix<T> lu_solve(const LuFactorization<T>& f, const BasicMatrix<T>& b) {
  const std::size_t n = f.lu.rows();
  if (b.rows() != n) {
    throw Error(ErrorCode::DimensionMismatch,
                "solve with " + f.lu.shape_string() + " and right-hand side " + b.shape_string());
  }
  BasicMatrix<T> x(n, b.cols());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x(i, j) = b(f.perm[i], j);
  for (std::size_t j = 0; j < b.cols(); ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      T s = x(i, j);
      for (std::size_t k = 0; k < i; ++k) s -= f.lu(i, k) * x(k, j);
      x(i, j) = s;
    }
    for (std::size_t i = n; i-- > 0;) {
      T s = x(i, j);
      for (std::size_t k = i + 1; k < n; ++k) s -= f.lu(i, k) * x(k, j);
      x(i, j) = s / f.lu(i, i);
    }
  }
  return x;
}

template <typename T>
BasicMatrix<T> solve(const BasicMatrix<T>& a, const BasicMatrix<T>& b, double threshold = -1.0) {
  return lu_solve(lu_factor(a, threshold), b);
}

template <typename T>
BasicMatrix<T> invert(const BasicMatrix<T>& a, double threshold = -1.0) {
  return solve(a, BasicMatrix<T>::identity(a.rows()), threshold);
}

// b * c^{-1}, computed as (c^T \ b^T)^T.
template <typename T>
BasicMatrix<T> right_divide(const BasicMatrix<T>& b, const BasicMatrix<T>& c, double threshold = -1.0) {
  return solve(c.transpose(), b.transpose(), threshold).transpose();
}

// Returns 0 for matrices whose elimination hits an exact zero pivot.
template <typename T>
T det(const BasicMatrix<T>& a) {
  try {
    const auto f = lu_factor(a, 0.0);
    T d = T(f.sign);
    for (std::size_t i = 0; i < a.rows(); ++i) d *= f.lu(i, i);
    return d;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SingularMatrix) return T(0);
    throw;
  }
}

template <typename T>
BasicMatrix<T> power(const BasicMatrix<T>& a, std::size_t k) {
  BasicMatrix<T> r = BasicMatrix<T>::identity(a.rows());
  for (std::size_t i = 0; i < k; ++i) r = r * a;
  return r;
}

template <typename T>
BasicMatrix<T> kron(const BasicMatrix<T>& a, const BasicMatrix<T>& b) {
  BasicMatrix<T> r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return r;
}

// Column-stacking vec, so that vec(A X B) = kron(B^T, A) vec(X).
template <typename T>
BasicMatrix<T> vec(const BasicMatrix<T>& a) {
  BasicMatrix<T> v(a.rows() * a.cols(), 1);
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i) v(j * a.rows() + i, 0) = a(i, j);
  return v;
}

template <typename T>
BasicMatrix<T> unvec(const BasicMatrix<T>& v, std::size_t rows, std::size_t cols) {
  if (v.cols() != 1 || v.rows() != rows * cols) {
    throw Error(ErrorCode::DimensionMismatch,
                "cannot unvec " + v.shape_string() + " into " + std::to_string(rows) + "x" +
                    std::to_string(cols));
  }
  BasicMatrix<T> a(rows, cols);
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = 0; i < rows; ++i) a(i, j) = v(j * rows + i, 0);
  return a;
}

// Pivoted-elimination rank proxy: smallest pivot above rel_tol * ||a||_F.
bool full_rank(const Matrix& a, double rel_tol);

// Frobenius condition number ||a|| ||a^{-1}||; infinity when singular.
double cond_frob(const Matrix& a);

// Eigenvalues by Householder Hessenberg reduction and Francis double-shift
// QR. Throws NoConvergence after max_sweeps_per_dim * n QR sweeps.
ComplexScalarList eigvals(const Matrix& a, std::size_t max_sweeps_per_dim = 100);

struct SpectrumMatch {
  bool same_size = false;
  double max_distance = std::numeric_limits<double>::infinity();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

// Greedy nearest-pair matching of two multisets of complex numbers.
SpectrumMatch match_spectra(const ComplexScalarList& a, const ComplexScalarList& b);

double min_cross_distance(const ComplexScalarList& a, const ComplexScalarList& b);

double max_modulus(const ComplexScalarList& a);

}  // namespace blockroots
