#pragma once

#include <algorithm>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "blockroots/linalg.hpp"
#include "blockroots/matpoly.hpp"

namespace testsupport {

using blockroots::Matrix;

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  Matrix a(r, c);
  for (auto& v : a.data()) v = u(rng);
  return a;
}

inline Eigen::MatrixXd to_eigen(const Matrix& a) {
  Eigen::MatrixXd e(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) e(i, j) = a(i, j);
  return e;
}

inline Matrix from_eigen(const Eigen::MatrixXd& e) {
  Matrix a(e.rows(), e.cols());
  for (Eigen::Index i = 0; i < e.rows(); ++i)
    for (Eigen::Index j = 0; j < e.cols(); ++j) a(i, j) = e(i, j);
  return a;
}

// Eigenvalues from Eigen, the independent spectrum oracle.
inline std::vector<std::complex<double>> eigen_eigvals(const Matrix& a) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(to_eigen(a), false);
  std::vector<std::complex<double>> out;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) out.push_back(es.eigenvalues()(i));
  return out;
}

// Largest distance in an optimal-ish greedy pairing, done independently of match_spectra.
inline double spectrum_distance(std::vector<std::complex<double>> a, std::vector<std::complex<double>> b) {
  if (a.size() != b.size()) return 1e300;
  double worst = 0.0;
  while (!a.empty()) {
    std::size_t bi = 0, bj = 0;
    double best = 1e300;
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j)
        if (std::abs(a[i] - b[j]) < best) best = std::abs(a[i] - b[j]), bi = i, bj = j;
    worst = std::max(worst, best);
    a.erase(a.begin() + static_cast<long>(bi));
    b.erase(b.begin() + static_cast<long>(bj));
  }
  return worst;
}

// Matrix with prescribed real eigenvalues: V diag(ev) V^{-1} with a well-conditioned V.
inline Matrix with_eigenvalues(std::mt19937_64& rng, const std::vector<double>& ev) {
  const std::size_t m = ev.size();
  Matrix v = Matrix::identity(m) + random_matrix(rng, m, m, 0.3);
  Matrix d(m, m);
  for (std::size_t i = 0; i < m; ++i) d(i, i) = ev[i];
  return v * d * blockroots::invert(v);
}

// Naive Σ A_i X^{l-i}, summed with explicit powers.
inline Matrix naive_eval_right(const blockroots::MatrixPolynomial& p, const Matrix& x) {
  const std::size_t l = p.degree();
  Matrix s(p.order(), p.order());
  for (std::size_t i = 0; i <= l; ++i) s += p.coeff(i) * blockroots::power(x, l - i);
  return s;
}

inline Matrix naive_eval_left(const blockroots::MatrixPolynomial& p, const Matrix& x) {
  const std::size_t l = p.degree();
  Matrix s(p.order(), p.order());
  for (std::size_t i = 0; i <= l; ++i) s += blockroots::power(x, l - i) * p.coeff(i);
  return s;
}

inline double rel_diff(const Matrix& a, const Matrix& ref) {
  return blockroots::frob_norm(a - ref) / std::max(1e-300, blockroots::frob_norm(ref));
}

}  // namespace testsupport
