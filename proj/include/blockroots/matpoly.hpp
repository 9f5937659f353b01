#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "blockroots/linalg.hpp"
#include "blockroots/matrix.hpp"

namespace blockroots {

// A(λ) = A_0 λ^l + A_1 λ^{l-1} + ... + A_l with m x m coefficients, A_0 first.
class MatrixPolynomial {
 public:
  explicit MatrixPolynomial(std::vector<Matrix> coeffs);

  // λ^l I + A_1 λ^{l-1} + ... + A_l from the non-leading coefficients.
  static MatrixPolynomial monic(const std::vector<Matrix>& tail);

  std::size_t order() const noexcept { return m_; }
  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  const std::vector<Matrix>& coeffs() const noexcept { return coeffs_; }
  const Matrix& coeff(std::size_t i) const { return coeffs_.at(i); }
  const Matrix& trailing() const { return coeffs_.back(); }

  // True iff A_0 is exactly the identity.
  bool is_monic() const noexcept { return monic_; }

  // Pointwise value A(λ).
  Matrix at(double lambda) const;
  CMatrix at(std::complex<double> lambda) const;

  // max(1, ||A_l||_F), the scale used for relative residuals.
  double residual_scale() const;

 private:
  std::size_t m_ = 0;
  std::vector<Matrix> coeffs_;
  bool monic_ = false;
};

void require_monic(const MatrixPolynomial& p);

// Q_1 is the rightmost factor: A(λ) = (λI - Q_l) ... (λI - Q_1).
struct SpectralFactorChain {
  std::vector<Matrix> factors;

  std::size_t size() const noexcept { return factors.size(); }
};

enum class Side { Right, Left };

struct SolventSet {
  Side side = Side::Right;
  std::vector<Matrix> solvents;
  bool verified = false;
};

struct CompletenessReport {
  bool spectrum_union_matches = false;
  bool pairwise_disjoint = false;
  double vandermonde_det = 0.0;
  double vandermonde_cond = 0.0;
  double spectrum_match_distance = 0.0;
  double min_spectral_separation = 0.0;

  bool complete() const;
};

struct DivisionResult {
  MatrixPolynomial quotient;
  Matrix remainder;
};

// Σ A_i X^{l-i} via B_k = A_k + B_{k-1} X.
Matrix eval_right(const MatrixPolynomial& p, const Matrix& x);
// Σ X^{l-i} A_i via B_k = A_k + X B_{k-1}.
Matrix eval_left(const MatrixPolynomial& p, const Matrix& x);

// A(λ) = Q(λ)(λI - X) + A_R(X).
DivisionResult synthetic_div_right(const MatrixPolynomial& p, const Matrix& x);
// A(λ) = (λI - X) Q(λ) + A_L(X).
DivisionResult synthetic_div_left(const MatrixPolynomial& p, const Matrix& x);

Matrix companion_right(const MatrixPolynomial& p);
Matrix companion_left(const MatrixPolynomial& p);
Matrix companion_c3(const MatrixPolynomial& p);

Matrix block_vandermonde(const SolventSet& s);

CompletenessReport is_complete_set(const MatrixPolynomial& p, const SolventSet& s, double tol = 1e-6);

MatrixPolynomial reconstruct(const SpectralFactorChain& chain);

ComplexScalarList latent_roots(const MatrixPolynomial& p);

MatrixPolynomial multiply(const MatrixPolynomial& a, const MatrixPolynomial& b);

// max_i ||A_i - B_i||_F / max(1, ||A_i||_F); infinity on degree/order mismatch.
double coefficient_error(const MatrixPolynomial& reference, const MatrixPolynomial& other);

}  // namespace blockroots
