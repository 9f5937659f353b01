#pragma once

#include <vector>

#include "blockroots/matpoly.hpp"

namespace blockroots {

struct TransformOptions {
  // Relative residual (against max(1, ||A_l||_F)) accepted for input and
  // output solvents and for deflation remainders.
  double residual_gate = 1e-6;
  // Pivot threshold, relative to the Frobenius norm, for transformer rank checks.
  double rank_tol = 1e-10;
  // Minimum eigenvalue separation between factors, relative to the largest latent root modulus.
  double spectrum_tol = 1e-8;
};

struct TransformResult {
  Matrix output;
  Matrix transformer;
  bool rank_ok = false;
  double residual = 0.0;
};

// Left solvent L = Q^{-1} R Q similar to the right solvent R.
TransformResult right_to_left_solvent(const MatrixPolynomial& p, const Matrix& r,
                                      const TransformOptions& opts = {});

// Solvent k has the spectrum of chain factor k. The transformers are the
// P_k (right) or S_k (left) similarity matrices.
struct SolventSetResult {
  SolventSet set;
  std::vector<Matrix> transformers;
  std::vector<double> residuals;
  std::vector<double> system_conditions;
};

SolventSetResult chain_to_right_solvents(const MatrixPolynomial& p, const SpectralFactorChain& chain,
                                         const TransformOptions& opts = {});
SolventSetResult chain_to_left_solvents(const MatrixPolynomial& p, const SpectralFactorChain& chain,
                                        const TransformOptions& opts = {});

// Solvent k of the input becomes chain factor k; right solvent 0 is the
// rightmost factor and left solvent l-1 the leftmost.
struct ChainResult {
  SpectralFactorChain chain;
  std::vector<Matrix> transformers;
  double reconstruction_error = 0.0;
};

ChainResult right_solvents_to_chain(const MatrixPolynomial& p, const SolventSet& s,
                                    const TransformOptions& opts = {});
ChainResult left_solvents_to_chain(const MatrixPolynomial& p, const SolventSet& s,
                                   const TransformOptions& opts = {});

struct Deflation {
  MatrixPolynomial quotient;
  double remainder_norm = 0.0;  // relative to max(1, ||A_l||_F)
};

// A(λ) = Q(λ)(λI - q) when q is a right solvent.
Deflation deflate_right(const MatrixPolynomial& p, const Matrix& q, double gate = 1e-6);
// A(λ) = (λI - q) Q(λ) when q is a left solvent.
Deflation deflate_left(const MatrixPolynomial& p, const Matrix& q, double gate = 1e-6);

}  // namespace blockroots
