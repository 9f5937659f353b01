#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "blockroots/matpoly.hpp"
#include "blockroots/pipeline.hpp"

namespace blockroots {

// H(λ) = N(λ) D(λ)^{-1} with deg N = k < deg D = l and D monic.
struct MFDSystem {
  MatrixPolynomial numerator;
  MatrixPolynomial denominator;
};

void validate_mfd(const MFDSystem& sys);

struct DecouplingOptions {
  PipelineConfig pipeline;
  // Similarity to the original state basis; when given, K = K_c T_c.
  std::optional<Matrix> tc;
};

struct DecouplingResult {
  Matrix f;                                  // N_k^{-1}
  SpectralFactorChain numerator_chain;       // zeros of N_k^{-1} N(λ), rightmost first
  std::vector<Matrix> qd;                    // Q_d1 .. Q_d(l-k)
  SpectralFactorChain desired_chain;         // rightmost first: zeros, then Q_d(l-k) .. Q_d1
  MatrixPolynomial dd;                       // desired denominator, descending coefficients
  std::vector<Matrix> kc_blocks;             // K_c0 .. K_c(l-1)
  Matrix kc;                                 // [K_c0 ... K_c(l-1)]
  std::optional<Matrix> k;
  std::vector<Matrix> j_blocks;
  VerificationReport numerator_report;
  std::vector<std::string> warnings;
};

// Modes J_1..J_{l-k} are diagonal. The desired denominator is
// D_d(λ) = (λI - Q_d1) ... (λI - Q_d(l-k)) N_k^{-1} N(λ) with
// Q_di = N_k^{-1} J_i N_k, so that N D_d^{-1} N_k^{-1} = Π (λI - J_i)^{-1}.
DecouplingResult design_decoupling(const MFDSystem& sys, const std::vector<Matrix>& modes,
                                   const DecouplingOptions& opts = {});

struct ClosedLoopPoint {
  std::complex<double> lambda;
  CMatrix closed;  // N(λ) D_d(λ)^{-1} F
  CMatrix target;  // Π (λI - J_i)^{-1}
  double error = 0.0;
};

ClosedLoopPoint closed_loop_eval(const MFDSystem& sys, const DecouplingResult& res, std::complex<double> lambda);

struct ControllerForm {
  Matrix ac;
  Matrix bc;
  Matrix cc;
};

ControllerForm controller_form(const MFDSystem& sys);

// C (λI - A)^{-1} B.
CMatrix realization_transfer(const ControllerForm& form, std::complex<double> lambda);

// N(λ) D(λ)^{-1}.
CMatrix mfd_transfer(const MFDSystem& sys, std::complex<double> lambda);

}  // namespace blockroots
