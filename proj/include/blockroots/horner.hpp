#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "blockroots/matpoly.hpp"
#include "blockroots/trace.hpp"

namespace blockroots {

struct IterConfig {
  // Initial guess; when empty the method's default guess is used.
  std::optional<Matrix> x0;
  // Stop threshold on δ, in percent.
  double eta = 1e-8;
  std::size_t max_iterations = 500;
  // Second stopping guard on ||A_R(X)||_F / max(1, ||A_l||_F).
  double residual_tol = 1e-8;
  // Seeds the jitter of the default scaled-identity guess.
  std::uint64_t seed = 0;
};

struct IterResult {
  Matrix x;
  ConvergenceTrace trace;
};

// Carries the trace of a failed run.
class IterationError : public Error {
 public:
  IterationError(ErrorCode code, const std::string& message, ConvergenceTrace trace)
      : Error(code, message), trace_(std::move(trace)) {}
  const ConvergenceTrace& trace() const noexcept { return trace_; }

 private:
  ConvergenceTrace trace_;
};

// ||A_R(X)||_F / max(1, ||A_l||_F).
double relative_residual(const MatrixPolynomial& p, const Matrix& x);

// (-trace(A_1) / (l m)) I plus a deterministic jitter of relative size 1e-3.
Matrix scaled_identity_guess(const MatrixPolynomial& p, std::uint64_t seed);

// Plain block Horner: X_{k+1} = -B_{l-1}(X_k)^{-1} A_l. The default start
// is the zero matrix, whose first step is -A_{l-1}^{-1} A_l.
IterResult horner_iterate(const MatrixPolynomial& p, const IterConfig& cfg);

// J with vec(dA_R(X; H)) = J vec(H).
Matrix frechet_matrix(const MatrixPolynomial& p, const Matrix& x);

enum class NewtonStep {
  // X - unvec(J^{-1} vec(A_R(X))).
  Newton,
  // X + (X - J^{-1} A_R(X)) A_l^{-1} A_R(X), the printed crossbred form.
  Crossbred,
};

IterResult newton_horner(const MatrixPolynomial& p, const IterConfig& cfg,
                         NewtonStep step = NewtonStep::Newton);

enum class TwoStageVariant {
  // C_{l-1} from the second synthetic division, C_k = B_k + C_{k-1} X.
  QChain,
  // C_{l-1} = Σ (l - j) A_j X^{l-1-j}.
  DeltaForm,
};

IterResult two_stage(const MatrixPolynomial& p, const IterConfig& cfg, TwoStageVariant variant);

struct BoundsReport {
  double gamma = 0.0;       // ||A_l^{-1}||_F
  double delta_norm = 0.0;  // ||A_l||_F
  double sup_x = 0.0;       // M
  double sup_x_inv = 0.0;   // N
  std::vector<std::size_t> tail;
  std::vector<double> lower;     // ξ_k / (γ M)
  std::vector<double> residual;  // ||A_R(X_k)||_F
  std::vector<double> upper;     // δ N ξ_k
  std::vector<bool> holds;
  std::vector<double> error_ratios;  // ||X_{k+1} - S|| / ||X_k - S|| with S the last iterate
  double ratio_trend = 0.0;          // median of error_ratios

  bool sandwich_holds() const;
};

// Checks ξ_k/(γM) <= ||A_R(X_k)|| <= δ N ξ_k over the trace tail.
BoundsReport convergence_bounds_check(const MatrixPolynomial& p, const ConvergenceTrace& trace);

}  // namespace blockroots
