#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blockroots/horner.hpp"
#include "blockroots/matpoly.hpp"
#include "blockroots/qd.hpp"
#include "blockroots/transforms.hpp"

namespace blockroots {

enum class RefineMethod { Horner, NewtonHorner, TwoStageQChain, TwoStageDelta };

struct PipelineConfig {
  RefineMethod refine_method = RefineMethod::NewtonHorner;
  QDConfig qd;
  // x0 is ignored; seeds come from Q.D. or the multi-start fallback.
  IterConfig iter;
  double verify_tol = 1e-8;
  double deflation_gate = 1e-6;
  TransformOptions transforms;
};

struct VerificationReport {
  // Relative residual of chain factor k as a right solvent of the
  // polynomial left after deflating factors 0..k-1.
  std::vector<double> factor_residuals;
  std::vector<double> right_solvent_residuals;
  std::vector<double> left_solvent_residuals;
  std::optional<CompletenessReport> right_completeness;
  std::optional<CompletenessReport> left_completeness;
  double reconstruction_error = 0.0;
  double rightmost_residual = 0.0;  // chain[0] as a right solvent of p
  double leftmost_residual = 0.0;   // chain[l-1] as a left solvent of p
  // (||Z*|| - ||Z||) / ||Z*|| against supplied reference matrices.
  std::vector<double> reference_norm_differences;
  std::vector<double> reference_relative_errors;  // ||Z - Z*|| / ||Z*||
  std::vector<std::string> warnings;

  bool passed(double tol) const;
};

struct StageTrace {
  std::string stage;
  ConvergenceTrace trace;
};

struct FactorizeResult {
  SpectralFactorChain chain;
  VerificationReport report;
  std::optional<QDRun> qd;
  std::vector<StageTrace> stages;
};

// One refinement run of the chosen method from x0.
IterResult refine(const MatrixPolynomial& p, const Matrix& x0, RefineMethod method, const IterConfig& cfg);

// Q.D. seeds, then per stage: refine on the current deflated polynomial,
// append, deflate. A supplied seed chain bypasses Q.D.
FactorizeResult full_factorize(const MatrixPolynomial& p, const PipelineConfig& cfg,
                               const std::optional<SpectralFactorChain>& seed = std::nullopt);

// Repeated extraction with each method's default initial guess and deflation, no Q.D.
FactorizeResult factorize_by_extraction(const MatrixPolynomial& p, RefineMethod method, const IterConfig& cfg,
                                        double deflation_gate = 1e-6);

struct SolventSetsResult {
  SolventSet right;
  SolventSet left;
  VerificationReport report;
  FactorizeResult factorization;
};

SolventSetsResult full_solvent_sets(const MatrixPolynomial& p, const PipelineConfig& cfg);

VerificationReport verify(const MatrixPolynomial& p, const SpectralFactorChain& chain,
                          const std::optional<std::vector<Matrix>>& reference = std::nullopt);
VerificationReport verify(const MatrixPolynomial& p, const SolventSet& s,
                          const std::optional<std::vector<Matrix>>& reference = std::nullopt);

std::string to_string(RefineMethod method);
std::optional<RefineMethod> parse_refine_method(const std::string& name);

}  // namespace blockroots
