#include "blockroots/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace blockroots {

std::string to_string(RefineMethod method) {
  switch (method) {
    case RefineMethod::Horner: return "horner";
    case RefineMethod::NewtonHorner: return "newton-horner";
    case RefineMethod::TwoStageQChain: return "two-stage";
    case RefineMethod::TwoStageDelta: return "two-stage-delta";
  }
  return "unknown";
}

std::optional<RefineMethod> parse_refine_method(const std::string& name) {
  if (name == "horner") return RefineMethod::Horner;
  if (name == "newton-horner") return RefineMethod::NewtonHorner;
  if (name == "two-stage" || name == "two-stage-qchain") return RefineMethod::TwoStageQChain;
  if (name == "two-stage-delta") return RefineMethod::TwoStageDelta;
  return std::nullopt;
}

bool VerificationReport::passed(double tol) const {
  auto small = [tol](const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(), [tol](double x) { return x <= tol; });
  };
  const bool complete_ok = (!right_completeness || right_completeness->complete()) &&
                           (!left_completeness || left_completeness->complete());
  return small(factor_residuals) && small(right_solvent_residuals) && small(left_solvent_residuals) &&
         reconstruction_error <= tol && complete_ok;
}

IterResult refine(const MatrixPolynomial& p, const Matrix& x0, RefineMethod method, const IterConfig& cfg) {
  IterConfig c = cfg;
  c.x0 = x0;
  switch (method) {
    case RefineMethod::Horner: return horner_iterate(p, c);
    case RefineMethod::NewtonHorner: return newton_horner(p, c);
    case RefineMethod::TwoStageQChain: return two_stage(p, c, TwoStageVariant::QChain);
    case RefineMethod::TwoStageDelta: return two_stage(p, c, TwoStageVariant::DeltaForm);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown refine method");
}

namespace {

IterResult run_default(const MatrixPolynomial& p, RefineMethod method, const IterConfig& cfg) {
  IterConfig c = cfg;
  c.x0.reset();
  switch (method) {
    case RefineMethod::Horner: return horner_iterate(p, c);
    case RefineMethod::NewtonHorner: return newton_horner(p, c);
    case RefineMethod::TwoStageQChain: return two_stage(p, c, TwoStageVariant::QChain);
    case RefineMethod::TwoStageDelta: return two_stage(p, c, TwoStageVariant::DeltaForm);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown refine method");
}

[[noreturn]] void rethrow_with_stage(const Error& e, std::size_t stage, const std::string& phase) {
  throw Error(e.code(), "stage " + std::to_string(stage) + " (" + phase + "): " + e.detail(), stage);
}

// Candidate starts for the multi-start fallback: the zero matrix (plain
// Horner), the scaled identity, then seeded random matrices at the scale
// of the latent roots.
std::vector<std::pair<Matrix, RefineMethod>> fallback_starts(const MatrixPolynomial& p, RefineMethod method,
                                                             std::uint64_t seed) {
  const std::size_t m = p.order();
  std::vector<std::pair<Matrix, RefineMethod>> out;
  out.emplace_back(Matrix(m, m), RefineMethod::Horner);
  out.emplace_back(scaled_identity_guess(p, seed), method);
  double radius = 1.0;
  try {
    radius = std::max(1.0, max_modulus(latent_roots(p)));
  } catch (const Error&) {
  }
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::normal_distribution<double> n(0.0, radius / std::sqrt(static_cast<double>(m)));
  for (int k = 0; k < 8; ++k) {
    Matrix x(m, m);
    for (auto& v : x.data()) v = n(rng);
    out.emplace_back(std::move(x), method);
  }
  return out;
}

IterResult multi_start(const MatrixPolynomial& p, RefineMethod method, const IterConfig& cfg, std::uint64_t seed) {
  std::string last;
  for (const auto& [x0, m] : fallback_starts(p, method, seed)) {
    try {
      return refine(p, x0, m, cfg);
    } catch (const Error& e) {
      last = e.what();
    }
  }
  throw Error(ErrorCode::NoConvergence, "every multi-start guess failed; last: " + last);
}

}  // namespace

FactorizeResult full_factorize(const MatrixPolynomial& p, const PipelineConfig& cfg,
                               const std::optional<SpectralFactorChain>& seed) {
  require_monic(p);
  if (!(cfg.verify_tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "verify_tol must be positive");
  const std::size_t l = p.degree();
  if (l == 0) throw Error(ErrorCode::InvalidArgument, "cannot factorize a degree-0 polynomial");
  FactorizeResult out;
  std::vector<std::string> warnings;
  std::optional<std::vector<Matrix>> seeds;
  if (seed) {
    if (seed->size() != l) throw Error(ErrorCode::DimensionMismatch, "seed chain length differs from the degree");
    seeds = seed->factors;
  } else if (l > 1) {
    try {
      QDRun run = qd_iterate(p, cfg.qd);
      if (run.status != QDStatus::Converged) {
        warnings.push_back("Q.D. did not converge after " + std::to_string(run.tableau.iteration) +
                           " sweeps (max relative E " + std::to_string(run.trace.max_rel_e.back()) +
                           "); its last Q-row seeds the refinement");
      }
      seeds = run.tableau.q_row;
      out.qd = std::move(run);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::SingularCoefficient && e.code() != ErrorCode::SingularPivot &&
          e.code() != ErrorCode::NoConvergence) {
        throw;
      }
      warnings.push_back(std::string("Q.D. unavailable (") + e.what() + "); falling back to multi-start Horner");
    }
  }

  MatrixPolynomial cur = p;
  for (std::size_t k = 0; k + 1 < l; ++k) {
    IterResult it{Matrix(), {}};
    try {
      it = seeds ? refine(cur, (*seeds)[k], cfg.refine_method, cfg.iter)
                 : multi_start(cur, cfg.refine_method, cfg.iter, cfg.iter.seed + k);
    } catch (const Error& e) {
      if (!seeds) rethrow_with_stage(e, k, "refine " + to_string(cfg.refine_method));
      try {
        it = multi_start(cur, cfg.refine_method, cfg.iter, cfg.iter.seed + k);
        warnings.push_back("stage " + std::to_string(k) + ": refinement from the Q.D. seed failed (" + e.what() +
                           "); recovered with multi-start");
      } catch (const Error&) {
        rethrow_with_stage(e, k, "refine " + to_string(cfg.refine_method));
      }
    }
    out.stages.push_back({"refine[" + std::to_string(k) + "]", it.trace});
    try {
      cur = deflate_right(cur, it.x, cfg.deflation_gate).quotient;
    } catch (const Error& e) {
      rethrow_with_stage(e, k, "deflate");
    }
    out.chain.factors.push_back(std::move(it.x));
  }
  out.chain.factors.push_back(-cur.coeff(1));
  out.report = verify(p, out.chain);
  out.report.warnings.insert(out.report.warnings.begin(), warnings.begin(), warnings.end());
  return out;
}

FactorizeResult factorize_by_extraction(const MatrixPolynomial& p, RefineMethod method, const IterConfig& cfg,
                                        double deflation_gate) {
  require_monic(p);
  const std::size_t l = p.degree();
  if (l == 0) throw Error(ErrorCode::InvalidArgument, "cannot factorize a degree-0 polynomial");
  FactorizeResult out;
  MatrixPolynomial cur = p;
  for (std::size_t k = 0; k + 1 < l; ++k) {
    IterConfig c = cfg;
    c.seed = cfg.seed + k;
    IterResult it{Matrix(), {}};
    try {
      it = run_default(cur, method, c);
    } catch (const Error& e) {
      rethrow_with_stage(e, k, to_string(method));
    }
    out.stages.push_back({"extract[" + std::to_string(k) + "]", it.trace});
    try {
      cur = deflate_right(cur, it.x, deflation_gate).quotient;
    } catch (const Error& e) {
      rethrow_with_stage(e, k, "deflate");
    }
    out.chain.factors.push_back(std::move(it.x));
  }
  out.chain.factors.push_back(-cur.coeff(1));
  out.report = verify(p, out.chain);
  return out;
}

SolventSetsResult full_solvent_sets(const MatrixPolynomial& p, const PipelineConfig& cfg) {
  FactorizeResult f = full_factorize(p, cfg);
  SolventSetResult right;
  SolventSetResult left;
  try {
    right = chain_to_right_solvents(p, f.chain, cfg.transforms);
    left = chain_to_left_solvents(p, f.chain, cfg.transforms);
  } catch (const Error& e) {
    throw Error(e.code(), std::string("solvent transforms: ") + e.detail(), e.index());
  }
  VerificationReport report = f.report;
  report.right_solvent_residuals = right.residuals;
  report.left_solvent_residuals = left.residuals;
  report.right_completeness = is_complete_set(p, right.set);
  report.left_completeness = is_complete_set(p, left.set);
  return {right.set, left.set, std::move(report), std::move(f)};
}

namespace {

void add_reference_metrics(VerificationReport& r, const std::vector<Matrix>& got,
                           const std::optional<std::vector<Matrix>>& reference) {
  if (!reference) return;
  const std::size_t n = std::min(got.size(), reference->size());
  if (reference->size() != got.size()) r.warnings.push_back("reference count differs from the result count");
  for (std::size_t i = 0; i < n; ++i) {
    const double ref = frob_norm((*reference)[i]);
    const double denom = ref > 0.0 ? ref : 1.0;
    r.reference_norm_differences.push_back((ref - frob_norm(got[i])) / denom);
    r.reference_relative_errors.push_back(frob_norm(got[i] - (*reference)[i]) / denom);
  }
}

}  // namespace

VerificationReport verify(const MatrixPolynomial& p, const SpectralFactorChain& chain,
                          const std::optional<std::vector<Matrix>>& reference) {
  VerificationReport r;
  const double inf = std::numeric_limits<double>::infinity();
  if (chain.size() == 0 || chain.size() != p.degree() || !p.is_monic()) {
    r.warnings.push_back("chain length, order or monic form does not match the polynomial");
    r.reconstruction_error = inf;
    return r;
  }
  for (const auto& q : chain.factors) {
    if (q.rows() != p.order() || q.cols() != p.order()) {
      r.warnings.push_back("factor shape does not match the polynomial order");
      r.reconstruction_error = inf;
      return r;
    }
  }
  r.reconstruction_error = coefficient_error(p, reconstruct(chain));
  r.rightmost_residual = relative_residual(p, chain.factors.front());
  r.leftmost_residual = frob_norm(eval_left(p, chain.factors.back())) / p.residual_scale();
  MatrixPolynomial cur = p;
  for (std::size_t k = 0; k < chain.size(); ++k) {
    const DivisionResult div = synthetic_div_right(cur, chain.factors[k]);
    r.factor_residuals.push_back(frob_norm(div.remainder) / cur.residual_scale());
    if (k + 1 < chain.size()) cur = div.quotient;
  }
  add_reference_metrics(r, chain.factors, reference);
  return r;
}

VerificationReport verify(const MatrixPolynomial& p, const SolventSet& s,
                          const std::optional<std::vector<Matrix>>& reference) {
  VerificationReport r;
  std::vector<double>& res = s.side == Side::Right ? r.right_solvent_residuals : r.left_solvent_residuals;
  for (const auto& x : s.solvents) {
    const Matrix v = s.side == Side::Right ? eval_right(p, x) : eval_left(p, x);
    res.push_back(frob_norm(v) / p.residual_scale());
  }
  if (s.solvents.size() == p.degree() && p.is_monic()) {
    const CompletenessReport c = is_complete_set(p, s);
    (s.side == Side::Right ? r.right_completeness : r.left_completeness) = c;
    try {
      const ChainResult chain = s.side == Side::Right ? right_solvents_to_chain(p, s) : left_solvents_to_chain(p, s);
      r.reconstruction_error = chain.reconstruction_error;
    } catch (const Error& e) {
      r.reconstruction_error = std::numeric_limits<double>::infinity();
      r.warnings.push_back(std::string("solvents-to-chain failed: ") + e.what());
    }
  } else {
    r.reconstruction_error = std::numeric_limits<double>::infinity();
    r.warnings.push_back("solvent count does not match the degree");
  }
  add_reference_metrics(r, s.solvents, reference);
  return r;
}

}  // namespace blockroots
