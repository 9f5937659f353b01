#include "blockroots/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace blockroots {

namespace {

void require_factor_shapes(const MatrixPolynomial& p, const std::vector<Matrix>& xs, const char* what) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i].rows() != p.order() || xs[i].cols() != p.order()) {
      throw Error(ErrorCode::DimensionMismatch,
                  std::string(what) + " " + std::to_string(i) + " has shape " + xs[i].shape_string(), i);
    }
  }
}

std::vector<Matrix> powers(const Matrix& x, std::size_t count) {
  std::vector<Matrix> pw{Matrix::identity(x.rows())};
  for (std::size_t k = 1; k < count; ++k) pw.push_back(pw.back() * x);
  return pw;
}

// Minimum pairwise eigenvalue distance between the given blocks, and the
// index of the first block involved in the closest pair.
std::pair<double, std::size_t> closest_spectra(const std::vector<Matrix>& xs, double& scale) {
  std::vector<ComplexScalarList> spectra;
  for (const auto& x : xs) {
    spectra.push_back(eigvals(x));
    scale = std::max(scale, max_modulus(spectra.back()));
  }
  double best = std::numeric_limits<double>::infinity();
  std::size_t at = 0;
  for (std::size_t i = 0; i < spectra.size(); ++i) {
    for (std::size_t j = i + 1; j < spectra.size(); ++j) {
      const double d = min_cross_distance(spectra[i], spectra[j]);
      if (d < best) {
        best = d;
        at = i;
      }
    }
  }
  return {best, at};
}

Matrix solve_kronecker(const Matrix& system, std::size_t m, ErrorCode code, std::size_t index,
                       const char* what) {
  try {
    return unvec(solve(system, vec(Matrix::identity(m))), m, m);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SingularMatrix) throw;
    throw Error(code, std::string(what) + " " + std::to_string(index) + " is singular", index);
  }
}

}  // namespace

TransformResult right_to_left_solvent(const MatrixPolynomial& p, const Matrix& r, const TransformOptions& opts) {
  require_monic(p);
  require_factor_shapes(p, {r}, "solvent");
  const std::size_t m = p.order(), l = p.degree();
  const double scale = p.residual_scale();
  const DivisionResult div = synthetic_div_right(p, r);
  const double input_res = frob_norm(div.remainder) / scale;
  if (input_res > opts.residual_gate) {
    throw Error(ErrorCode::InputNotSolvent,
                "relative residual " + std::to_string(input_res) + " exceeds the gate");
  }
  const std::vector<Matrix> pw = powers(r, l);
  Matrix k(m * m, m * m);
  for (std::size_t i = 0; i < l; ++i) k += kron(div.quotient.coeff(i).transpose(), pw[l - 1 - i]);
  TransformResult out;
  out.transformer = solve_kronecker(k, m, ErrorCode::SingularKroneckerSystem, 0, "Kronecker system");
  out.rank_ok = full_rank(out.transformer, opts.rank_tol);
  if (!out.rank_ok) throw Error(ErrorCode::RankDeficientQ, "similarity matrix Q is rank deficient");
  out.output = solve(out.transformer, Matrix(r * out.transformer));
  out.residual = frob_norm(eval_left(p, out.output)) / scale;
  if (out.residual > opts.residual_gate) {
    throw Error(ErrorCode::ResidualTooLarge,
                "left solvent residual " + std::to_string(out.residual) + " exceeds the gate");
  }
  return out;
}

namespace {

void check_chain(const MatrixPolynomial& p, const SpectralFactorChain& chain, const TransformOptions& opts) {
  require_monic(p);
  if (chain.size() != p.degree()) {
    throw Error(ErrorCode::DimensionMismatch, "chain has " + std::to_string(chain.size()) +
                                                  " factors for a degree " + std::to_string(p.degree()) +
                                                  " polynomial");
  }
  require_factor_shapes(p, chain.factors, "factor");
  double scale = 1.0;
  const auto [gap, at] = closest_spectra(chain.factors, scale);
  if (gap <= opts.spectrum_tol * scale) {
    throw Error(ErrorCode::SpectrumOverlap, "factor spectra are not pairwise disjoint", at);
  }
}

}  // namespace

SolventSetResult chain_to_right_solvents(const MatrixPolynomial& p, const SpectralFactorChain& chain,
                                         const TransformOptions& opts) {
  check_chain(p, chain, opts);
  const std::size_t m = p.order(), l = p.degree();
  const double scale = p.residual_scale();
  SolventSetResult out;
  out.set.side = Side::Right;
  out.set.solvents.assign(l, Matrix());
  out.transformers.assign(l, Matrix());
  out.residuals.assign(l, 0.0);
  out.system_conditions.assign(l, 0.0);
  // Peel factors off the left: cur = (λI - U) N(λ), then solve
  // Σ_j N_j P U^{d-1-j} = I and set R = P U P^{-1}.
  MatrixPolynomial cur = p;
  for (std::size_t s = 0; s < l; ++s) {
    const std::size_t idx = l - 1 - s;
    const Matrix& u = chain.factors[idx];
    const std::size_t d = cur.degree();
    const DivisionResult div = synthetic_div_left(cur, u);
    if (frob_norm(div.remainder) / scale > opts.residual_gate) {
      throw Error(ErrorCode::DeflationResidualLarge,
                  "factor " + std::to_string(idx) + " does not divide the polynomial on the left", idx);
    }
    const std::vector<Matrix> pw = powers(u, d);
    Matrix g(m * m, m * m);
    for (std::size_t j = 0; j < d; ++j) g += kron(pw[d - 1 - j].transpose(), div.quotient.coeff(j));
    out.system_conditions[idx] = cond_frob(g);
    const Matrix pmat = solve_kronecker(g, m, ErrorCode::RankDeficientG, idx, "system G for factor");
    if (!full_rank(pmat, opts.rank_tol)) {
      throw Error(ErrorCode::RankDeficientG, "transformer P for factor " + std::to_string(idx) + " is rank deficient", idx);
    }
    Matrix r = right_divide(Matrix(pmat * u), pmat);
    out.residuals[idx] = frob_norm(eval_right(p, r)) / scale;
    if (out.residuals[idx] > opts.residual_gate) {
      throw Error(ErrorCode::ResidualTooLarge,
                  "right solvent " + std::to_string(idx) + " residual " + std::to_string(out.residuals[idx]), idx);
    }
    out.set.solvents[idx] = std::move(r);
    out.transformers[idx] = pmat;
    if (d > 1) cur = div.quotient;
  }
  out.set.verified = true;
  return out;
}

SolventSetResult chain_to_left_solvents(const MatrixPolynomial& p, const SpectralFactorChain& chain,
                                        const TransformOptions& opts) {
  check_chain(p, chain, opts);
  const std::size_t m = p.order(), l = p.degree();
  const double scale = p.residual_scale();
  SolventSetResult out;
  out.set.side = Side::Left;
  out.set.solvents.assign(l, Matrix());
  out.transformers.assign(l, Matrix());
  out.residuals.assign(l, 0.0);
  out.system_conditions.assign(l, 0.0);
  // Peel factors off the right: cur = M(λ)(λI - U), then solve
  // Σ_j U^{d-1-j} S M_j = I and set L = S^{-1} U S.
  MatrixPolynomial cur = p;
  for (std::size_t idx = 0; idx < l; ++idx) {
    const Matrix& u = chain.factors[idx];
    const std::size_t d = cur.degree();
    const DivisionResult div = synthetic_div_right(cur, u);
    if (frob_norm(div.remainder) / scale > opts.residual_gate) {
      throw Error(ErrorCode::DeflationResidualLarge,
                  "factor " + std::to_string(idx) + " does not divide the polynomial on the right", idx);
    }
    const std::vector<Matrix> pw = powers(u, d);
    Matrix h(m * m, m * m);
    for (std::size_t j = 0; j < d; ++j) h += kron(div.quotient.coeff(j).transpose(), pw[d - 1 - j]);
    out.system_conditions[idx] = cond_frob(h);
    const Matrix smat = solve_kronecker(h, m, ErrorCode::RankDeficientG, idx, "system H for factor");
    if (!full_rank(smat, opts.rank_tol)) {
      throw Error(ErrorCode::RankDeficientG, "transformer S for factor " + std::to_string(idx) + " is rank deficient", idx);
    }
    Matrix lsol = solve(smat, Matrix(u * smat));
    out.residuals[idx] = frob_norm(eval_left(p, lsol)) / scale;
    if (out.residuals[idx] > opts.residual_gate) {
      throw Error(ErrorCode::ResidualTooLarge,
                  "left solvent " + std::to_string(idx) + " residual " + std::to_string(out.residuals[idx]), idx);
    }
    out.set.solvents[idx] = std::move(lsol);
    out.transformers[idx] = smat;
    if (d > 1) cur = div.quotient;
  }
  out.set.verified = true;
  return out;
}

namespace {

void check_set(const MatrixPolynomial& p, const SolventSet& s, Side side, const TransformOptions& opts) {
  require_monic(p);
  if (s.side != side) throw Error(ErrorCode::IncompleteSet, "solvent set has the wrong side");
  if (s.solvents.size() != p.degree()) {
    throw Error(ErrorCode::IncompleteSet, "set has " + std::to_string(s.solvents.size()) +
                                              " solvents for a degree " + std::to_string(p.degree()) +
                                              " polynomial");
  }
  require_factor_shapes(p, s.solvents, "solvent");
  double scale = 1.0;
  const auto [gap, at] = closest_spectra(s.solvents, scale);
  if (gap <= opts.spectrum_tol * scale) {
    throw Error(ErrorCode::IncompleteSet, "solvent spectra are not pairwise disjoint", at);
  }
}

}  // namespace

ChainResult right_solvents_to_chain(const MatrixPolynomial& p, const SolventSet& s, const TransformOptions& opts) {
  check_set(p, s, Side::Right, opts);
  const std::size_t m = p.order(), l = p.degree();
  ChainResult out;
  // values[j] = N_{k}(λ) evaluated on the right at R_j, with N_0 = I and
  // N_k(λ) = (λI - Q_k) N_{k-1}(λ).
  std::vector<Matrix> values(l, Matrix::identity(m));
  for (std::size_t k = 0; k < l; ++k) {
    const Matrix& t = values[k];
    if (!full_rank(t, opts.rank_tol)) {
      throw Error(ErrorCode::RankDeficientTransformer, "N(R_" + std::to_string(k) + ") is rank deficient", k);
    }
    Matrix q = right_divide(Matrix(t * s.solvents[k]), t);
    for (std::size_t j = k + 1; j < l; ++j) values[j] = values[j] * s.solvents[j] - q * values[j];
    out.transformers.push_back(t);
    out.chain.factors.push_back(std::move(q));
  }
  out.reconstruction_error = coefficient_error(p, reconstruct(out.chain));
  return out;
}

ChainResult left_solvents_to_chain(const MatrixPolynomial& p, const SolventSet& s, const TransformOptions& opts) {
  check_set(p, s, Side::Left, opts);
  const std::size_t m = p.order(), l = p.degree();
  ChainResult out;
  out.chain.factors.assign(l, Matrix());
  out.transformers.assign(l, Matrix());
  // Built from the left: M_k(λ) = M_{k-1}(λ)(λI - Q), evaluated on the
  // left at each remaining L_j. The leftmost solvent L_{l-1} goes first.
  std::vector<Matrix> values(l, Matrix::identity(m));
  for (std::size_t k = l; k-- > 0;) {
    const Matrix& t = values[k];
    if (!full_rank(t, opts.rank_tol)) {
      throw Error(ErrorCode::RankDeficientTransformer, "M(L_" + std::to_string(k) + ") is rank deficient", k);
    }
    Matrix q = solve(t, Matrix(s.solvents[k] * t));
    for (std::size_t j = 0; j < k; ++j) values[j] = s.solvents[j] * values[j] - values[j] * q;
    out.transformers[k] = t;
    out.chain.factors[k] = std::move(q);
  }
  out.reconstruction_error = coefficient_error(p, reconstruct(out.chain));
  return out;
}

namespace {

Deflation deflate(const MatrixPolynomial& p, const Matrix& q, double gate, bool right) {
  require_monic(p);
  const DivisionResult div = right ? synthetic_div_right(p, q) : synthetic_div_left(p, q);
  const double rem = frob_norm(div.remainder) / p.residual_scale();
  if (rem > gate) {
    throw Error(ErrorCode::ResidualTooLarge,
                std::string(right ? "right" : "left") + " deflation remainder " + std::to_string(rem) +
                    " exceeds the gate");
  }
  return {div.quotient, rem};
}

}  // namespace

Deflation deflate_right(const MatrixPolynomial& p, const Matrix& q, double gate) { return deflate(p, q, gate, true); }

Deflation deflate_left(const MatrixPolynomial& p, const Matrix& q, double gate) { return deflate(p, q, gate, false); }

}  // namespace blockroots
