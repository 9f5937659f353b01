#include "blockroots/horner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

namespace blockroots {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double delta_pct(const Matrix& next, const Matrix& prev) {
  const double step = frob_norm(next - prev);
  const double base = frob_norm(prev);
  if (base == 0.0) return step == 0.0 ? 0.0 : 100.0;
  return 100.0 * step / base;
}

void validate(const MatrixPolynomial& p, const IterConfig& cfg) {
  require_monic(p);
  if (p.degree() == 0) throw Error(ErrorCode::InvalidArgument, "solvent iteration needs degree >= 1");
  if (!(cfg.eta > 0.0) || cfg.max_iterations < 1 || !(cfg.residual_tol > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "iteration needs eta > 0, residual_tol > 0 and max_iterations >= 1");
  }
  if (cfg.x0 && (cfg.x0->rows() != p.order() || cfg.x0->cols() != p.order())) {
    throw Error(ErrorCode::DimensionMismatch, "initial guess is " + cfg.x0->shape_string());
  }
}

// Shared driver: step(x) returns the next iterate or throws Error with the
// method's error code.
template <typename Step>
IterResult drive(const MatrixPolynomial& p, const IterConfig& cfg, Matrix x0, const char* method, Step step) {
  ConvergenceTrace tr;
  tr.method = method;
  tr.iterates.push_back(x0);
  tr.deltas.push_back(kNaN);
  tr.residuals.push_back(relative_residual(p, x0));
  tr.ratios.push_back(kNaN);
  Matrix x = std::move(x0);
  for (std::size_t k = 1; k <= cfg.max_iterations; ++k) {
    Matrix next;
    try {
      next = step(x);
    } catch (const Error& e) {
      throw IterationError(e.code(), std::string(method) + " step " + std::to_string(k) + ": " + e.detail(), tr);
    }
    if (!next.all_finite()) {
      throw IterationError(ErrorCode::NoConvergence,
                           std::string(method) + " diverged at step " + std::to_string(k), tr);
    }
    const double d = delta_pct(next, x);
    const double res = relative_residual(p, next);
    const double prev = tr.deltas.back();
    tr.ratios.push_back(k >= 2 && prev > 0.0 ? d / prev : kNaN);
    tr.iterates.push_back(next);
    tr.deltas.push_back(d);
    tr.residuals.push_back(res);
    x = std::move(next);
    if (d <= cfg.eta) {
      if (res <= cfg.residual_tol) {
        tr.converged = true;
        return {x, std::move(tr)};
      }
      throw IterationError(ErrorCode::StagnantWithoutResidual,
                           std::string(method) + ": step size fell below eta at step " + std::to_string(k) +
                               " with relative residual " + std::to_string(res),
                           tr);
    }
  }
  throw IterationError(ErrorCode::NoConvergence,
                       std::string(method) + " did not converge in " + std::to_string(cfg.max_iterations) +
                           " steps (relative residual " + std::to_string(tr.residuals.back()) + ")",
                       tr);
}

template <typename F>
auto remap_singular(ErrorCode code, const char* what, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SingularMatrix) throw;
    throw Error(code, what);
  }
}

}  // namespace

double relative_residual(const MatrixPolynomial& p, const Matrix& x) {
  return frob_norm(eval_right(p, x)) / p.residual_scale();
}

Matrix scaled_identity_guess(const MatrixPolynomial& p, std::uint64_t seed) {
  const std::size_t m = p.order(), l = p.degree();
  double tr = 0.0;
  for (std::size_t i = 0; i < m; ++i) tr += p.coeff(1)(i, i);
  const double s = -tr / static_cast<double>(l * m);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix x = Matrix::identity(m) * s;
  const double jitter = 1e-3 * std::max(1.0, std::abs(s));
  for (auto& v : x.data()) v += jitter * u(rng);
  return x;
}

IterResult horner_iterate(const MatrixPolynomial& p, const IterConfig& cfg) {
  validate(p, cfg);
  const std::size_t l = p.degree();
  Matrix x0 = cfg.x0 ? *cfg.x0 : Matrix(p.order(), p.order());
  return drive(p, cfg, std::move(x0), "horner", [&](const Matrix& x) {
    Matrix b = p.coeff(0);
    for (std::size_t k = 1; k < l; ++k) b = p.coeff(k) + b * x;
    return remap_singular(ErrorCode::SingularStep, "B_{l-1}(X) is singular",
                          [&] { return Matrix(-solve(b, p.trailing())); });
  });
}

Matrix frechet_matrix(const MatrixPolynomial& p, const Matrix& x) {
  require_monic(p);
  const std::size_t m = p.order(), l = p.degree();
  if (x.rows() != m || x.cols() != m) throw Error(ErrorCode::DimensionMismatch, "argument is " + x.shape_string());
  std::vector<Matrix> pw{Matrix::identity(m)};
  for (std::size_t k = 1; k < std::max<std::size_t>(l, 1); ++k) pw.push_back(pw.back() * x);
  std::vector<Matrix> pw_t;
  for (const auto& q : pw) pw_t.push_back(q.transpose());
  Matrix j(m * m, m * m);
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t k = 0; k + i + 1 <= l; ++k) {
      j += kron(pw_t[l - i - 1 - k], Matrix(p.coeff(i) * pw[k]));
    }
  }
  return j;
}

IterResult newton_horner(const MatrixPolynomial& p, const IterConfig& cfg, NewtonStep step) {
  validate(p, cfg);
  const std::size_t m = p.order();
  Matrix x0 = cfg.x0 ? *cfg.x0 : scaled_identity_guess(p, cfg.seed);
  const char* name = step == NewtonStep::Newton ? "newton-horner" : "newton-horner-crossbred";
  return drive(p, cfg, std::move(x0), name, [&](const Matrix& x) {
    const Matrix r = eval_right(p, x);
    const Matrix j = frechet_matrix(p, x);
    const Matrix h = remap_singular(ErrorCode::SingularFrechet, "Frechet matrix is singular",
                                    [&] { return unvec(solve(j, vec(r)), m, m); });
    if (step == NewtonStep::Newton) return Matrix(x - h);
    const Matrix q = remap_singular(ErrorCode::SingularALast, "A_l is singular",
                                    [&] { return solve(p.trailing(), r); });
    return Matrix(x + (x - h) * q);
  });
}

IterResult two_stage(const MatrixPolynomial& p, const IterConfig& cfg, TwoStageVariant variant) {
  validate(p, cfg);
  const std::size_t l = p.degree();
  Matrix x0 = cfg.x0 ? *cfg.x0 : scaled_identity_guess(p, cfg.seed);
  const char* name = variant == TwoStageVariant::QChain ? "two-stage-qchain" : "two-stage-delta";
  return drive(p, cfg, std::move(x0), name, [&](const Matrix& x) {
    Matrix b = p.coeff(0);
    Matrix c = b;
    for (std::size_t k = 1; k <= l; ++k) {
      b = p.coeff(k) + b * x;
      if (k < l) c = b + c * x;
    }
    if (variant == TwoStageVariant::DeltaForm) {
      c = p.coeff(0) * static_cast<double>(l);
      for (std::size_t k = 1; k < l; ++k) c = p.coeff(k) * static_cast<double>(l - k) + c * x;
    }
    return remap_singular(ErrorCode::SingularStep, "C_{l-1}(X) is singular",
                          [&] { return Matrix(x - right_divide(b, c)); });
  });
}

bool BoundsReport::sandwich_holds() const {
  return !holds.empty() && std::all_of(holds.begin(), holds.end(), [](bool h) { return h; });
}

BoundsReport convergence_bounds_check(const MatrixPolynomial& p, const ConvergenceTrace& trace) {
  const std::size_t n = trace.iterates.size();
  if (n < 5) {
    throw Error(ErrorCode::InsufficientTrace, "trace has " + std::to_string(n) + " iterates, need at least 5");
  }
  BoundsReport r;
  r.delta_norm = frob_norm(p.trailing());
  try {
    r.gamma = frob_norm(invert(p.trailing()));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SingularMatrix) throw;
    r.gamma = std::numeric_limits<double>::infinity();
  }
  const std::size_t first = n > 11 ? n - 11 : 0;
  for (std::size_t k = first; k + 1 < n; ++k) r.tail.push_back(k);
  for (std::size_t k : r.tail) {
    const Matrix& next = trace.iterates[k + 1];
    r.sup_x = std::max(r.sup_x, frob_norm(next));
    double inv_norm = std::numeric_limits<double>::infinity();
    try {
      inv_norm = frob_norm(invert(next));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::SingularMatrix) throw;
    }
    r.sup_x_inv = std::max(r.sup_x_inv, inv_norm);
  }
  // Both sides of the sandwich are exact identities up to rounding, so a
  // small absolute floor keeps roundoff-level tails from being flagged.
  const double floor = 1e-13 * p.residual_scale() * std::max(1.0, r.sup_x);
  for (std::size_t k : r.tail) {
    const double xi = frob_norm(trace.iterates[k + 1] - trace.iterates[k]);
    const double res = frob_norm(eval_right(p, trace.iterates[k]));
    const double lo = xi / (r.gamma * r.sup_x);
    const double hi = r.delta_norm * r.sup_x_inv * xi;
    r.lower.push_back(lo);
    r.residual.push_back(res);
    r.upper.push_back(hi);
    r.holds.push_back(lo <= res * (1.0 + 1e-9) + floor && res <= hi * (1.0 + 1e-9) + floor);
  }
  const Matrix& s = trace.iterates.back();
  for (std::size_t k = 0; k + 2 < n; ++k) {
    const double e0 = frob_norm(trace.iterates[k] - s);
    const double e1 = frob_norm(trace.iterates[k + 1] - s);
    if (e0 > 1e-12 * std::max(1.0, frob_norm(s)) && e1 > 0.0) r.error_ratios.push_back(e1 / e0);
  }
  if (!r.error_ratios.empty()) {
    std::vector<double> sorted = r.error_ratios;
    std::nth_element(sorted.begin(), sorted.begin() + sorted.size() / 2, sorted.end());
    r.ratio_trend = sorted[sorted.size() / 2];
  }
  return r;
}

}  // namespace blockroots
