#include "blockroots/qd.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <limits>
#include <string>

namespace blockroots {

const char* const kQDConventions =
    "E_i(0) = A_{i+1} A_i^{-1}; Q_i' = Q_i + E_i - E_{i-1}; E_i' = Q_{i+1}' E_i Q_i'^{-1}; "
    "q_row[0] is the dominant factor and the rightmost factor of the chain";

namespace {

Matrix invert_coefficient(const MatrixPolynomial& p, std::size_t k) {
  try {
    return invert(p.coeff(k));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SingularMatrix) throw;
    throw Error(ErrorCode::SingularCoefficient,
                "coefficient A_" + std::to_string(k) + " is singular", k);
  }
}

}  // namespace

QDTableau qd_init(const MatrixPolynomial& p) {
  require_monic(p);
  const std::size_t m = p.order(), l = p.degree();
  if (l == 0) throw Error(ErrorCode::InvalidArgument, "Q.D. needs degree >= 1");
  QDTableau t;
  t.m = m;
  t.l = l;
  t.q_row.assign(l, Matrix(m, m));
  t.q_row[0] = -p.coeff(1);
  t.e_row.assign(l + 1, Matrix(m, m));
  for (std::size_t i = 1; i < l; ++i) {
    t.e_row[i] = p.coeff(i + 1) * invert_coefficient(p, i);
  }
  return t;
}

namespace {

QDTableau sweep(const QDTableau& t, std::optional<std::size_t> jitter_at) {
  QDTableau n = t;
  const std::size_t l = t.l;
  // Q_i is flanked by E_{i-1} (left) and E_i (right); q_row[i] is Q_{i+1}.
  for (std::size_t i = 0; i < l; ++i) n.q_row[i] = t.q_row[i] + t.e_row[i + 1] - t.e_row[i];
  if (jitter_at) {
    Matrix& q = n.q_row[*jitter_at];
    const double s = 1e-8 * std::max(frob_norm(q), 1.0);
    for (std::size_t r = 0; r < q.rows(); ++r) q(r, r) += s * static_cast<double>(r + 1);
  }
  for (std::size_t i = 1; i < l; ++i) {
    Matrix inv;
    try {
      inv = invert(n.q_row[i - 1]);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::SingularMatrix) throw;
      throw Error(ErrorCode::SingularPivot,
                  "Q block " + std::to_string(i - 1) + " became singular at sweep " +
                      std::to_string(t.iteration + 1),
                  i - 1);
    }
    n.e_row[i] = n.q_row[i] * t.e_row[i] * inv;
  }
  n.iteration = t.iteration + 1;
  return n;
}

}  // namespace

QDTableau qd_step(const QDTableau& t) { return sweep(t, std::nullopt); }

double qd_max_rel_e(const QDTableau& t) {
  double worst = 0.0;
  for (std::size_t i = 1; i < t.l; ++i) {
    const double qn = std::max(frob_norm(t.q_row[i - 1]), std::numeric_limits<double>::min());
    worst = std::max(worst, frob_norm(t.e_row[i]) / qn);
  }
  return worst;
}

QDRun qd_iterate(const MatrixPolynomial& p, const QDConfig& cfg) {
  if (cfg.max_iterations < 1 || !(cfg.e_tol > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "Q.D. needs max_iterations >= 1 and e_tol > 0");
  }
  QDRun run;
  run.trace.conventions = kQDConventions;
  run.tableau = qd_init(p);
  auto record = [&run]() {
    std::vector<double> norms;
    for (std::size_t i = 1; i < run.tableau.l; ++i) norms.push_back(frob_norm(run.tableau.e_row[i]));
    run.trace.e_norms.push_back(std::move(norms));
    run.trace.max_rel_e.push_back(qd_max_rel_e(run.tableau));
  };
  record();
  if (run.trace.max_rel_e.back() <= cfg.e_tol) {
    run.status = QDStatus::Converged;
    run.trace.converged = true;
    return run;
  }
  double best = run.trace.max_rel_e.back();
  std::size_t best_at = 0;
  for (std::size_t k = 1; k <= cfg.max_iterations; ++k) {
    try {
      run.tableau = qd_step(run.tableau);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::SingularPivot || !cfg.retry_with_jitter) throw;
      run.tableau = sweep(run.tableau, e.index());
      run.trace.jitter_sweeps.push_back(k);
    }
    for (const auto& q : run.tableau.q_row) {
      if (!q.all_finite()) {
        throw Error(ErrorCode::NoConvergence, "Q.D. tableau overflowed at sweep " + std::to_string(k));
      }
    }
    record();
    const double cur = run.trace.max_rel_e.back();
    if (cur <= cfg.e_tol) {
      run.status = QDStatus::Converged;
      run.trace.converged = true;
      return run;
    }
    if (cur < best) {
      best = cur;
      best_at = k;
    } else if (k - best_at >= cfg.stall_window) {
      run.status = QDStatus::Stalled;
      return run;
    }
  }
  run.status = QDStatus::BudgetExhausted;
  return run;
}

QDResult qd_run(const MatrixPolynomial& p, const QDConfig& cfg) {
  QDRun run = qd_iterate(p, cfg);
  if (run.status != QDStatus::Converged) {
    const std::string why = run.status == QDStatus::Stalled ? "stalled" : "exhausted its sweep budget";
    const std::string msg = "Q.D. " + why + " after " + std::to_string(run.tableau.iteration) +
                            " sweeps (max relative E " + std::to_string(run.trace.max_rel_e.back()) + ")";
    throw QDNoConvergence(msg, std::move(run));
  }
  return {run.chain(), std::move(run.trace)};
}

Matrix lr_decompose_c3(const MatrixPolynomial& p) {
  const QDTableau t = qd_init(p);
  const std::size_t m = t.m, l = t.l;
  Matrix r(m * l, m * l);
  r.set_block(0, 0, -p.coeff(1));
  for (std::size_t i = 1; i < l; ++i) r.set_block(i * m, i * m, -t.e_row[i]);
  for (std::size_t i = 0; i + 1 < l; ++i) r.set_block(i * m, (i + 1) * m, Matrix::identity(m));
  return r;
}

}  // namespace blockroots
