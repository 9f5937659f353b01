#pragma once

#include <cstddef>
#include <vector>

#include "blockroots/matpoly.hpp"
#include "blockroots/trace.hpp"

namespace blockroots {

// One Q-row and one E-row of the block quotient-difference scheme.
// e_row holds E_0..E_l; the boundary blocks E_0 and E_l stay zero.
struct QDTableau {
  std::size_t m = 0;
  std::size_t l = 0;
  std::vector<Matrix> q_row;
  std::vector<Matrix> e_row;
  std::size_t iteration = 0;
};

struct QDConfig {
  std::size_t max_iterations = 200;
  double e_tol = 1e-10;
  std::size_t stall_window = 20;
  // Perturb a singular Q pivot by 1e-8 ||Q|| and redo the sweep once.
  bool retry_with_jitter = false;
};

enum class QDStatus { Converged, BudgetExhausted, Stalled };

struct QDRun {
  QDStatus status = QDStatus::BudgetExhausted;
  QDTableau tableau;
  QDTrace trace;

  // Q-row as a chain; the dominant factor comes first, i.e. rightmost.
  SpectralFactorChain chain() const { return {tableau.q_row}; }
};

extern const char* const kQDConventions;

QDTableau qd_init(const MatrixPolynomial& p);
QDTableau qd_step(const QDTableau& t);

// max_i ||E_i||_F / ||Q_i||_F over interior E blocks.
double qd_max_rel_e(const QDTableau& t);

// Runs sweeps until convergence, stall, or budget; never throws on
// non-convergence. Singular pivots still throw.
QDRun qd_iterate(const MatrixPolynomial& p, const QDConfig& cfg);

struct QDResult {
  SpectralFactorChain chain;
  QDTrace trace;
};

// Throws QDNoConvergence when the run does not converge.
QDResult qd_run(const MatrixPolynomial& p, const QDConfig& cfg);

class QDNoConvergence : public Error {
 public:
  QDNoConvergence(const std::string& message, QDRun run)
      : Error(ErrorCode::NoConvergence, message), run_(std::move(run)) {}
  const QDRun& run() const noexcept { return run_; }

 private:
  QDRun run_;
};

// R_0 of the LR decomposition of C_3: block upper bidiagonal with
// diagonal -A_1, -A_2 A_1^{-1}, ..., -A_l A_{l-1}^{-1} and identity
// superdiagonal blocks.
Matrix lr_decompose_c3(const MatrixPolynomial& p);

}  // namespace blockroots
