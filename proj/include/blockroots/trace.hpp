#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "blockroots/matrix.hpp"

namespace blockroots {

// Iterates X_0..X_n of a single-solvent iteration. deltas[k], residuals[k]
// and ratios[k] describe X_k; deltas[0] and ratios[0..1] are undefined and
// stored as NaN.
struct ConvergenceTrace {
  std::string method;
  std::vector<Matrix> iterates;
  std::vector<double> deltas;     // 100 ||X_k - X_{k-1}||_F / ||X_{k-1}||_F
  std::vector<double> residuals;  // ||A_R(X_k)||_F / max(1, ||A_l||_F)
  std::vector<double> ratios;     // deltas[k] / deltas[k-1]
  bool converged = false;

  std::size_t steps() const noexcept { return iterates.empty() ? 0 : iterates.size() - 1; }
};

// Per-sweep record of a Q.D. run.
struct QDTrace {
  std::string conventions;
  std::vector<std::vector<double>> e_norms;  // interior ||E_i||_F per sweep
  std::vector<double> max_rel_e;             // max_i ||E_i||_F / ||Q_i||_F
  std::vector<std::size_t> jitter_sweeps;
  bool converged = false;
};

// One CSV row: stage,iteration,delta_pct,residual,aux.
struct TraceRow {
  std::string stage;
  std::size_t iteration = 0;
  double delta_pct = 0.0;
  double residual = 0.0;
  double aux = 0.0;
};

std::vector<TraceRow> trace_rows(const std::string& stage, const ConvergenceTrace& t);
std::vector<TraceRow> trace_rows(const std::string& stage, const QDTrace& t);
void write_trace_csv(std::ostream& os, const std::vector<TraceRow>& rows);

}  // namespace blockroots
