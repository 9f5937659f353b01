#include "blockroots/trace.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

namespace blockroots {

std::vector<TraceRow> trace_rows(const std::string& stage, const ConvergenceTrace& t) {
  std::vector<TraceRow> rows;
  for (std::size_t k = 0; k < t.iterates.size(); ++k) {
    rows.push_back({stage, k, t.deltas.at(k), t.residuals.at(k), t.ratios.at(k)});
  }
  return rows;
}

std::vector<TraceRow> trace_rows(const std::string& stage, const QDTrace& t) {
  std::vector<TraceRow> rows;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t k = 0; k < t.max_rel_e.size(); ++k) {
    double largest = 0.0;
    for (double v : t.e_norms.at(k)) largest = std::max(largest, v);
    rows.push_back({stage, k, nan, t.max_rel_e[k], largest});
  }
  return rows;
}

namespace {

std::string csv_number(double v) {
  if (std::isnan(v)) return "";
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

}  // namespace

void write_trace_csv(std::ostream& os, const std::vector<TraceRow>& rows) {
  os << "stage,iteration,delta_pct,residual,aux\n";
  for (const auto& r : rows) {
    os << r.stage << ',' << r.iteration << ',' << csv_number(r.delta_pct) << ','
       << csv_number(r.residual) << ',' << csv_number(r.aux) << '\n';
  }
}

}  // namespace blockroots
