#include "blockroots/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace blockroots::io {

namespace {

[[noreturn]] void parse_fail(const std::string& msg, std::optional<std::size_t> index = std::nullopt) {
  throw Error(ErrorCode::ParseError, msg, index);
}

std::size_t require_count(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key) || !j[key].is_number_unsigned()) {
    parse_fail(where + ": missing or invalid \"" + key + "\"");
  }
  return j[key].get<std::size_t>();
}

json number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

json numbers(const std::vector<double>& v) {
  json a = json::array();
  for (double x : v) a.push_back(number(x));
  return a;
}

std::vector<Matrix> coefficient_list(const json& arr, const std::string& what, std::size_t count, std::size_t m) {
  if (!arr.is_array()) parse_fail(what + " must be an array");
  if (arr.size() != count) {
    parse_fail(what + " has " + std::to_string(arr.size()) + " entries, expected " + std::to_string(count));
  }
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    try {
      out.push_back(matrix_from_json(arr[i], what + " " + std::to_string(i), m, m));
    } catch (const Error& e) {
      throw Error(ErrorCode::ParseError, e.detail(), i);
    }
  }
  return out;
}

void check_kind(const json& j, const char* kind) {
  if (!j.is_object()) parse_fail("top-level value must be an object");
  if (j.contains("kind") && j["kind"] != kind) {
    parse_fail(std::string("expected kind \"") + kind + "\", got " + j["kind"].dump());
  }
}

}  // namespace

json matrix_to_json(const Matrix& a) {
  json rows = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(number(a(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j, const std::string& what, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) {
    parse_fail(what + ": expected " + std::to_string(rows) + " rows");
  }
  std::vector<double> data;
  data.reserve(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const json& row = j[r];
    if (!row.is_array() || row.size() != cols) {
      parse_fail(what + ": row " + std::to_string(r) + " has " +
                 std::to_string(row.is_array() ? row.size() : 0) + " entries, expected " + std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) {
      if (!row[c].is_number()) parse_fail(what + ": entry (" + std::to_string(r) + "," + std::to_string(c) + ") is not a number");
      const double v = row[c].get<double>();
      if (!std::isfinite(v)) parse_fail(what + ": entry (" + std::to_string(r) + "," + std::to_string(c) + ") is not finite");
      data.push_back(v);
    }
  }
  return Matrix(rows, cols, std::move(data));
}

Matrix square_matrix_from_json(const json& j, const std::string& what) {
  if (!j.is_array() || j.empty()) parse_fail(what + ": expected a non-empty array of rows");
  return matrix_from_json(j, what, j.size(), j.size());
}

json polynomial_to_json(const MatrixPolynomial& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(matrix_to_json(c));
  return {{"format_version", kFormatVersion},
          {"kind", "matrix_polynomial"},
          {"order", p.order()},
          {"degree", p.degree()},
          {"coefficients", std::move(coeffs)}};
}

MatrixPolynomial polynomial_from_json(const json& j) {
  check_kind(j, "matrix_polynomial");
  const std::size_t m = require_count(j, "order", "polynomial");
  const std::size_t l = require_count(j, "degree", "polynomial");
  if (m == 0) parse_fail("polynomial: order must be at least 1");
  if (!j.contains("coefficients")) parse_fail("polynomial: missing \"coefficients\"");
  return MatrixPolynomial(coefficient_list(j["coefficients"], "coefficient", l + 1, m));
}

json chain_to_json(const SpectralFactorChain& chain, const MatrixPolynomial& p, bool converged) {
  json factors = json::array();
  for (const auto& q : chain.factors) factors.push_back(matrix_to_json(q));
  return {{"format_version", kFormatVersion},
          {"kind", "spectral_factor_chain"},
          {"ordering", "rightmost_first"},
          {"order", p.order()},
          {"degree", p.degree()},
          {"converged", converged},
          {"polynomial", polynomial_to_json(p)},
          {"factors", std::move(factors)}};
}

SpectralFactorChain chain_from_json(const json& j) {
  check_kind(j, "spectral_factor_chain");
  const std::size_t m = require_count(j, "order", "chain");
  const std::size_t l = require_count(j, "degree", "chain");
  if (!j.contains("factors")) parse_fail("chain: missing \"factors\"");
  return {coefficient_list(j["factors"], "factor", l, m)};
}

json solvents_to_json(const SolventSet& s, const MatrixPolynomial& p) {
  json xs = json::array();
  for (const auto& x : s.solvents) xs.push_back(matrix_to_json(x));
  return {{"format_version", kFormatVersion},
          {"kind", "solvent_set"},
          {"side", s.side == Side::Right ? "right" : "left"},
          {"ordering", "chain_index"},
          {"order", p.order()},
          {"degree", p.degree()},
          {"verified", s.verified},
          {"polynomial", polynomial_to_json(p)},
          {"solvents", std::move(xs)}};
}

SolventSet solvents_from_json(const json& j) {
  check_kind(j, "solvent_set");
  const std::size_t m = require_count(j, "order", "solvent set");
  const std::size_t l = require_count(j, "degree", "solvent set");
  if (!j.contains("side") || !j["side"].is_string()) parse_fail("solvent set: missing \"side\"");
  const std::string side = j["side"].get<std::string>();
  if (side != "right" && side != "left") parse_fail("solvent set: side must be \"right\" or \"left\"");
  if (!j.contains("solvents")) parse_fail("solvent set: missing \"solvents\"");
  SolventSet s;
  s.side = side == "right" ? Side::Right : Side::Left;
  s.solvents = coefficient_list(j["solvents"], "solvent", l, m);
  s.verified = j.value("verified", false);
  return s;
}

MFDSystem mfd_from_json(const json& j) {
  check_kind(j, "mfd");
  const std::size_t m = require_count(j, "order", "mfd");
  if (m == 0) parse_fail("mfd: order must be at least 1");
  auto part = [&](const char* key) {
    if (!j.contains(key) || !j[key].is_object()) parse_fail(std::string("mfd: missing \"") + key + "\"");
    const json& q = j[key];
    const std::size_t d = require_count(q, "degree", std::string("mfd ") + key);
    if (!q.contains("coefficients")) parse_fail(std::string("mfd ") + key + ": missing \"coefficients\"");
    return MatrixPolynomial(coefficient_list(q["coefficients"], std::string(key) + " coefficient", d + 1, m));
  };
  MFDSystem sys{part("numerator"), part("denominator")};
  validate_mfd(sys);
  return sys;
}

json mfd_to_json(const MFDSystem& sys) {
  auto part = [](const MatrixPolynomial& p) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(matrix_to_json(c));
    return json{{"degree", p.degree()}, {"coefficients", std::move(coeffs)}};
  };
  return {{"format_version", kFormatVersion},
          {"kind", "mfd"},
          {"order", sys.denominator.order()},
          {"numerator", part(sys.numerator)},
          {"denominator", part(sys.denominator)}};
}

json completeness_to_json(const CompletenessReport& c) {
  return {{"complete", c.complete()},
          {"spectrum_union_matches", c.spectrum_union_matches},
          {"pairwise_disjoint", c.pairwise_disjoint},
          {"vandermonde_det", number(c.vandermonde_det)},
          {"vandermonde_cond", number(c.vandermonde_cond)},
          {"spectrum_match_distance", number(c.spectrum_match_distance)},
          {"min_spectral_separation", number(c.min_spectral_separation)}};
}

json report_to_json(const VerificationReport& r) {
  json j{{"factor_residuals", numbers(r.factor_residuals)},
         {"right_solvent_residuals", numbers(r.right_solvent_residuals)},
         {"left_solvent_residuals", numbers(r.left_solvent_residuals)},
         {"reconstruction_error", number(r.reconstruction_error)},
         {"rightmost_residual", number(r.rightmost_residual)},
         {"leftmost_residual", number(r.leftmost_residual)},
         {"warnings", r.warnings}};
  if (r.right_completeness) j["right_completeness"] = completeness_to_json(*r.right_completeness);
  if (r.left_completeness) j["left_completeness"] = completeness_to_json(*r.left_completeness);
  if (!r.reference_norm_differences.empty()) {
    j["reference_norm_differences"] = numbers(r.reference_norm_differences);
    j["reference_relative_errors"] = numbers(r.reference_relative_errors);
  }
  return j;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path.string());
  out << j.dump(2) << '\n';
}

MatrixPolynomial read_polynomial_file(const std::filesystem::path& path) {
  const json j = read_json_file(path);
  if (j.is_object() && j.contains("polynomial") && !j.contains("coefficients")) {
    return polynomial_from_json(j["polynomial"]);
  }
  return polynomial_from_json(j);
}

}  // namespace blockroots::io
