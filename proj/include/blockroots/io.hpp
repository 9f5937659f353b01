#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "blockroots/decoupler.hpp"
#include "blockroots/matpoly.hpp"
#include "blockroots/pipeline.hpp"

namespace blockroots::io {

using nlohmann::json;

inline constexpr const char* kFormatVersion = "1.0";

json matrix_to_json(const Matrix& a);
// `what` names the value in parse diagnostics.
Matrix matrix_from_json(const json& j, const std::string& what, std::size_t rows, std::size_t cols);
Matrix square_matrix_from_json(const json& j, const std::string& what);

json polynomial_to_json(const MatrixPolynomial& p);
MatrixPolynomial polynomial_from_json(const json& j);

json chain_to_json(const SpectralFactorChain& chain, const MatrixPolynomial& p, bool converged = true);
SpectralFactorChain chain_from_json(const json& j);

json solvents_to_json(const SolventSet& s, const MatrixPolynomial& p);
SolventSet solvents_from_json(const json& j);

MFDSystem mfd_from_json(const json& j);
json mfd_to_json(const MFDSystem& sys);

json completeness_to_json(const CompletenessReport& c);
json report_to_json(const VerificationReport& r);

json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const json& j);

MatrixPolynomial read_polynomial_file(const std::filesystem::path& path);

}  // namespace blockroots::io
