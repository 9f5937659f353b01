#pragma once

#include <string>

#include "blockroots/io.hpp"

#ifndef BLOCKROOTS_FIXTURE_DIR
#error "BLOCKROOTS_FIXTURE_DIR must point at fixtures/"
#endif

namespace testsupport {

inline std::string fixture_path(const std::string& name) { return std::string(BLOCKROOTS_FIXTURE_DIR) + "/" + name; }

inline blockroots::MatrixPolynomial load_poly(const std::string& name) {
  return blockroots::io::read_polynomial_file(fixture_path(name));
}

inline blockroots::MFDSystem load_mfd(const std::string& name) {
  return blockroots::io::mfd_from_json(blockroots::io::read_json_file(fixture_path(name)));
}

// Printed matrices from the worked examples, 4-5 significant digits.
namespace printed {
using blockroots::Matrix;
inline const Matrix S1{{3, 2}, {-90, -15}};
inline const Matrix S2{{-8.2908, 0.7118}, {-16.84, 8.1248}};
inline const Matrix S3{{32.4434, -3.5284}, {286.6226, -31.2773}};
inline const Matrix R1{{0.3637, -4.5495}, {-0.8183, 0.8024}};
inline const Matrix R2{{7.2354, 1.4024}, {1.2995, -7.4015}};
inline const Matrix R3 = S1;
inline const Matrix L1{{32.443, -3.5284}, {286.622, -31.2773}};
inline const Matrix L2{{25.1323, -2.8370}, {204.5931, -25.2983}};
inline const Matrix L3{{21.0123, -4.6531}, {178.0910, -33.0123}};

// Example 2, with the two sign slips corrected (S1(1,1) = -2, S3(1,1) = -8).
inline const Matrix E2S1{{0, 1}, {-3.25, -2}};
inline const Matrix E2S2{{-5, 0}, {-1.6042, -7}};
inline const Matrix E2S3{{-6, 0}, {-1.8655, -8}};

inline const Matrix W{{-7.1230, -6.3246}, {5.9279, 5.1230}};
inline const Matrix E3X1{{-2.7323, -1.8068}, {1.6798, 0.7521}};
inline const Matrix E3X2{{-11.5138, -10.8424}, {10.1759, 9.4939}};

inline const Matrix E4X0{{5.2114, 4.8890}, {2.3159, 6.2406}};

inline const Matrix Z1{{24.7235, 23.1394}, {-27.4494, -24.9281}};
inline const Matrix Z2{{-18.5711, -16.0841}, {16.1166, 13.4353}};
inline const Matrix Dd2{{-13.5596, -14.6249}, {21.7809, 21.8999}};
inline const Matrix Dd1{{-126.4282, -121.5061}, {161.6710, 152.4741}};
inline const Matrix Dd0{{-178.9732, -164.0512}, {223.2851, 202.6227}};
}  // namespace printed

}  // namespace testsupport
