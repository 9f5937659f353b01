#include <gtest/gtest.h>

#include <cmath>

#include "blockroots/matpoly.hpp"
#include "fixtures.hpp"
#include "test_support.hpp"

using namespace blockroots;
using testsupport::random_matrix;
using testsupport::rel_diff;
namespace pr = testsupport::printed;

namespace {

MatrixPolynomial random_monic(std::mt19937_64& rng, std::size_t m, std::size_t l) {
  std::vector<Matrix> tail;
  for (std::size_t i = 0; i < l; ++i) tail.push_back(random_matrix(rng, m, m, 2.0));
  return MatrixPolynomial::monic(tail);
}

MatrixPolynomial scalar(std::vector<double> c) {
  std::vector<Matrix> coeffs;
  for (double v : c) coeffs.push_back(Matrix{{v}});
  return MatrixPolynomial(coeffs);
}

}  // namespace

TEST(MatrixPolynomial, ConstructionValidates) {
  EXPECT_THROW(MatrixPolynomial({}), Error);
  try {
    MatrixPolynomial({Matrix::identity(2), Matrix(2, 3)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
    EXPECT_EQ(e.index().value_or(99), 1u);
  }
  EXPECT_FALSE(MatrixPolynomial({Matrix{{2.0}}, Matrix{{1.0}}}).is_monic());
  EXPECT_THROW(require_monic(MatrixPolynomial({Matrix{{2.0}}, Matrix{{1.0}}})), Error);
}

TEST(MatrixPolynomial, PointEvaluation) {
  const auto p = scalar({1, -3, 2});
  EXPECT_DOUBLE_EQ(p.at(3.0)(0, 0), 2.0);
  EXPECT_NEAR(std::abs(p.at(std::complex<double>(0, 1))(0, 0) - std::complex<double>(1, -3)), 0.0, 1e-15);
}

TEST(Eval, LinearFactorAtItsRoot) {
  const Matrix c{{1, 2}, {3, 4}};
  const auto p = MatrixPolynomial::monic({-c});
  EXPECT_EQ(eval_right(p, c), Matrix(2, 2));
  EXPECT_EQ(eval_left(p, c), Matrix(2, 2));
}

TEST(Eval, ScalarQuadraticAtRoot) {
  EXPECT_EQ(eval_right(scalar({1, -3, 2}), Matrix{{2.0}}), Matrix{{0.0}});
  EXPECT_EQ(eval_left(scalar({1, -3, 2}), Matrix{{2.0}}), Matrix{{0.0}});
}

TEST(Eval, HornerMatchesExplicitPowers) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 10; ++t) {
    const auto p = random_monic(rng, 1 + t % 3, 1 + t % 4);
    const Matrix x = random_matrix(rng, p.order(), p.order());
    EXPECT_LT(frob_norm(eval_right(p, x) - testsupport::naive_eval_right(p, x)), 1e-10);
    EXPECT_LT(frob_norm(eval_left(p, x) - testsupport::naive_eval_left(p, x)), 1e-10);
  }
}

TEST(Eval, ScalarLeftEqualsRight) {
  std::mt19937_64 rng(12);
  const auto p = random_monic(rng, 1, 4);
  const Matrix x{{0.7}};
  EXPECT_EQ(eval_left(p, x), eval_right(p, x));
}

TEST(Eval, ExampleThreeAtPrintedW) {
  // Coefficients carry 4 digits; the printed base matrix leaves ~1.2e-3.
  const auto p = testsupport::load_poly("example3.json");
  EXPECT_LT(frob_norm(eval_right(p, pr::W)), 2e-3);
}

TEST(Eval, ExampleOneAtPrintedLeftSolvent) {
  const auto p = testsupport::load_poly("example1.json");
  EXPECT_LT(frob_norm(eval_left(p, pr::L1)) / frob_norm(p.trailing()), 1e-2);
}

TEST(Division, KnownQuadratic) {
  const Matrix c{{1, 2}, {0, 3}}, d{{-1, 0}, {4, 2}};
  const auto p = MatrixPolynomial::monic({-(c + d), d * c});
  const auto r = synthetic_div_right(p, c);
  EXPECT_LT(frob_norm(r.remainder), 1e-14);
  EXPECT_LT(frob_norm(r.quotient.coeff(1) + d), 1e-14);
  EXPECT_TRUE(r.quotient.is_monic());
}

TEST(Division, IdentityHoldsAtRandomLambda) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int t = 0; t < 12; ++t) {
    const std::size_t m = 1 + t % 3, l = 1 + (t / 3) % 3;
    const auto p = random_monic(rng, m, l);
    const Matrix x = random_matrix(rng, m, m);
    const auto r = synthetic_div_right(p, x);
    const auto lt = synthetic_div_left(p, x);
    EXPECT_LT(frob_norm(r.remainder - eval_right(p, x)), 1e-12);
    EXPECT_LT(frob_norm(lt.remainder - eval_left(p, x)), 1e-12);
    for (int k = 0; k < 10; ++k) {
      const double lam = u(rng);
      const Matrix lin = Matrix::identity(m) * lam - x;
      EXPECT_LT(frob_norm(p.at(lam) - (r.quotient.at(lam) * lin + r.remainder)), 1e-8);
      EXPECT_LT(frob_norm(p.at(lam) - (lin * lt.quotient.at(lam) + lt.remainder)), 1e-8);
    }
  }
}

TEST(Division, ExampleOneByPrintedRightmostSolvent) {
  const auto p = testsupport::load_poly("example1.json");
  const auto r = synthetic_div_right(p, pr::R3);
  EXPECT_LT(frob_norm(r.remainder) / frob_norm(p.trailing()), 1e-2);
  EXPECT_EQ(r.quotient.degree(), 2u);
  EXPECT_LT(frob_norm(r.quotient.coeff(1) - (p.coeff(1) + pr::R3)), 1e-12);
}

TEST(Division, DegreeZeroRejected) {
  EXPECT_THROW(synthetic_div_right(MatrixPolynomial({Matrix::identity(1)}), Matrix{{1.0}}), Error);
}

TEST(Companion, ScalarQuadratic) {
  const auto p = scalar({1, -3, 2});
  EXPECT_EQ(companion_right(p), (Matrix{{0, 1}, {-2, 3}}));
  auto ev = eigvals(companion_right(p));
  std::sort(ev.begin(), ev.end(), [](auto a, auto b) { return a.real() < b.real(); });
  EXPECT_NEAR(ev[0].real(), 1.0, 1e-14);
  EXPECT_NEAR(ev[1].real(), 2.0, 1e-14);
}

TEST(Companion, LeftIsBlockTransposeOfRight) {
  const auto p = testsupport::load_poly("example1.json");
  const Matrix r = companion_right(p), l = companion_left(p);
  const std::size_t m = 2, n = 3;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) EXPECT_EQ(l.block(i * m, j * m, m, m), r.block(j * m, i * m, m, m));
}

TEST(Companion, C3Layout) {
  const auto p = testsupport::load_poly("example1.json");
  const Matrix c = companion_c3(p);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(c.block(i * 2, 0, 2, 2), -p.coeff(i + 1));
  EXPECT_EQ(c.block(0, 2, 2, 2), Matrix::identity(2));
  EXPECT_EQ(c.block(2, 4, 2, 2), Matrix::identity(2));
  EXPECT_THROW(companion_right(MatrixPolynomial({Matrix{{2.0}}, Matrix{{1.0}}})), Error);
}

TEST(Vandermonde, Shapes) {
  EXPECT_EQ(block_vandermonde({Side::Right, {Matrix{{5.0}}}, false}), Matrix::identity(1));
  EXPECT_EQ(block_vandermonde({Side::Right, {Matrix{{1.0}}, Matrix{{2.0}}}, false}), (Matrix{{1, 1}, {1, 2}}));
  EXPECT_EQ(block_vandermonde({Side::Left, {Matrix{{1.0}}, Matrix{{2.0}}}, false}), (Matrix{{1, 1}, {1, 2}}));
  const Matrix a{{1, 2}, {3, 4}}, b{{0, 1}, {1, 0}};
  const Matrix vr = block_vandermonde({Side::Right, {a, b}, false});
  EXPECT_EQ(vr.block(2, 0, 2, 2), a);
  EXPECT_EQ(vr.block(2, 2, 2, 2), b);
  const Matrix vl = block_vandermonde({Side::Left, {a, b}, false});
  EXPECT_EQ(vl.block(0, 2, 2, 2), a);
  EXPECT_EQ(vl.block(2, 2, 2, 2), b);
}

TEST(Completeness, ScalarCases) {
  const auto p = scalar({1, -3, 2});
  EXPECT_TRUE(is_complete_set(p, {Side::Right, {Matrix{{1.0}}, Matrix{{2.0}}}, false}).complete());
  const auto bad = is_complete_set(p, {Side::Right, {Matrix{{1.0}}, Matrix{{1.0}}}, false});
  EXPECT_FALSE(bad.complete());
  EXPECT_FALSE(bad.pairwise_disjoint);
  EXPECT_EQ(bad.vandermonde_det, 0.0);
}

TEST(Reconstruct, SingleAndTwoFactors) {
  const Matrix c{{1, 2}, {0, 3}}, d{{-1, 0}, {4, 2}};
  const auto one = reconstruct({{c}});
  EXPECT_EQ(one.coeff(1), -c);
  const auto two = reconstruct({{c, d}});
  EXPECT_LT(frob_norm(two.coeff(1) + c + d), 1e-14);
  EXPECT_LT(frob_norm(two.coeff(2) - d * c), 1e-14);
  EXPECT_THROW(reconstruct({{c, Matrix::identity(3)}}), Error);
}

TEST(Reconstruct, ExampleTwoPrintedFactors) {
  // Printed S1 and S3 each carry one sign slip; with those corrected the
  // rightmost-first chain reproduces the coefficients.
  const auto p = testsupport::load_poly("example2.json");
  EXPECT_LT(coefficient_error(p, reconstruct({{pr::E2S1, pr::E2S2, pr::E2S3}})), 1e-2);
}

TEST(Reconstruct, LatentRootsAreUnionOfFactorSpectra) {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 10; ++t) {
    const std::size_t m = 1 + t % 3, l = 1 + t % 3;
    SpectralFactorChain chain;
    ComplexScalarList all;
    for (std::size_t k = 0; k < l; ++k) {
      chain.factors.push_back(random_matrix(rng, m, m, 3.0));
      for (auto z : testsupport::eigen_eigvals(chain.factors.back())) all.push_back(z);
    }
    const auto p = reconstruct(chain);
    EXPECT_LT(testsupport::spectrum_distance(latent_roots(p), all), 1e-6);
    // The rightmost factor is a right solvent.
    EXPECT_LT(frob_norm(eval_right(p, chain.factors.front())), 1e-10);
    EXPECT_LT(frob_norm(eval_left(p, chain.factors.back())), 1e-10);
  }
}

TEST(Multiply, MatchesPointwiseProduct) {
  std::mt19937_64 rng(15);
  const auto a = random_monic(rng, 2, 2), b = random_monic(rng, 2, 1);
  const auto ab = multiply(a, b);
  EXPECT_EQ(ab.degree(), 3u);
  for (double lam : {-1.5, 0.0, 0.3, 2.0}) EXPECT_LT(frob_norm(ab.at(lam) - a.at(lam) * b.at(lam)), 1e-12);
}

TEST(LatentRoots, Examples) {
  auto r = latent_roots(MatrixPolynomial::monic({Matrix{{-1, 0}, {0, -2}}}));
  std::sort(r.begin(), r.end(), [](auto a, auto b) { return a.real() < b.real(); });
  EXPECT_NEAR(r[0].real(), 1.0, 1e-15);
  EXPECT_NEAR(r[1].real(), 2.0, 1e-15);
  const auto c = latent_roots(scalar({1, 0, 1}));
  EXPECT_NEAR(std::abs(c[0].imag()), 1.0, 1e-15);
  EXPECT_NEAR(c[0].imag(), -c[1].imag(), 1e-15);
}

TEST(LatentRoots, ExampleThreeIsDoubledSpectrumOfW) {
  const auto p = testsupport::load_poly("example3.json");
  auto w = testsupport::eigen_eigvals(pr::W);
  w.insert(w.end(), w.begin(), w.end());
  // Four-digit rounding splits the double root by a few 1e-2.
  EXPECT_LT(testsupport::spectrum_distance(latent_roots(p), w), 5e-2);
}

TEST(CoefficientError, MismatchIsInfinite) {
  EXPECT_TRUE(std::isinf(coefficient_error(scalar({1, 2}), scalar({1, 2, 3}))));
  EXPECT_EQ(coefficient_error(scalar({1, 2}), scalar({1, 2})), 0.0);
}
