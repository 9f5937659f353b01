#include <gtest/gtest.h>

#include <cmath>

#include "blockroots/error.hpp"
#include "blockroots/linalg.hpp"
#include "test_support.hpp"

using namespace blockroots;
using testsupport::random_matrix;
using testsupport::to_eigen;

TEST(Matrix, ConstructorRejectsRaggedAndNonFinite) {
  EXPECT_THROW(Matrix({{1.0, 2.0}, {3.0}}), Error);
  try {
    Matrix(1, 2, {1.0, std::nan("")});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonFiniteEntry);
  }
}

TEST(Matrix, ArithmeticMatchesEigen) {
  std::mt19937_64 rng(1);
  const Matrix a = random_matrix(rng, 3, 4), b = random_matrix(rng, 4, 2);
  const Eigen::MatrixXd ref = to_eigen(a) * to_eigen(b);
  EXPECT_LT((to_eigen(a * b) - ref).norm(), 1e-14);
  EXPECT_THROW(a * a, Error);
}

TEST(Linalg, SolveAndInvertMatchEigen) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const Matrix a = random_matrix(rng, n, n) + Matrix::identity(n) * 2.0;
    const Matrix b = random_matrix(rng, n, 3);
    const Eigen::MatrixXd x = to_eigen(a).partialPivLu().solve(to_eigen(b));
    EXPECT_LT((to_eigen(solve(a, b)) - x).norm(), 1e-12 * (1 + x.norm()));
    EXPECT_LT(frob_norm(a * invert(a) - Matrix::identity(n)), 1e-12);
    EXPECT_NEAR(det(a), to_eigen(a).determinant(), 1e-12 * std::abs(to_eigen(a).determinant()) + 1e-14);
  }
}

TEST(Linalg, RightDivide) {
  std::mt19937_64 rng(3);
  const Matrix b = random_matrix(rng, 2, 3), c = random_matrix(rng, 3, 3) + Matrix::identity(3) * 3.0;
  EXPECT_LT(frob_norm(right_divide(b, c) * c - b), 1e-13);
}

TEST(Linalg, SingularMatrixReportsPivot) {
  const Matrix s{{1.0, 2.0}, {2.0, 4.0}};
  try {
    invert(s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SingularMatrix);
    ASSERT_TRUE(e.index().has_value());
    EXPECT_EQ(*e.index(), 1u);
  }
  EXPECT_EQ(det(Matrix(2, 2)), 0.0);
  EXPECT_FALSE(full_rank(s, 1e-10));
  EXPECT_TRUE(std::isinf(cond_frob(s)));
}

TEST(Linalg, KronVecIdentity) {
  // vec(A X B) = (B^T ⊗ A) vec(X)
  std::mt19937_64 rng(4);
  const Matrix a = random_matrix(rng, 2, 3), x = random_matrix(rng, 3, 4), b = random_matrix(rng, 4, 2);
  const Matrix lhs = vec(a * x * b);
  const Matrix rhs = kron(b.transpose(), a) * vec(x);
  EXPECT_LT(frob_norm(lhs - rhs), 1e-13);
  EXPECT_EQ(unvec(vec(x), 3, 4), x);
  EXPECT_EQ(vec(Matrix{{1, 2}, {3, 4}}), (Matrix{{1}, {3}, {2}, {4}}));
}

TEST(Linalg, PowerAgreesWithRepeatedProduct) {
  std::mt19937_64 rng(5);
  const Matrix a = random_matrix(rng, 3, 3);
  EXPECT_EQ(power(a, 0), Matrix::identity(3));
  EXPECT_LT(frob_norm(power(a, 3) - a * a * a), 1e-14);
}

TEST(Linalg, EigvalsMatchEigenOnRandomMatrices) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 9;
    const Matrix a = random_matrix(rng, n, n, 10.0);
    const auto ours = eigvals(a);
    const auto ref = testsupport::eigen_eigvals(a);
    ASSERT_EQ(ours.size(), n);
    EXPECT_LT(testsupport::spectrum_distance(ours, ref), 1e-9 * (1 + max_modulus(ref))) << "n=" << n;
  }
}

TEST(Linalg, EigvalsOfCompanionGiveRoots) {
  // λ^3 - 6λ^2 + 11λ - 6 = (λ-1)(λ-2)(λ-3)
  const Matrix c{{0, 1, 0}, {0, 0, 1}, {6, -11, 6}};
  auto ev = eigvals(c);
  std::sort(ev.begin(), ev.end(), [](auto x, auto y) { return x.real() < y.real(); });
  for (int i = 0; i < 3; ++i) {
    EXPECT_NEAR(ev[i].real(), i + 1.0, 1e-12);
    EXPECT_NEAR(ev[i].imag(), 0.0, 1e-12);
  }
}

TEST(Linalg, EigvalsComplexPair) {
  const auto ev = eigvals(Matrix{{0, -2}, {2, 0}});
  ASSERT_EQ(ev.size(), 2u);
  EXPECT_NEAR(std::abs(ev[0].imag()), 2.0, 1e-14);
  EXPECT_NEAR(ev[0].real(), 0.0, 1e-14);
}

TEST(Linalg, MatchSpectra) {
  const ComplexScalarList a{{1, 0}, {5, 0}, {2, 1}};
  const ComplexScalarList b{{5, 1e-9}, {2, 1}, {1, 0}};
  const auto m = match_spectra(a, b);
  EXPECT_TRUE(m.same_size);
  EXPECT_LT(m.max_distance, 2e-9);
  EXPECT_NEAR(min_cross_distance({{1, 0}}, {{4, 4}}), 5.0, 1e-15);
  EXPECT_NEAR(max_modulus(a), 5.0, 0);
  EXPECT_FALSE(match_spectra(a, {{1, 0}}).same_size);
}
