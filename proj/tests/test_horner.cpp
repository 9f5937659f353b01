#include <gtest/gtest.h>

#include <cmath>
#include <functional>

#include "blockroots/horner.hpp"
#include "fixtures.hpp"
#include "test_support.hpp"

using namespace blockroots;
using testsupport::random_matrix;
namespace pr = testsupport::printed;

namespace {

MatrixPolynomial scalar(const std::vector<double>& c) {
  std::vector<Matrix> coeffs;
  for (double v : c) coeffs.push_back(Matrix{{v}});
  return MatrixPolynomial(coeffs);
}

double peval(const std::vector<double>& c, double x) {
  double s = 0.0;
  for (double v : c) s = s * x + v;
  return s;
}

double pderiv(const std::vector<double>& c, double x) {
  double s = 0.0;
  const std::size_t l = c.size() - 1;
  for (std::size_t i = 0; i < l; ++i) s = s * x + c[i] * static_cast<double>(l - i);
  return s;
}

IterConfig start(const Matrix& x0, std::size_t max_iterations = 500) {
  IterConfig c;
  c.x0 = x0;
  c.max_iterations = max_iterations;
  return c;
}

MatrixPolynomial random_monic(std::mt19937_64& rng, std::size_t m, std::size_t l) {
  std::vector<Matrix> tail;
  for (std::size_t i = 0; i < l; ++i) tail.push_back(random_matrix(rng, m, m, 2.0));
  return MatrixPolynomial::monic(tail);
}

// Trace of a run that hit its iteration cap, or the converged trace.
ConvergenceTrace trace_of(const std::function<IterResult()>& f) {
  try {
    return f().trace;
  } catch (const IterationError& e) {
    return e.trace();
  }
}

}  // namespace

TEST(Horner, ScalarQuadraticFromOnePointFive) {
  const auto r = horner_iterate(scalar({1, -3, 2}), start(Matrix{{1.5}}));
  const double x = r.x(0, 0);
  EXPECT_TRUE(std::abs(x - 1.0) < 1e-8 || std::abs(x - 2.0) < 1e-8) << x;
  EXPECT_TRUE(r.trace.converged);
}

TEST(Horner, ScalarStepMatchesClosedForm) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int t = 0; t < 20; ++t) {
    std::vector<double> c{1, u(rng), u(rng), u(rng) + 3.0};
    const double x0 = u(rng) + 0.1;
    const auto tr = trace_of([&] { return horner_iterate(scalar(c), start(Matrix{{x0}}, 1)); });
    ASSERT_GE(tr.iterates.size(), 2u);
    const double expect = x0 * c.back() / (c.back() - peval(c, x0));
    EXPECT_NEAR(tr.iterates[1](0, 0), expect, 1e-12 * std::max(1.0, std::abs(expect)));
  }
}

TEST(Horner, SolventStartReturnsImmediately) {
  const auto r = horner_iterate(scalar({1, -3, 2}), start(Matrix{{2.0}}));
  EXPECT_EQ(r.trace.steps(), 1u);
  EXPECT_EQ(r.trace.deltas[1], 0.0);
  EXPECT_EQ(r.x(0, 0), 2.0);
}

TEST(Horner, FixedPointIdentityAtSolvent) {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 5; ++t) {
    const Matrix q = random_matrix(rng, 2, 2, 2.0);
    const auto p = reconstruct({{q, random_matrix(rng, 2, 2, 2.0) + Matrix::identity(2) * 5.0}});
    const auto tr = trace_of([&] { return horner_iterate(p, start(q, 1)); });
    EXPECT_LT(frob_norm(tr.iterates[1] - q) / frob_norm(q), 1e-12);
  }
}

TEST(Horner, ExampleThreeFromZeroStart) {
  const auto p = testsupport::load_poly("example3.json");
  IterConfig cfg;
  cfg.max_iterations = 5000;
  const auto r = horner_iterate(p, cfg);
  EXPECT_LE(frob_norm(eval_right(p, r.x)), 1e-6 * frob_norm(p.trailing()));
  const auto b = convergence_bounds_check(p, r.trace);
  EXPECT_TRUE(b.sandwich_holds());
  EXPECT_GT(b.ratio_trend, 0.5);
}

TEST(Horner, ConvergedRunsMeetResidualContract) {
  std::mt19937_64 rng(33);
  int converged = 0;
  for (int t = 0; t < 20; ++t) {
    const auto p = random_monic(rng, 2, 2);
    try {
      const auto r = horner_iterate(p, start(random_matrix(rng, 2, 2)));
      ++converged;
      EXPECT_LE(frob_norm(eval_right(p, r.x)), 1e-8 * p.residual_scale());
    } catch (const Error&) {
    }
  }
  EXPECT_GT(converged, 0);
}

TEST(Horner, BudgetExhaustionCarriesTrace) {
  try {
    horner_iterate(testsupport::load_poly("example3.json"), IterConfig{std::nullopt, 1e-8, 3, 1e-8, 0});
    FAIL();
  } catch (const IterationError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoConvergence);
    EXPECT_EQ(e.trace().steps(), 3u);
    EXPECT_FALSE(e.trace().converged);
  }
}

TEST(Horner, StagnationWithoutResidual) {
  // A huge η makes δ small immediately while the residual is still large.
  IterConfig cfg = start(Matrix{{1.5}});
  cfg.eta = 1e6;
  try {
    horner_iterate(scalar({1, -3, 2}), cfg);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::StagnantWithoutResidual);
  }
}

TEST(Frechet, LinearIsIdentity) {
  const auto p = MatrixPolynomial::monic({Matrix{{1, 2}, {3, 4}}});
  EXPECT_EQ(frechet_matrix(p, Matrix{{5, 6}, {7, 8}}), Matrix::identity(4));
}

TEST(Frechet, ScalarIsDerivative) {
  const std::vector<double> c{1, -3, 2, 5};
  EXPECT_NEAR(frechet_matrix(scalar(c), Matrix{{0.7}})(0, 0), pderiv(c, 0.7), 1e-14);
}

TEST(Frechet, MatchesCentralDifferences) {
  std::mt19937_64 rng(34);
  const double h = 1e-5;
  for (int t = 0; t < 20; ++t) {
    const std::size_t m = 1 + t % 3, l = 1 + (t / 3) % 3;
    const auto p = random_monic(rng, m, l);
    const Matrix x = random_matrix(rng, m, m);
    Matrix dir = random_matrix(rng, m, m);
    dir *= 1.0 / frob_norm(dir);
    const Matrix fd = (eval_right(p, x + dir * h) - eval_right(p, x - dir * h)) * (1.0 / (2 * h));
    const Matrix jv = frechet_matrix(p, x) * vec(dir);
    EXPECT_LE(frob_norm(jv - vec(fd)), 1e-5 * std::max(1.0, frob_norm(fd)));
  }
}

TEST(NewtonHorner, ScalarQuadraticQuadraticDecay) {
  const auto r = newton_horner(scalar({1, -3, 2}), start(Matrix{{1.8}}));
  EXPECT_NEAR(r.x(0, 0), 2.0, 1e-12);
  const auto& res = r.trace.residuals;
  ASSERT_GE(res.size(), 4u);
  // log r_{k+1} / log r_k ≈ 2 on the first steps above roundoff.
  const double ratio = std::log(res[2]) / std::log(res[1]);
  EXPECT_GT(ratio, 1.6);
}

TEST(NewtonHorner, ScalarMatchesNewton) {
  const std::vector<double> c{1, -6, 11, -6};
  const auto tr = trace_of([&] { return newton_horner(scalar(c), start(Matrix{{3.4}}, 1)); });
  EXPECT_NEAR(tr.iterates[1](0, 0), 3.4 - peval(c, 3.4) / pderiv(c, 3.4), 1e-13);
}

TEST(NewtonHorner, SolventStartReturnsImmediately) {
  const auto r = newton_horner(scalar({1, -3, 2}), start(Matrix{{1.0}}));
  EXPECT_EQ(r.trace.steps(), 1u);
  EXPECT_EQ(r.x(0, 0), 1.0);
}

TEST(NewtonHorner, ExampleFourFromPrintedStart) {
  const auto p = testsupport::load_poly("example4.json");
  const auto r = newton_horner(p, start(pr::E4X0, 15));
  EXPECT_LE(frob_norm(eval_right(p, r.x)), 1e-6);
  EXPECT_LE(r.trace.steps(), 15u);
}

TEST(NewtonHorner, CrossbredVariantStepsAsPrinted) {
  const auto p = testsupport::load_poly("example4.json");
  const auto tr = trace_of([&] { return newton_horner(p, start(pr::E4X0, 1), NewtonStep::Crossbred); });
  const Matrix x = pr::E4X0, ar = eval_right(p, x);
  const Matrix jinv_ar = unvec(solve(frechet_matrix(p, x), vec(ar)), 2, 2);
  const Matrix expect = x + (x - jinv_ar) * solve(p.trailing(), ar);
  EXPECT_LT(frob_norm(tr.iterates[1] - expect), 1e-10 * frob_norm(expect));
}

TEST(NewtonHorner, DefaultGuessIsSeeded) {
  const auto p = testsupport::load_poly("example1.json");
  EXPECT_EQ(scaled_identity_guess(p, 7), scaled_identity_guess(p, 7));
  EXPECT_NE(scaled_identity_guess(p, 7), scaled_identity_guess(p, 8));
  const Matrix g = scaled_identity_guess(p, 0);
  const double s = -(p.coeff(1)(0, 0) + p.coeff(1)(1, 1)) / 6.0;
  EXPECT_NEAR(g(0, 0), s, 2e-3 * std::max(1.0, std::abs(s)));
}

TEST(TwoStage, ScalarQChainIsNewton) {
  std::mt19937_64 rng(35);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int t = 0; t < 20; ++t) {
    std::vector<double> c{1, u(rng), u(rng), u(rng)};
    const double x0 = u(rng);
    if (std::abs(pderiv(c, x0)) < 1e-3) continue;
    for (auto v : {TwoStageVariant::QChain, TwoStageVariant::DeltaForm}) {
      const auto tr = trace_of([&] { return two_stage(scalar(c), start(Matrix{{x0}}, 1), v); });
      const double expect = x0 - peval(c, x0) / pderiv(c, x0);
      EXPECT_NEAR(tr.iterates[1](0, 0), expect, 1e-12 * std::max(1.0, std::abs(expect)));
    }
  }
}

TEST(TwoStage, VariantsAgreeOnMatrices) {
  const auto p = testsupport::load_poly("example4.json");
  const auto a = trace_of([&] { return two_stage(p, start(pr::E4X0, 5), TwoStageVariant::QChain); });
  const auto b = trace_of([&] { return two_stage(p, start(pr::E4X0, 5), TwoStageVariant::DeltaForm); });
  ASSERT_EQ(a.iterates.size(), b.iterates.size());
  for (std::size_t k = 0; k < a.iterates.size(); ++k) {
    EXPECT_LT(frob_norm(a.iterates[k] - b.iterates[k]), 1e-9 * std::max(1.0, frob_norm(a.iterates[k])));
  }
}

TEST(TwoStage, ExampleFourFifteenIterations) {
  const auto p = testsupport::load_poly("example4.json");
  const auto tr = trace_of([&] { return two_stage(p, start(pr::E4X0, 15), TwoStageVariant::QChain); });
  EXPECT_LE(frob_norm(eval_right(p, tr.iterates.back())), 0.05);
}

TEST(TwoStage, SolventStartReturnsImmediately) {
  const auto r = two_stage(scalar({1, -3, 2}), start(Matrix{{2.0}}), TwoStageVariant::QChain);
  EXPECT_EQ(r.trace.steps(), 1u);
}

TEST(TwoStage, SingularStep) {
  // p'(1.5) = 0 for λ^2 - 3λ + 2.
  try {
    two_stage(scalar({1, -3, 2}), start(Matrix{{1.5}}), TwoStageVariant::QChain);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SingularStep);
  }
}

TEST(Trace, DeltasArePercentAndNonnegative) {
  const auto r = horner_iterate(scalar({1, -3, 2}), start(Matrix{{1.5}}));
  const auto& t = r.trace;
  EXPECT_TRUE(std::isnan(t.deltas[0]));
  EXPECT_EQ(t.deltas.size(), t.iterates.size());
  EXPECT_EQ(t.residuals.size(), t.iterates.size());
  EXPECT_EQ(t.ratios.size(), t.iterates.size());
  for (std::size_t k = 1; k < t.deltas.size(); ++k) EXPECT_GE(t.deltas[k], 0.0);
  const double d1 = 100.0 * frob_norm(t.iterates[1] - t.iterates[0]) / frob_norm(t.iterates[0]);
  EXPECT_DOUBLE_EQ(t.deltas[1], d1);
}

TEST(Bounds, ShortTraceRejected) {
  ConvergenceTrace t;
  t.iterates = {Matrix{{1.0}}, Matrix{{1.0}}};
  try {
    convergence_bounds_check(scalar({1, -3, 2}), t);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InsufficientTrace);
  }
}

TEST(Bounds, NewtonRatioTrendBelowHornerTrend) {
  const auto p = testsupport::load_poly("example4.json");
  const Matrix s = newton_horner(p, start(pr::E4X0)).x;
  const Matrix near = s + Matrix{{0.05, -0.02}, {0.01, -0.05}};
  IterConfig tight = start(near, 400);
  tight.eta = 1e-12;
  tight.residual_tol = 1e-13;
  const auto n = trace_of([&] { return newton_horner(p, tight); });
  const auto h = trace_of([&] { return horner_iterate(p, tight); });
  ASSERT_GE(n.iterates.size(), 5u);
  ASSERT_GE(h.iterates.size(), 5u);
  const auto bn = convergence_bounds_check(p, n);
  const auto bh = convergence_bounds_check(p, h);
  EXPECT_LT(bn.ratio_trend, bh.ratio_trend);
  EXPECT_LT(bn.ratio_trend, 0.2);
}
