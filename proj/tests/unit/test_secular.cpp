/*
 * Copyright 2026 The rsdelta Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rsdelta/errors.hpp"
#include "rsdelta/rootfinder.hpp"
#include "rsdelta/secular.hpp"

using namespace rsdelta;

namespace {

constexpr Complex kI{0.0, 1.0};

// ka on the imaginary axis for reduced wavenumber q: k = i q gamma / 2, a = 1.
Complex k_of_q(double q, double alpha) { return kI * q * alpha / 2.0; }

}  // namespace

TEST(ResidualDouble, OddVanishesAtOrigin) {
  for (double alpha : {-2.0, 0.5, 3.0}) EXPECT_EQ(residual_double(0.0, alpha, Parity::Odd), Complex(0.0));
}

TEST(ResidualDouble, BoundRootsMatchBisection) {
  const double q_even = oracle::double_bound_q(3.0, true);
  const double q_odd = oracle::double_bound_q(3.0, false);
  EXPECT_NEAR(q_even, 1.0437, 1e-4);
  EXPECT_NEAR(q_odd, 0.9405, 1e-4);
  EXPECT_LE(std::abs(residual_double(k_of_q(q_even, 3.0), 3.0, Parity::Even)), 1e-14);
  EXPECT_LE(std::abs(residual_double(k_of_q(q_odd, 3.0), 3.0, Parity::Odd)), 1e-14);
}

TEST(ResidualDouble, RejectsMixedParityAndZeroAlpha) {
  EXPECT_THROW(residual_double(1.0, 3.0, Parity::Mixed), DomainError);
  EXPECT_THROW(residual_double(1.0, 0.0, Parity::Even), DomainError);
}

TEST(ResidualTripleSym, TinyEpsilonReducesToDoubleEven) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int i = 0; i < 100; ++i) {
    const Complex k(u(rng), u(rng) / 3.0);
    const double alpha = u(rng) + 3.5;
    const Complex d = residual_triple_symmetric_even(k, alpha, 1e-12) - residual_double(k, alpha, Parity::Even);
    EXPECT_LE(std::abs(d), 1e-9) << k;
  }
}

TEST(ResidualTripleSym, EvenBoundRootsMatchBisection) {
  // Both even bound states exist because alpha = 3 exceeds 1 + 2/eps = 2.
  const double q_ground = oracle::triple_even_q(3.0, 2.0, 2.0, 3.0);
  const double q_excited = oracle::triple_even_q(3.0, 2.0, 0.5, 1.0);
  EXPECT_LE(std::abs(residual_triple_symmetric_even(k_of_q(q_ground, 3.0), 3.0, 2.0)), 1e-13);
  EXPECT_LE(std::abs(residual_triple_symmetric_even(k_of_q(q_excited, 3.0), 3.0, 2.0)), 1e-13);
  EXPECT_GT(3.0, 1.0 + 2.0 / 2.0);
}

TEST(ResidualTripleSym, PoleIsReported) {
  // 1 + 2ik/beta = 0 at k = i beta / 2.
  EXPECT_THROW(residual_triple_symmetric_even(kI * 3.0, 3.0, 2.0), PoleError);
}

TEST(ResidualTripleGeneral, PolesAndDomain) {
  EXPECT_THROW(residual_triple_general(kI * 1.5, 3.0, 2.0, 0.3), PoleError);
  EXPECT_THROW(residual_triple_general(1.0, 3.0, 0.0, 0.3), DomainError);
}

TEST(ResidualTripleGeneral, ContainsBothFactorZeroSetsAtZeroOffset) {
  const DimensionlessParams p{3.0, 2.0, 0.0};
  const SearchWindow w = default_window(Structure::Triple, p, 8.0);
  for (Family f : {Family::TripleSymEven, Family::DoubleOdd}) {
    for (Complex k : find_roots(SecularEquation(f, p), w)) {
      const SecularEquation general(Family::TripleGeneral, p);
      // Confirm via Newton on the general form started at the factor root.
      const auto z = newton_solve(general, k);
      ASSERT_TRUE(z.has_value()) << k;
      EXPECT_LE(std::abs(*z - k), 1e-10);
      EXPECT_LE(std::abs(general.residual(k)), 1e-10 * general.residual_scale(k));
    }
  }
}

TEST(SolverForm, GeneralFactorsIntoOddTimesSymmetricAtZeroOffset) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 100; ++i) {
    const DimensionlessParams p{u(rng) + 2.5, u(rng), 0.0};
    const Complex k(u(rng), u(rng));
    const Complex g = SecularEquation(Family::TripleGeneral, p).solver_form(k).value;
    const Complex g_odd = SecularEquation(Family::DoubleOdd, p).solver_form(k).value;
    const Complex g_sym = SecularEquation(Family::TripleSymEven, p).solver_form(k).value;
    EXPECT_LE(std::abs(g - g_odd * g_sym), 1e-11 * std::max(1.0, std::abs(g))) << k;
  }
}

TEST(SolverForm, DerivativeMatchesFiniteDifference) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (Family f : {Family::DoubleEven, Family::DoubleOdd, Family::TripleSymEven, Family::TripleGeneral}) {
    for (int i = 0; i < 30; ++i) {
      const DimensionlessParams p{u(rng) + 2.5, u(rng) + 2.1, f == Family::TripleGeneral ? 0.4 : 0.0};
      const SecularEquation eq(f, p);
      const Complex k(u(rng), u(rng) / 2.0);
      const double h = 1e-6;
      const Complex fd = (eq.solver_form(k + h).value - eq.solver_form(k - h).value) / (2.0 * h);
      const Complex d = eq.solver_form(k).derivative;
      EXPECT_LE(std::abs(fd - d), 1e-6 * std::max(1.0, std::abs(d))) << to_string(f) << " " << k;
    }
  }
}

TEST(SolverForm, SharesNonzeroZerosWithResidual) {
  const DimensionlessParams p{3.0, 2.0, 0.6};
  const SecularEquation eq(Family::TripleGeneral, p);
  for (Complex k : find_roots(eq, default_window(Structure::Triple, p, 8.0)))
    EXPECT_LE(std::abs(eq.residual(k)), 1e-12 * eq.residual_scale(k));
}

TEST(Residuals, CauchyRiemann) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  const double h = 1e-5;
  for (int i = 0; i < 50; ++i) {
    const Complex k(u(rng), u(rng) / 2.0);
    const auto check = [&](const std::function<Complex(Complex)>& f) {
      const Complex dx = (f(k + h) - f(k - h)) / (2.0 * h);
      const Complex dy = (f(k + kI * h) - f(k - kI * h)) / (2.0 * h);
      EXPECT_LE(std::abs(dy - kI * dx), 1e-6 * std::max(1.0, std::abs(dx))) << k;
    };
    check([](Complex z) { return residual_double(z, 2.2, Parity::Even); });
    check([](Complex z) { return residual_double(z, -1.3, Parity::Odd); });
    check([](Complex z) { return residual_triple_symmetric_even(z, 2.2, 0.7); });
    check([](Complex z) { return residual_triple_general(z, 2.2, -0.7, 0.35); });
  }
}

TEST(Residuals, MirrorSymmetry) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int i = 0; i < 100; ++i) {
    const Complex k(u(rng), u(rng) / 2.0);
    const Complex m = -std::conj(k);
    EXPECT_LE(std::abs(residual_double(m, 1.7, Parity::Odd) - std::conj(residual_double(k, 1.7, Parity::Odd))),
              1e-12 * std::max(1.0, std::abs(residual_double(k, 1.7, Parity::Odd))));
    EXPECT_LE(std::abs(residual_triple_general(m, 1.7, 0.4, -0.2) -
                       std::conj(residual_triple_general(k, 1.7, 0.4, -0.2))),
              1e-12 * std::max(1.0, std::abs(residual_triple_general(k, 1.7, 0.4, -0.2))));
  }
}

TEST(SecularEquation, ValidatesFamilies) {
  EXPECT_THROW(SecularEquation(Family::TripleSymEven, {3.0, 2.0, 0.1}), DomainError);
  EXPECT_THROW(SecularEquation(Family::TripleGeneral, {3.0, 2.0, 1.0}), DomainError);
  EXPECT_EQ(SecularEquation(Family::DoubleOdd, {3.0, 0.0, 0.0}).parity(), Parity::Odd);
  EXPECT_EQ(SecularEquation(Family::TripleGeneral, {3.0, 2.0, 0.5}).parity(), Parity::Mixed);
}

TEST(SecularEquation, ParameterAccess) {
  const SecularEquation eq(Family::TripleGeneral, {3.0, 2.0, 0.5});
  EXPECT_DOUBLE_EQ(eq.parameter(SweepParameter::BetaA), 6.0);
  EXPECT_DOUBLE_EQ(eq.with_parameter(SweepParameter::BetaA, 1.5).params().epsilon, 0.5);
  EXPECT_DOUBLE_EQ(eq.with_parameter(SweepParameter::Alpha, 4.0).params().alpha, 4.0);
}

TEST(AlphaOfSDouble, Limits) {
  EXPECT_NEAR(alpha_of_s_double(1e-12, Parity::Even).value, 0.0, 1e-12);
  const auto odd0 = alpha_of_s_double(0.0, Parity::Odd);
  EXPECT_EQ(odd0.kind, BranchKind::Limit);
  EXPECT_EQ(odd0.value, 1.0);
  EXPECT_NEAR(alpha_of_s_double(1e-9, Parity::Odd).value, 1.0, 1e-9);
  EXPECT_THROW(alpha_of_s_double(1.0, Parity::Mixed), DomainError);
}

TEST(AlphaOfSDouble, AntiBoundMergeIsTheEvenBranchMinimum) {
  // The odd branch s/(1 - e^{-s}) is positive for every s < 0; the minimum over s < 0
  // that marks the merge belongs to the even branch.
  const auto m = oracle::golden_min([](double s) { return alpha_of_s_double(s, Parity::Even).value; }, -10.0, -1e-6);
  EXPECT_NEAR(m.value, -0.2784645427610738, 1e-12);
  EXPECT_NEAR(m.value, -0.27, 0.01);
  for (double s = -10.0; s < 0.0; s += 0.05) EXPECT_GT(alpha_of_s_double(s, Parity::Odd).value, 0.0);
}

TEST(AlphaOfSDouble, InvertsResidual) {
  for (double s : {-2.0, -0.7, 0.4, 1.5, 3.0}) {
    for (Parity par : {Parity::Even, Parity::Odd}) {
      const double alpha = alpha_of_s_double(s, par).value;
      EXPECT_LE(std::abs(residual_double(kI * s / 2.0, alpha, par)), 1e-10) << s;
    }
  }
}

TEST(AlphaOfSTriple, ZeroEpsilon) {
  for (double s : {-1.5, -0.2, 0.3, 2.0}) {
    EXPECT_NEAR(alpha_of_s_triple(s, 0.0, BranchSign::Plus).value, alpha_of_s_double(s, Parity::Even).value, 1e-14);
    EXPECT_EQ(alpha_of_s_triple(s, 0.0, BranchSign::Minus).kind, BranchKind::Asymptote);
  }
}

TEST(AlphaOfSTriple, Thresholds) {
  EXPECT_NEAR(alpha_of_s_triple(1e-10, 0.5, BranchSign::Minus).value, 5.0, 1e-8);
  EXPECT_NEAR(alpha_of_s_triple(1e-10, -4.0, BranchSign::Plus).value, 0.5, 1e-8);
  EXPECT_EQ(alpha_of_s_triple(-0.5, -4.0, BranchSign::Plus).kind, BranchKind::NoRealBranch);
}

TEST(AlphaOfSTriple, InvertsResidual) {
  for (double eps : {0.5, 2.0, -4.0}) {
    for (double s : {0.3, 1.0, 2.5}) {
      for (BranchSign b : {BranchSign::Plus, BranchSign::Minus}) {
        const auto a = alpha_of_s_triple(s, eps, b);
        if (!a.finite() || a.value == 0.0) continue;
        EXPECT_LE(std::abs(residual_triple_symmetric_even(kI * s / 2.0, a.value, eps)), 1e-10) << eps << " " << s;
      }
    }
  }
}

TEST(EpsilonOfS, Examples) {
  const double alpha = 3.0;
  const double s_even = oracle::double_bound_q(alpha, true) * alpha;
  EXPECT_NEAR(epsilon_of_s(s_even, alpha).value, 0.0, 1e-12);
  const double s_odd = oracle::double_bound_q(alpha, false) * alpha;
  const auto near_odd = epsilon_of_s(s_odd * (1.0 + 1e-12), alpha);
  EXPECT_TRUE(!near_odd.finite() || std::abs(near_odd.value) > 1e8);

  const double eps = epsilon_of_s(2.0, 3.0).value;
  EXPECT_LE(std::abs(residual_triple_symmetric_even(kI, 3.0, eps)), 1e-12);
}

TEST(BetaAOfS, Examples) {
  for (double s : {-0.8, 0.5, 1.3, 2.2}) {
    const auto b = beta_a_of_s(s, 3.0, 0.0);
    const auto e = epsilon_of_s(s, 3.0);
    ASSERT_TRUE(b.finite() && e.finite());
    EXPECT_NEAR(b.value / 3.0, e.value, 1e-10 * std::max(1.0, std::abs(e.value)));
  }
  // xi = -1 on a double-well root (q = 1 + e^{-q alpha}): the middle strength drops out.
  const double s_even = oracle::double_bound_q(3.0, true) * 3.0;
  EXPECT_NEAR(beta_a_of_s(s_even, 3.0, 0.0).value, 0.0, 1e-12);
  EXPECT_NEAR(beta_a_of_s(s_even, 3.0, 0.6).value, 0.0, 1e-12);

  const double beta_a = beta_a_of_s(1.5, 3.0, 0.6).value;
  EXPECT_LE(std::abs(residual_triple_general(kI * 0.75, 3.0, beta_a / 3.0, 0.6)), 1e-10);
}
