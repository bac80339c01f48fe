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

#include <algorithm>
#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rsdelta/errors.hpp"
#include "rsdelta/rootfinder.hpp"
#include "rsdelta/wavefunction.hpp"

using namespace rsdelta;

namespace {

constexpr Complex kI{0.0, 1.0};

struct Case {
  Structure structure;
  DimensionlessParams p;
};

std::vector<ResonantState> first_states(const Case& c, std::size_t n, double re_max = 30.0) {
  auto states = find_all_states(c.structure, c.p, default_window(c.structure, c.p, re_max));
  std::stable_sort(states.begin(), states.end(), [](const ResonantState& a, const ResonantState& b) {
    return std::abs(a.k.real()) < std::abs(b.k.real());
  });
  if (states.size() > n) states.resize(n);
  return states;
}

Complex value_in(const WaveRegion& r, Complex k, double x) {
  const Complex e = std::exp(kI * k * x);
  return r.out * e + r.in / e;
}

std::vector<double> strengths_of(const Case& c) {
  if (c.structure == Structure::Double) return {c.p.alpha, c.p.alpha};
  return {c.p.alpha, c.p.epsilon * c.p.alpha, c.p.alpha};
}

Complex self_product_by_quadrature(const PiecewiseWave& w, double xl, double xr) {
  std::vector<double> cuts;
  for (double x : w.knots())
    if (x > xl && x < xr) cuts.push_back(x);
  const Complex integral = oracle::integrate_pieces([&](double x) { return w(x) * w(x); }, xl, xr, cuts);
  return integral - (w(xl) * w(xl) + w(xr) * w(xr)) / (2.0 * kI * w.k());
}

const Case kDouble{Structure::Double, {3.0, 0.0, 0.0}};
const Case kTripleSym{Structure::Triple, {3.0, 2.0, 0.0}};
const Case kTripleAsym{Structure::Triple, {3.0, 2.0, 0.6}};

}  // namespace

TEST(Wave, ParityMatchesLabel) {
  for (const Case& c : {kDouble, kTripleSym}) {
    for (const auto& s : first_states(c, 12)) {
      const PiecewiseWave w = wave_of(s, c.structure, c.p);
      const double sign = s.parity == Parity::Even ? 1.0 : -1.0;
      for (double x : {0.1, 0.7, 1.3, 2.5}) EXPECT_LE(std::abs(w(-x) - sign * w(x)), 1e-12 * std::max(1.0, std::abs(w(x))));
      if (s.parity == Parity::Odd) {
        EXPECT_LE(std::abs(w(0.0)), 1e-13);
      }
    }
  }
}

TEST(Wave, EvenBoundStateIsRealUpToPhase) {
  const auto s = first_states(kDouble, 2);
  for (const auto& st : s) {
    ASSERT_EQ(st.kind, StateClass::Bound);
    const PiecewiseWave w = wave_of(st, Structure::Double, kDouble.p);
    const Complex phase = w(0.3) / std::abs(w(0.3));
    for (double x : {-2.0, -0.5, 0.3, 0.9, 1.7}) EXPECT_NEAR((w(x) / phase).imag(), 0.0, 1e-13);
  }
}

TEST(Wave, NormalStatesGrowOutside) {
  for (const auto& s : first_states(kDouble, 10)) {
    if (s.kind != StateClass::NormalRS) continue;
    const PiecewiseWave w = wave_of(s, Structure::Double, kDouble.p);
    EXPECT_NEAR(std::abs(w(5.0)) / std::abs(w(3.0)), std::exp(2.0 * std::abs(s.k.imag())), 1e-10);
  }
}

TEST(Wave, ContinuityAndJumpConditions) {
  for (const Case& c : {kDouble, kTripleSym, kTripleAsym}) {
    const auto g = strengths_of(c);
    for (const auto& s : first_states(c, 20)) {
      const PiecewiseWave w = wave_of(s, c.structure, c.p);
      const auto regions = w.regions();
      const auto knots = w.knots();
      ASSERT_EQ(knots.size(), g.size());
      for (std::size_t j = 0; j < knots.size(); ++j) {
        const double x = knots[j];
        const Complex left = value_in(regions[j], s.k, x);
        const Complex right = value_in(regions[j + 1], s.k, x);
        const double scale = std::max(1.0, std::abs(left)) * std::max(1.0, std::abs(s.k));
        EXPECT_LE(std::abs(left - right), 1e-10 * scale);
        const Complex jump = w.derivative(x) - w.derivative_left(x);
        EXPECT_LE(std::abs(jump + g[j] * right), 1e-10 * scale) << s.k;
      }
      EXPECT_EQ(regions.front().out, Complex{});
      EXPECT_EQ(regions.back().in, Complex{});
    }
  }
}

TEST(Wave, JumpConditionsAgainstNumericalDerivative) {
  const auto g = strengths_of(kTripleAsym);
  for (const auto& s : first_states(kTripleAsym, 8)) {
    const PiecewiseWave w = wave_of(s, Structure::Triple, kTripleAsym.p);
    const auto knots = w.knots();
    for (std::size_t j = 0; j < knots.size(); ++j) {
      const double x = knots[j];
      const double h = 1e-4;
      // one-sided second-order stencils on each side of the delta
      const Complex dr = (-3.0 * w(x) + 4.0 * w(x + h) - w(x + 2 * h)) / (2 * h);
      const Complex left0 = value_in(w.regions()[j], s.k, x);
      const Complex dl = (3.0 * left0 - 4.0 * w(x - h) + w(x - 2 * h)) / (2 * h);
      EXPECT_LE(std::abs(dr - dl + g[j] * w(x)), 1e-5 * std::max(1.0, std::abs(w(x)) * std::norm(s.k)));
    }
  }
}

TEST(Wave, SatisfiesFreeEquationAwayFromDeltas) {
  for (const Case& c : {kDouble, kTripleAsym}) {
    for (const auto& s : first_states(c, 10)) {
      const PiecewiseWave w = wave_of(s, c.structure, c.p);
      const double h = 1e-3;
      for (double x : {-2.3, -0.5, 0.25, 0.85, 1.9}) {
        const Complex d2 =
            (-w(x + 2 * h) + 16.0 * w(x + h) - 30.0 * w(x) + 16.0 * w(x - h) - w(x - 2 * h)) / (12.0 * h * h);
        const Complex rhs = s.k * s.k * w(x);
        EXPECT_LE(std::abs(-d2 - rhs), 1e-6 * std::max(std::abs(rhs), 1e-3)) << s.k << " x=" << x;
      }
    }
  }
}

TEST(Wave, MiddleDeltaInvisibleToOddStates) {
  for (const auto& s : first_states(kTripleSym, 12)) {
    if (s.parity != Parity::Odd) continue;
    const PiecewiseWave t = build_wave_triple(s.k, 3.0, 2.0, 0.0);
    const PiecewiseWave d = build_wave_double(s.k, Parity::Odd, 3.0);
    const Complex ratio = t(0.4) / d(0.4);
    EXPECT_LE(std::abs(ratio * ratio - 1.0), 1e-10);
    for (double x : {-3.0, -0.8, 0.4, 0.95, 2.0}) EXPECT_LE(std::abs(t(x) - ratio * d(x)), 1e-10 * std::max(1.0, std::abs(d(x))));
  }
}

TEST(Wave, CentreAmplitudeRatio) {
  for (const auto& s : first_states(kTripleSym, 12)) {
    if (s.parity != Parity::Even) continue;
    const PiecewiseWave w = build_wave_triple(s.k, 3.0, 2.0, 0.0);
    const WaveRegion& inner = w.regions()[2];
    ASSERT_EQ(inner.x_lo, 0.0);
    const double beta = 6.0;
    const Complex sigma = -(1.0 + 2.0 * kI * s.k / beta) / (1.0 - 2.0 * kI * s.k / beta);
    EXPECT_LE(std::abs(inner.in / inner.out - sigma), 1e-10 * std::max(1.0, std::abs(sigma)));
  }
}

TEST(Normalization, BoundStatesMatchQuadrature) {
  for (double alpha : {3.0, 10.0, 1.5}) {
    const auto states = find_all_states(Structure::Double, {alpha, 0.0, 0.0}, SearchWindow{3.0, -2.0, 4});
    for (const auto& s : states) {
      if (s.kind != StateClass::Bound) continue;
      const PiecewiseWave w = wave_of(s, Structure::Double, {alpha, 0.0, 0.0});
      const double L = 1.0 + 40.0 / s.k.imag();
      const Complex norm = oracle::integrate_pieces([&](double x) { return w(x) * w(x); }, -L, L, {-1.0, 1.0});
      EXPECT_NEAR(norm.real(), 1.0, 1e-10) << alpha;
      EXPECT_NEAR(norm.imag(), 0.0, 1e-10) << alpha;
    }
  }
}

TEST(Normalization, SelfProductIndependentOfBoundary) {
  for (const Case& c : {kDouble, kTripleAsym}) {
    for (const auto& s : first_states(c, 8)) {
      const PiecewiseWave w = wave_of(s, c.structure, c.p);
      for (const auto& [xl, xr] : {std::pair{-1.0, 1.0}, std::pair{-2.0, 1.5}, std::pair{-3.0, 3.0}})
        EXPECT_LE(std::abs(self_product_by_quadrature(w, xl, xr) - 1.0), 1e-9) << s.k << " " << xl << "," << xr;
    }
  }
}

TEST(Normalization, DoubleClosedFormAmplitudes) {
  const auto s = first_states(kDouble, 4);
  for (const auto& st : s) {
    const auto n = normalize_double(st, 3.0);
    EXPECT_LE(std::abs(n.a - n.c / (1.0 + 3.0 / (2.0 * kI * st.k))), 1e-14);
    EXPECT_EQ(n.a, st.norm_a);
    EXPECT_EQ(n.c, st.norm_c);
  }
  EXPECT_THROW(normalize_double(Complex{0.0, 0.0}, Parity::Even, 3.0), DomainError);
  EXPECT_THROW(normalize_double(Complex{0.0, 1.5}, Parity::Even, 3.0), DegenerateNormalization);
  EXPECT_THROW(normalize_double(Complex{0.0, 1.5}, Parity::Mixed, 3.0), DomainError);
}

TEST(Orthonormality, IdentityForFirstTwentyStates) {
  for (const Case& c : {kDouble, kTripleAsym}) {
    std::vector<PiecewiseWave> waves;
    for (const auto& s : first_states(c, 20)) waves.push_back(wave_of(s, c.structure, c.p));
    ASSERT_EQ(waves.size(), 20u);
    const auto m1 = orthonormality_matrix(waves, -1.0, 1.0);
    const auto m3 = orthonormality_matrix(waves, -3.0, 3.0);
    EXPECT_EQ(m1.indeterminate_count(), 0u);
    EXPECT_LE(m1.max_deviation_from_identity(), 1e-8);
    EXPECT_LE(m3.max_deviation_from_identity(), 1e-8);
    double change = 0.0;
    for (std::size_t n = 0; n < 20; ++n)
      for (std::size_t m = 0; m < 20; ++m) change = std::max(change, std::abs(*m1(n, m) - *m3(n, m)));
    EXPECT_LE(change, 1e-8);
  }
}

TEST(Orthonormality, QuadratureOptionMatchesExactIntegrals) {
  std::vector<PiecewiseWave> waves;
  for (const auto& s : first_states(kTripleAsym, 6)) waves.push_back(wave_of(s, Structure::Triple, kTripleAsym.p));
  for (const auto& n : waves)
    for (const auto& m : waves) {
      const auto exact = siegert_product(n, m, -2.0, 2.5);
      const auto gl = siegert_product(n, m, -2.0, 2.5, 40);
      ASSERT_TRUE(exact && gl);
      EXPECT_LE(std::abs(*exact - *gl), 1e-12);
    }
}

TEST(Orthonormality, OppositeWavenumbersAreIndeterminate) {
  const auto s = first_states(kDouble, 3).back();
  const PiecewiseWave w = wave_of(s, Structure::Double, kDouble.p);
  std::vector<WaveRegion> regions(w.regions().begin(), w.regions().end());
  const PiecewiseWave flipped(-s.k, regions);
  EXPECT_FALSE(siegert_product(w, flipped, -1.0, 1.0).has_value());
  const auto m = orthonormality_matrix(std::vector<PiecewiseWave>{w, flipped}, -1.0, 1.0);
  EXPECT_EQ(m.indeterminate_count(), 2u);
  EXPECT_THROW(orthonormality_matrix(std::vector<PiecewiseWave>{w}, -0.5, 1.0), DomainError);
}

TEST(Wave, RejectsNonRoots) {
  EXPECT_THROW(build_wave_double(Complex{0.4, -0.3}, Parity::Even, 3.0), ContractError);
  EXPECT_THROW(build_wave_triple(Complex{0.4, -0.3}, 3.0, 2.0, 0.6), ContractError);
  EXPECT_THROW(build_wave_triple(Complex{0.4, -0.3}, 3.0, 2.0, 0.0), ContractError);
  EXPECT_THROW(build_wave_triple(Complex{0.4, -0.3}, 3.0, 2.0, 1.0), DomainError);
}
