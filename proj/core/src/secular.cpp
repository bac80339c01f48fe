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

#include "rsdelta/secular.hpp"

#include <cmath>
#include <limits>

#include "rsdelta/detail/exprel.hpp"
#include "rsdelta/errors.hpp"

namespace rsdelta {

using detail::exprel;
using detail::exprel2;
using detail::exprel2_derivative;
using detail::exprel_derivative;

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kInf = std::numeric_limits<double>::infinity();

// cos(2kb) for complex k. On the imaginary axis k = is/(2a) it is cosh(s b/a).
Complex separation_cosine(Complex two_kb) { return std::cos(two_kb); }

bool vanishes(Complex x, double scale) {
  return std::abs(x) <= 4.0 * std::numeric_limits<double>::epsilon() * scale;
}

void require_alpha(double alpha) {
  if (alpha == 0.0 || !std::isfinite(alpha)) throw DomainError("alpha must be finite and nonzero");
}

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::DoubleEven: return "double-even";
    case Family::DoubleOdd: return "double-odd";
    case Family::TripleSymEven: return "triple-symmetric-even";
    case Family::TripleGeneral: return "triple-general";
  }
  return "?";
}

std::string_view to_string(SweepParameter p) {
  switch (p) {
    case SweepParameter::Alpha: return "alpha";
    case SweepParameter::Epsilon: return "epsilon";
    case SweepParameter::BetaA: return "beta_a";
  }
  return "?";
}

Complex residual_double(Complex ka, double alpha, Parity parity) {
  require_alpha(alpha);
  if (parity == Parity::Mixed) throw DomainError("double structure states are even or odd");
  const Complex w = 2.0 * kI * ka;
  const double sign = parity == Parity::Even ? 1.0 : -1.0;
  return 1.0 + w / alpha + sign * std::exp(w);
}

Complex residual_triple_symmetric_even(Complex ka, double alpha, double epsilon) {
  require_alpha(alpha);
  const double beta = epsilon * alpha;
  const Complex w = 2.0 * kI * ka;
  const Complex denom = beta + w;
  if (vanishes(denom, std::abs(beta) + std::abs(w)))
    throw PoleError("triple even residual evaluated at 1 + 2ik/beta = 0");
  return 1.0 + w / alpha - (beta - w) / denom * std::exp(w);
}

Complex residual_triple_general(Complex ka, double alpha, double epsilon, double b_over_a) {
  require_alpha(alpha);
  const double beta = epsilon * alpha;
  if (beta == 0.0) throw DomainError("beta = 0: use the double-structure residual");
  const Complex w = 2.0 * kI * ka;
  const Complex u = 1.0 + w / alpha;
  if (vanishes(u, 1.0 + std::abs(w / alpha)))
    throw PoleError("triple residual evaluated at 1 + 2ik/gamma = 0");
  const Complex xi = std::exp(w) / u;
  const Complex eta = w / beta;
  const Complex c = separation_cosine(2.0 * ka * b_over_a);
  return xi * xi * (1.0 - eta) - 2.0 * xi * c + 1.0 + eta;
}

SecularEquation::SecularEquation(Family family, DimensionlessParams params)
    : family_(family), params_(params) {
  if (!std::isfinite(params.alpha) || !std::isfinite(params.epsilon) ||
      !std::isfinite(params.b_over_a))
    throw DomainError("secular equation parameters must be finite");
  if (family == Family::TripleSymEven && params.b_over_a != 0.0)
    throw DomainError("symmetric triple family requires b = 0");
  if (family == Family::TripleGeneral && !(params.b_over_a > -1.0 && params.b_over_a < 1.0))
    throw DomainError("b/a must lie in (-1, 1)");
}

Parity SecularEquation::parity() const {
  switch (family_) {
    case Family::DoubleEven:
    case Family::TripleSymEven: return Parity::Even;
    case Family::DoubleOdd: return Parity::Odd;
    case Family::TripleGeneral: return Parity::Mixed;
  }
  return Parity::Mixed;
}

Complex SecularEquation::residual(Complex ka) const {
  const auto& p = params_;
  switch (family_) {
    case Family::DoubleEven: return residual_double(ka, p.alpha, Parity::Even);
    case Family::DoubleOdd: return residual_double(ka, p.alpha, Parity::Odd);
    case Family::TripleSymEven: return residual_triple_symmetric_even(ka, p.alpha, p.epsilon);
    case Family::TripleGeneral:
      return residual_triple_general(ka, p.alpha, p.epsilon, p.b_over_a);
  }
  return {};
}

double SecularEquation::residual_scale(Complex ka) const {
  const auto& p = params_;
  require_alpha(p.alpha);
  const Complex w = 2.0 * kI * ka;
  const double ew = std::abs(std::exp(w));
  switch (family_) {
    case Family::DoubleEven:
    case Family::DoubleOdd: return 1.0 + std::abs(w / p.alpha) + ew;
    case Family::TripleSymEven: {
      const double beta = p.epsilon * p.alpha;
      const Complex denom = beta + w;
      return 1.0 + std::abs(w / p.alpha) + std::abs((beta - w) / denom) * ew +
             std::abs(w) * std::abs(2.0 * beta / (denom * denom)) * ew;
    }
    case Family::TripleGeneral: {
      const Complex u = 1.0 + w / p.alpha;
      const Complex xi = std::exp(w) / u;
      const Complex eta = w / (p.epsilon * p.alpha);
      const Complex c = separation_cosine(2.0 * ka * p.b_over_a);
      const double quad = std::abs(xi * xi * (1.0 - eta));
      const double lin = 2.0 * std::abs(xi * c);
      return quad + lin + 1.0 + std::abs(eta) + std::abs(w / (p.alpha * u)) * (2.0 * quad + lin);
    }
  }
  return 1.0;
}

// All forms below are written in w = 2ika (so s = -w) and converted with dw/dk = 2i.
ResidualDerivative SecularEquation::solver_form(Complex ka) const {
  const double alpha = params_.alpha;
  const double eps = params_.epsilon;
  const Complex w = 2.0 * kI * ka;
  Complex g;
  Complex dg_dw;
  switch (family_) {
    case Family::DoubleEven: {
      // alpha * F
      const Complex ew = std::exp(w);
      g = alpha * (1.0 + ew) + w;
      dg_dw = alpha * ew + 1.0;
      break;
    }
    case Family::DoubleOdd: {
      // -alpha * F / w
      g = 1.0 - alpha * exprel(w);
      dg_dw = -alpha * exprel_derivative(w);
      break;
    }
    case Family::TripleSymEven: {
      // alpha * (beta + w) * F / w
      const Complex e1 = exprel(w);
      const Complex shift = w - eps * alpha;
      g = alpha * (2.0 + eps) + w + alpha * shift * e1;
      dg_dw = 1.0 + alpha * e1 + alpha * shift * exprel_derivative(w);
      break;
    }
    case Family::TripleGeneral: {
      // alpha^2 * beta * (1 + w/alpha)^2 * F / w^2. At b = 0 this equals the product of
      // the DoubleOdd and TripleSymEven solver forms.
      const double b = params_.b_over_a;
      const double bp = 1.0 + b;
      const double bm = 1.0 - b;
      const double a2 = alpha * alpha;
      const Complex phi2 = exprel2(2.0 * w);
      const Complex dphi2 = exprel2_derivative(2.0 * w);
      const Complex t = bp * bp * exprel2(bp * w) + bm * bm * exprel2(bm * w);
      const Complex dt =
          bp * bp * bp * exprel2_derivative(bp * w) + bm * bm * bm * exprel2_derivative(bm * w);
      const Complex shift = eps * alpha - w;
      g = -2.0 * a2 * (1.0 + eps) + alpha * (2.0 + eps) + w + 4.0 * a2 * shift * phi2 -
          eps * a2 * (alpha + w) * t;
      dg_dw = 1.0 + 4.0 * a2 * (-phi2 + 2.0 * shift * dphi2) -
              eps * a2 * (t + (alpha + w) * dt);
      break;
    }
  }
  return {g, 2.0 * kI * dg_dw};
}

double SecularEquation::parameter(SweepParameter p) const {
  switch (p) {
    case SweepParameter::Alpha: return params_.alpha;
    case SweepParameter::Epsilon: return params_.epsilon;
    case SweepParameter::BetaA: return params_.epsilon * params_.alpha;
  }
  return 0.0;
}

SecularEquation SecularEquation::with_parameter(SweepParameter p, double value) const {
  DimensionlessParams next = params_;
  switch (p) {
    case SweepParameter::Alpha: next.alpha = value; break;
    case SweepParameter::Epsilon: next.epsilon = value; break;
    case SweepParameter::BetaA:
      require_alpha(params_.alpha);
      next.epsilon = value / params_.alpha;
      break;
  }
  return SecularEquation(family_, next);
}

BranchValue alpha_of_s_double(double s, Parity parity) {
  if (parity == Parity::Mixed) throw DomainError("double structure branches are even or odd");
  if (parity == Parity::Even) return {BranchKind::Regular, s / (1.0 + std::exp(-s))};
  if (s == 0.0) return {BranchKind::Limit, 1.0};
  return {BranchKind::Regular, s / -std::expm1(-s)};
}

BranchValue alpha_of_s_triple(double s, double epsilon, BranchSign sign) {
  const double e = std::exp(-s);
  const double radicand = (1.0 - epsilon) * (1.0 - epsilon) + 2.0 * (1.0 + 3.0 * epsilon) * e + e * e;
  if (radicand < 0.0) return {BranchKind::NoRealBranch};
  const double root = std::sqrt(radicand);
  const double p = 1.0 + epsilon + e;
  // The two denominators multiply to 4 eps (1 - e^{-s}); the one that cancels is
  // rebuilt from that product so the s -> 0 threshold stays accurate.
  const bool plus_is_stable = p >= 0.0;
  const double stable = plus_is_stable ? p + root : p - root;
  const bool want_stable = (sign == BranchSign::Plus) == plus_is_stable;
  const BranchKind kind = s == 0.0 ? BranchKind::Limit : BranchKind::Regular;
  if (want_stable) {
    if (stable == 0.0) return {BranchKind::Asymptote, std::copysign(kInf, s)};
    return {kind, 2.0 * s / stable};
  }
  if (epsilon == 0.0 || stable == 0.0) return {BranchKind::Asymptote, std::copysign(kInf, s)};
  const double s_over_one_minus_e = s == 0.0 ? 1.0 : s / -std::expm1(-s);
  return {kind, stable / (2.0 * epsilon) * s_over_one_minus_e};
}

BranchValue epsilon_of_s(double s, double alpha) {
  require_alpha(alpha);
  const double x = s / alpha;
  const double e = std::exp(-s);
  const double num = 1.0 - x + e;
  const double den = 1.0 - x - e;
  if (den == 0.0) return {BranchKind::Asymptote, std::copysign(kInf, x * num)};
  return {BranchKind::Regular, x * num / den};
}

BranchValue beta_a_of_s(double s, double alpha, double b_over_a) {
  require_alpha(alpha);
  const double one_minus_x = 1.0 - s / alpha;
  if (one_minus_x == 0.0) return {BranchKind::Asymptote, kInf};
  const double xi = std::exp(-s) / one_minus_x;
  const double c = separation_cosine(Complex(0.0, s * b_over_a)).real();
  const double den = 1.0 - 2.0 * xi * c + xi * xi;
  const double num = s * (1.0 - xi * xi);
  if (den == 0.0) return {BranchKind::Asymptote, std::copysign(kInf, num)};
  return {BranchKind::Regular, num / den};
}

}  // namespace rsdelta
