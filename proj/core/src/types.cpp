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

#include "rsdelta/types.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rsdelta/errors.hpp"

namespace rsdelta {

std::string_view to_string(StateClass c) {
  switch (c) {
    case StateClass::Bound: return "bound";
    case StateClass::AntiBound: return "anti-bound";
    case StateClass::NormalRS: return "normal";
  }
  return "?";
}

std::string_view to_string(Parity p) {
  switch (p) {
    case Parity::Even: return "even";
    case Parity::Odd: return "odd";
    case Parity::Mixed: return "mixed";
  }
  return "?";
}

std::string_view to_string(Structure s) {
  return s == Structure::Double ? "double" : "triple";
}

DeltaPotential::DeltaPotential(std::vector<double> positions, std::vector<double> strengths)
    : positions_(std::move(positions)), strengths_(std::move(strengths)) {
  if (positions_.empty()) throw DomainError("potential needs at least one delta");
  if (positions_.size() != strengths_.size())
    throw DomainError("positions and strengths differ in length");
  for (std::size_t i = 0; i < positions_.size(); ++i) {
    if (!std::isfinite(positions_[i]) || !std::isfinite(strengths_[i]))
      throw DomainError("non-finite potential definition");
    if (i > 0 && !(positions_[i] > positions_[i - 1]))
      throw DomainError("delta positions must be strictly increasing");
  }
}

DeltaPotential DeltaPotential::double_well(double gamma, double a) {
  if (!(a > 0)) throw DomainError("half-width a must be positive");
  return DeltaPotential({-a, a}, {gamma, gamma});
}

DeltaPotential DeltaPotential::triple_well(double gamma, double beta, double a, double b) {
  if (!(a > 0)) throw DomainError("half-width a must be positive");
  if (!(b > -a && b < a)) throw DomainError("middle delta must satisfy -a < b < a");
  return DeltaPotential({-a, b, a}, {gamma, beta, gamma});
}

DeltaPotential DeltaPotential::from_params(Structure structure, const DimensionlessParams& p) {
  if (structure == Structure::Double) return double_well(p.alpha, 1.0);
  return triple_well(p.alpha, p.epsilon * p.alpha, 1.0, p.b_over_a);
}

bool DeltaPotential::is_double() const {
  return size() == 2 && positions_[0] == -positions_[1] && strengths_[0] == strengths_[1];
}

bool DeltaPotential::is_triple() const {
  return size() == 3 && positions_[0] == -positions_[2] && strengths_[0] == strengths_[2];
}

Structure DeltaPotential::structure() const {
  if (is_double()) return Structure::Double;
  if (is_triple()) return Structure::Triple;
  throw DomainError("potential is neither a symmetric double nor a triple delta layout");
}

double DeltaPotential::half_width() const {
  structure();
  return positions_.back();
}

DimensionlessParams DeltaPotential::params() const {
  const Structure s = structure();
  const double a = positions_.back();
  const double gamma = strengths_.front();
  DimensionlessParams p;
  p.alpha = gamma * a;
  if (s == Structure::Triple) {
    const double beta = strengths_[1];
    if (gamma == 0.0) {
      if (beta != 0.0) throw DomainError("epsilon = beta/gamma undefined for gamma = 0");
    } else {
      p.epsilon = beta / gamma;
    }
    p.b_over_a = positions_[1] / a;
  }
  return p;
}

Complex reduced_q(Complex k, double gamma) {
  if (gamma == 0.0) throw DomainError("reduced_q: gamma must be nonzero");
  return Complex(0.0, -2.0) * k / gamma;
}

Complex reduced_s(Complex k, double a) {
  if (!(a > 0)) throw DomainError("reduced_s: a must be positive");
  return Complex(0.0, -2.0 * a) * k;
}

StateClass classify(Complex k, double tol) {
  if (std::abs(k) <= tol) throw DomainError("k = 0 is not a physical resonant state");
  if (std::abs(k.real()) <= tol) return k.imag() > 0 ? StateClass::Bound : StateClass::AntiBound;
  return StateClass::NormalRS;
}

std::optional<StateClass> classify_or_threshold(Complex k, double tol) {
  if (std::abs(k) <= tol) return std::nullopt;
  return classify(k, tol);
}

}  // namespace rsdelta
