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

#pragma once

#include <limits>
#include <string_view>

#include "rsdelta/types.hpp"

namespace rsdelta {

/// Which secular function a root search runs on.
enum class Family { DoubleEven, DoubleOdd, TripleSymEven, TripleGeneral };

enum class BranchSign { Plus, Minus };

/// Parameters a branch can be swept in.
enum class SweepParameter { Alpha, Epsilon, BetaA };

std::string_view to_string(Family f);
std::string_view to_string(SweepParameter p);

/// F(k) = 1 + 2ik/gamma +- e^{2ika}, upper sign for even states. ka is dimensionless.
Complex residual_double(Complex ka, double alpha, Parity parity);

/// Even-sector residual of the symmetric triple (b = 0):
/// F = 1 + 2ik/gamma - (1 - 2ik/beta)/(1 + 2ik/beta) e^{2ika}.
/// Throws PoleError at 1 + 2ik/beta = 0.
Complex residual_triple_symmetric_even(Complex ka, double alpha, double epsilon);

/// xi^2 (1 - eta) - 2 xi cos(2kb) + 1 + eta with xi = e^{2ika}/(1 + 2ik/gamma), eta = 2ik/beta.
/// Throws PoleError at 1 + 2ik/gamma = 0 and DomainError for beta = 0.
Complex residual_triple_general(Complex ka, double alpha, double epsilon, double b_over_a);

struct ResidualDerivative {
  Complex value;
  Complex derivative;
};

/// A secular function for one potential family and parity sector.
///
/// Besides the published residual, every equation exposes an entire "solver form":
/// the residual with its pole cleared and the identically vanishing k = 0 factor
/// divided out, so that Newton iteration never converges to the spurious root and
/// zero-energy thresholds appear as simple roots at k = 0.
class SecularEquation {
 public:
  SecularEquation(Family family, DimensionlessParams params);

  Family family() const { return family_; }
  const DimensionlessParams& params() const { return params_; }
  Parity parity() const;

  /// Published residual F(ka); throws PoleError at declared poles.
  Complex residual(Complex ka) const;

  /// Sum of the moduli of the terms of the published residual, plus |w| times the moduli of
  /// the pole-factor derivative terms. |F| is compared against this scale.
  double residual_scale(Complex ka) const;

  /// Solver form G(ka) and dG/d(ka). Zeros of G are exactly the nonzero zeros of F.
  ResidualDerivative solver_form(Complex ka) const;

  double parameter(SweepParameter p) const;
  SecularEquation with_parameter(SweepParameter p, double value) const;

 private:
  Family family_;
  DimensionlessParams params_;
};

/// Outcome of an explicit inverse branch function evaluated at a real s.
enum class BranchKind { Regular, Limit, Asymptote, NoRealBranch };

struct BranchValue {
  BranchKind kind = BranchKind::Regular;
  double value = std::numeric_limits<double>::quiet_NaN();

  bool finite() const { return kind == BranchKind::Regular || kind == BranchKind::Limit; }
};

/// alpha(s) = s / (1 +- e^{-s}) for bound/anti-bound states of the double structure.
BranchValue alpha_of_s_double(double s, Parity parity);

/// The two even-sector branches of the symmetric triple,
/// alpha = 2s / (1 + eps + e^{-s} +- sqrt((1 - eps)^2 + 2(1 + 3 eps) e^{-s} + e^{-2s})).
BranchValue alpha_of_s_triple(double s, double epsilon, BranchSign sign);

/// eps(s) = (s/alpha)(1 - s/alpha + e^{-s}) / (1 - s/alpha - e^{-s}) at fixed alpha.
BranchValue epsilon_of_s(double s, double alpha);

/// beta*a(s) = s (1 - xi^2) / (1 - 2 xi c + xi^2), xi = e^{-s}/(1 - s/alpha), c = cosh(s b/a).
BranchValue beta_a_of_s(double s, double alpha, double b_over_a);

}  // namespace rsdelta
