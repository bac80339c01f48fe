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

#include <complex>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace rsdelta {

using Complex = std::complex<double>;

/// Separator between axis states (|Re ka| <= tol) and normal resonant states.
inline constexpr double kClassifyTol = 1e-9;

enum class StateClass { Bound, AntiBound, NormalRS };
enum class Parity { Even, Odd, Mixed };
enum class Structure { Double, Triple };

std::string_view to_string(StateClass c);
std::string_view to_string(Parity p);
std::string_view to_string(Structure s);

/// Parameters in units of the half-width a: alpha = gamma*a, epsilon = beta/gamma, b/a.
struct DimensionlessParams {
  double alpha = 0.0;
  double epsilon = 0.0;
  double b_over_a = 0.0;
};

/// A one-dimensional array of delta wells/barriers, V(x) = -sum_i g_i delta(x - x_i).
///
/// Positive strength is a well, negative a barrier. The typed solver API accepts
/// only the double (+-a) and triple (-a, b, a) layouts; arbitrary arrays are
/// allowed so the transfer-matrix oracle can be exercised on them.
class DeltaPotential {
 public:
  DeltaPotential(std::vector<double> positions, std::vector<double> strengths);

  static DeltaPotential double_well(double gamma, double a);
  static DeltaPotential triple_well(double gamma, double beta, double a, double b);
  /// Builds the potential with a = 1 from dimensionless parameters.
  static DeltaPotential from_params(Structure structure, const DimensionlessParams& p);

  std::span<const double> positions() const { return positions_; }
  std::span<const double> strengths() const { return strengths_; }
  std::size_t size() const { return positions_.size(); }

  bool is_double() const;
  bool is_triple() const;
  Structure structure() const;  // throws DomainError for other layouts

  /// Half-width a of a double/triple layout.
  double half_width() const;
  DimensionlessParams params() const;

 private:
  std::vector<double> positions_;
  std::vector<double> strengths_;
};

/// q = -2ik/gamma; real and positive for bound states of a well.
Complex reduced_q(Complex k, double gamma);
/// s = -2ika; s = q*alpha for any k.
Complex reduced_s(Complex k, double a);

/// Classifies a wavenumber; throws DomainError when |k| <= tol (the spurious k = 0 root).
StateClass classify(Complex k, double tol = kClassifyTol);

/// Classification that maps the zero-energy threshold point to nullopt instead of throwing.
std::optional<StateClass> classify_or_threshold(Complex k, double tol = kClassifyTol);

/// A resonant state in units of a (k means ka, energy means E a^2).
struct ResonantState {
  Complex k;
  StateClass kind = StateClass::NormalRS;
  Parity parity = Parity::Mixed;
  /// Outer amplitude: psi = A e^{ikx} for x > a.
  Complex norm_a;
  /// e^{ikx} amplitude on the rightmost inner piece.
  Complex norm_c;
  /// e^{ikx} amplitude on the leftmost inner piece (triple structures only).
  std::optional<Complex> norm_d;

  Complex energy() const { return k * k; }
};

}  // namespace rsdelta
