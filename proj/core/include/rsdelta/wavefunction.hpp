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

#include <optional>
#include <span>
#include <vector>

#include "rsdelta/types.hpp"

namespace rsdelta {

/// psi(x) = out * e^{ikx} + in * e^{-ikx} on [x_lo, x_hi]; outer pieces extend to +-infinity.
struct WaveRegion {
  double x_lo;
  double x_hi;
  Complex out;
  Complex in;
};

/// A resonant-state wavefunction, piecewise a pair of plane waves between deltas.
class PiecewiseWave {
 public:
  PiecewiseWave(Complex k, std::vector<WaveRegion> regions);

  Complex k() const { return k_; }
  std::span<const WaveRegion> regions() const { return regions_; }
  /// Interior region boundaries, i.e. the delta positions.
  std::vector<double> knots() const;

  Complex operator()(double x) const;
  /// psi'(x); at a knot this is the right-sided derivative.
  Complex derivative(double x) const;
  Complex derivative_left(double x) const;

  PiecewiseWave scaled(Complex factor) const;

 private:
  const WaveRegion& region_right_of(double x) const;
  const WaveRegion& region_left_of(double x) const;

  Complex k_;
  std::vector<WaveRegion> regions_;
};

struct DoubleNormalization {
  Complex a;
  Complex c;
};

/// Closed-form Siegert normalization of a double-structure state (a = 1 units):
/// C = 1 / (2 sqrt(+-[a - (gamma + 2ik)^{-1}])), A = C (1 + gamma/(2ik))^{-1}.
DoubleNormalization normalize_double(Complex k, Parity parity, double alpha);
DoubleNormalization normalize_double(const ResonantState& state, double alpha);

/// Normalized double-structure wave: A e^{ikx} outside, C(e^{ikx} +- e^{-ikx}) inside.
/// Throws ContractError when k is not a root of the parity's secular equation (|F| > 1e-10).
PiecewiseWave build_wave_double(Complex k, Parity parity, double alpha);

/// Normalized triple-structure wave with deltas at -1, b/a, 1. Amplitudes follow from the
/// jump conditions; the normalization is the analytic Siegert integral.
PiecewiseWave build_wave_triple(Complex k, double alpha, double epsilon, double b_over_a);

PiecewiseWave build_wave(Complex k, Parity parity, Structure structure, const DimensionlessParams& p);

/// Builds a classified, normalized state for a verified root.
ResonantState make_state(Complex k, Parity parity, Structure structure,
                         const DimensionlessParams& p, double classify_tol = kClassifyTol);

/// Rebuilds the normalized wave of a state (scaled so that psi = norm_a e^{ikx} on x > a).
PiecewiseWave wave_of(const ResonantState& state, Structure structure, const DimensionlessParams& p);

/// Siegert product  int_{xL}^{xR} psi_n psi_m dx - [psi_n psi_m](xL) + [psi_n psi_m](xR) / (i(k_n + k_m)).
/// No complex conjugation. gl_panels = 0 integrates each piece exactly; otherwise composite
/// Gauss-Legendre with that many panels per piece. Returns nullopt when k_n + k_m = 0.
std::optional<Complex> siegert_product(const PiecewiseWave& n, const PiecewiseWave& m, double x_l,
                                       double x_r, int gl_panels = 0);

class OrthonormalityMatrix {
 public:
  explicit OrthonormalityMatrix(std::size_t size) : size_(size), entries_(size * size) {}

  std::size_t size() const { return size_; }
  const std::optional<Complex>& operator()(std::size_t n, std::size_t m) const {
    return entries_[n * size_ + m];
  }
  std::optional<Complex>& operator()(std::size_t n, std::size_t m) { return entries_[n * size_ + m]; }

  /// max |M - I| over determinate entries.
  double max_deviation_from_identity() const;
  std::size_t indeterminate_count() const;

 private:
  std::size_t size_;
  std::vector<std::optional<Complex>> entries_;
};

/// Requires x_l <= -a and x_r >= a (a = 1).
OrthonormalityMatrix orthonormality_matrix(std::span<const PiecewiseWave> waves, double x_l,
                                           double x_r, int gl_panels = 0);

}  // namespace rsdelta
