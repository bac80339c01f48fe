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

#include <span>
#include <string_view>
#include <vector>

#include "rsdelta/types.hpp"
#include "rsdelta/wavefunction.hpp"

namespace rsdelta {

/// Closed-form transmission amplitude of the double structure (a = 1, alpha = gamma a):
/// t = 4k^2 / [4k(k - i alpha) - alpha^2 (1 - e^{4ik})]. Valid for complex k; throws
/// PoleError at a resonant-state pole. Returns the limit 0 at k = 0 for alpha != 0.
Complex t_analytic_double(Complex k, double alpha);

/// Residue of e^{2ik} t(k) / k at a double-structure state:
/// R = +-ik / (alpha [(alpha + 2ik) - 1]), sign from the parity.
/// Throws DegenerateNormalization when the denominator vanishes.
Complex residue_double(Complex k, Parity parity, double alpha);
Complex residue_double(const ResonantState& state, double alpha);

/// Residue from a normalized wave: R = i psi(1) psi(-1) / k. Valid for any structure.
Complex residue_from_wave(const PiecewiseWave& wave);

/// Pole expansion t = k e^{-2ik} sum_n R_n / (k - k_n) over the given states, using the
/// closed-form double residues. States are summed by increasing |Re k|; a state and its
/// mirror -k* enter as one fused term.
Complex t_mittag_leffler(double k, std::span<const ResonantState> states, double alpha);

/// Same expansion with residues taken from normalized waves (any structure).
Complex t_mittag_leffler(double k, std::span<const PiecewiseWave> waves);

/// Green's function partial sum G(x, x') = sum_n psi_n(x) psi_n(x') / (2 k_n (k - k_n)),
/// for |x|, |x'| <= 1.
Complex greens_function_ml(double x, double x_prime, Complex k, std::span<const PiecewiseWave> waves);

/// t = 2ik e^{-2ik} G(1, -1).
Complex t_from_green(double k, std::span<const PiecewiseWave> waves);

struct Mat2 {
  Complex m11{1.0}, m12{}, m21{}, m22{1.0};

  Complex det() const { return m11 * m22 - m12 * m21; }
  Mat2 operator*(const Mat2& o) const {
    return {m11 * o.m11 + m12 * o.m21, m11 * o.m12 + m12 * o.m22, m21 * o.m11 + m22 * o.m21,
            m21 * o.m12 + m22 * o.m22};
  }
};

/// Maps (e^{ikx}, e^{-ikx}) amplitudes on the far left to those on the far right.
/// Physical units: k in inverse length of the potential's coordinates. Throws PoleError at k = 0.
Mat2 transfer_matrix(Complex k, const DeltaPotential& potential);

struct Scattering {
  Complex t;
  Complex r;
};

/// t = 1/M22, r = -M21/M22 for incidence from the left.
Scattering scattering(Complex k, const DeltaPotential& potential);

enum class TransmissionMethod { Analytic, MittagLeffler, TransferMatrix };
std::string_view to_string(TransmissionMethod m);

struct TransmissionSpectrum {
  std::vector<double> k_grid;
  std::vector<Complex> t;
  TransmissionMethod method = TransmissionMethod::Analytic;
  std::size_t n_states = 0;  // MittagLeffler only

  double abs_t2(std::size_t i) const { return std::norm(t[i]); }
  double max_abs_t2() const;
};

/// n evenly spaced points on [lo, hi]; requires n >= 2 and 0 < lo < hi.
std::vector<double> linear_grid(double lo, double hi, std::size_t n);
std::vector<double> default_k_grid();  // 2001 points on [0.005, 10]

TransmissionSpectrum spectrum_analytic(std::span<const double> grid, double alpha, unsigned threads = 0);
TransmissionSpectrum spectrum_transfer_matrix(std::span<const double> grid, const DeltaPotential& potential,
                                              unsigned threads = 0);
TransmissionSpectrum spectrum_mittag_leffler(std::span<const double> grid,
                                             std::span<const ResonantState> states, double alpha,
                                             unsigned threads = 0);
TransmissionSpectrum spectrum_mittag_leffler(std::span<const double> grid,
                                             std::span<const PiecewiseWave> waves, unsigned threads = 0);

/// Bound states plus the n normal mirror pairs of smallest |Re k|.
std::vector<ResonantState> bound_and_pairs(std::span<const ResonantState> states, std::size_t n_pairs);
/// Every state with |Re k| <= re_max.
std::vector<ResonantState> states_in_window(std::span<const ResonantState> states, double re_max);

/// max_i | |t_a(k_i)|^2 - |t_b(k_i)|^2 | over a shared grid.
double max_abs_t2_deviation(const TransmissionSpectrum& a, const TransmissionSpectrum& b);

}  // namespace rsdelta
