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

#include "rsdelta/transmission.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "rsdelta/errors.hpp"
#include "rsdelta/parallel.hpp"

namespace rsdelta {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kMirrorTol = 1e-8;

// Poles and residues grouped into fused mirror pairs, ordered by |Re k|.
class PoleSeries {
 public:
  PoleSeries(std::vector<Complex> poles, std::vector<Complex> residues) {
    std::vector<std::size_t> order(poles.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return std::abs(poles[a].real()) < std::abs(poles[b].real());
    });
    std::vector<bool> used(poles.size(), false);
    for (std::size_t oi = 0; oi < order.size(); ++oi) {
      const std::size_t i = order[oi];
      if (used[i]) continue;
      used[i] = true;
      Group g{{poles[i]}, {residues[i]}};
      const Complex mirror = -std::conj(poles[i]);
      if (std::abs(mirror - poles[i]) > kMirrorTol) {
        for (std::size_t oj = oi + 1; oj < order.size(); ++oj) {
          const std::size_t j = order[oj];
          if (!used[j] && std::abs(poles[j] - mirror) <= kMirrorTol) {
            used[j] = true;
            g.poles.push_back(poles[j]);
            g.residues.push_back(residues[j]);
            break;
          }
        }
      }
      groups_.push_back(std::move(g));
    }
  }

  Complex transmission(double k) const {
    Complex sum{};
    for (const Group& g : groups_) {
      Complex term{};
      for (std::size_t n = 0; n < g.poles.size(); ++n) term += g.residues[n] / (k - g.poles[n]);
      sum += term;
    }
    return k * std::exp(-2.0 * kI * k) * sum;
  }

 private:
  struct Group {
    std::vector<Complex> poles;
    std::vector<Complex> residues;
  };
  std::vector<Group> groups_;
};

PoleSeries series_double(std::span<const ResonantState> states, double alpha) {
  std::vector<Complex> poles;
  std::vector<Complex> residues;
  for (const auto& s : states) {
    poles.push_back(s.k);
    residues.push_back(residue_double(s, alpha));
  }
  return {std::move(poles), std::move(residues)};
}

PoleSeries series_waves(std::span<const PiecewiseWave> waves) {
  std::vector<Complex> poles;
  std::vector<Complex> residues;
  for (const auto& w : waves) {
    poles.push_back(w.k());
    residues.push_back(residue_from_wave(w));
  }
  return {std::move(poles), std::move(residues)};
}

TransmissionSpectrum evaluate(std::span<const double> grid, TransmissionMethod method, std::size_t n_states,
                              unsigned threads, const std::function<Complex(double)>& f) {
  TransmissionSpectrum s;
  s.k_grid.assign(grid.begin(), grid.end());
  s.t.resize(grid.size());
  s.method = method;
  s.n_states = n_states;
  parallel_for(grid.size(), [&](std::size_t i) { s.t[i] = f(s.k_grid[i]); }, threads);
  return s;
}

}  // namespace

Complex t_analytic_double(Complex k, double alpha) {
  if (!std::isfinite(alpha)) throw DomainError("alpha must be finite");
  if (alpha == 0.0) return 1.0;
  if (k == 0.0) return 0.0;
  const Complex num = 4.0 * k * k;
  const Complex den = 4.0 * k * (k - kI * alpha) - alpha * alpha * (1.0 - std::exp(4.0 * kI * k));
  if (std::abs(den) <= 1e-15 * (std::abs(num) + alpha * alpha))
    throw PoleError("transmission evaluated at a resonant-state pole");
  return num / den;
}

Complex residue_double(Complex k, Parity parity, double alpha) {
  if (parity == Parity::Mixed) throw DomainError("double-structure residue needs an even or odd state");
  if (alpha == 0.0) throw DomainError("alpha must be nonzero");
  const Complex den = alpha * ((alpha + 2.0 * kI * k) - 1.0);
  if (std::abs(den) == 0.0) throw DegenerateNormalization("residue denominator vanishes");
  const double sign = parity == Parity::Even ? 1.0 : -1.0;
  return sign * kI * k / den;
}

Complex residue_double(const ResonantState& state, double alpha) {
  return residue_double(state.k, state.parity, alpha);
}

Complex residue_from_wave(const PiecewiseWave& wave) {
  return kI * wave(1.0) * wave(-1.0) / wave.k();
}

Complex t_mittag_leffler(double k, std::span<const ResonantState> states, double alpha) {
  return series_double(states, alpha).transmission(k);
}

Complex t_mittag_leffler(double k, std::span<const PiecewiseWave> waves) {
  return series_waves(waves).transmission(k);
}

Complex greens_function_ml(double x, double x_prime, Complex k, std::span<const PiecewiseWave> waves) {
  if (std::abs(x) > 1.0 || std::abs(x_prime) > 1.0)
    throw DomainError("Green's function expansion holds only inside the structure");
  Complex g{};
  for (const auto& w : waves) g += w(x) * w(x_prime) / (2.0 * w.k() * (k - w.k()));
  return g;
}

Complex t_from_green(double k, std::span<const PiecewiseWave> waves) {
  return 2.0 * kI * k * std::exp(-2.0 * kI * k) * greens_function_ml(1.0, -1.0, k, waves);
}

// Composed in the (psi, psi') basis, where a delta and a free stretch are O(1) matrices,
// then converted to plane-wave amplitudes at the outer deltas. Multiplying the plane-wave
// delta matrices directly loses digits to cancellation once |gamma/k| is large.
Mat2 transfer_matrix(Complex k, const DeltaPotential& potential) {
  if (k == 0.0) throw PoleError("transfer matrix is singular at k = 0");
  const auto xs = potential.positions();
  const auto gs = potential.strengths();
  if (xs.empty()) return {};
  Mat2 t;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) {
      const Complex kl = k * (xs[i] - xs[i - 1]);
      const Complex c = std::cos(kl);
      const Complex s = std::sin(kl);
      t = Mat2{c, s / k, -k * s, c} * t;
    }
    t = Mat2{1.0, 0.0, -gs[i], 1.0} * t;
  }
  const Complex e_l = std::exp(kI * k * xs.front());
  const Complex e_r = std::exp(kI * k * xs.back());
  const Mat2 to_local{e_l, 1.0 / e_l, kI * k * e_l, -kI * k / e_l};
  const Mat2 from_local{0.5 / e_r, 0.5 / (kI * k * e_r), 0.5 * e_r, -0.5 * e_r / (kI * k)};
  return from_local * t * to_local;
}

Scattering scattering(Complex k, const DeltaPotential& potential) {
  const Mat2 m = transfer_matrix(k, potential);
  if (m.m22 == 0.0) throw PoleError("scattering evaluated at a zero of M22");
  return {1.0 / m.m22, -m.m21 / m.m22};
}

std::string_view to_string(TransmissionMethod m) {
  switch (m) {
    case TransmissionMethod::Analytic: return "analytic";
    case TransmissionMethod::MittagLeffler: return "ml";
    case TransmissionMethod::TransferMatrix: return "transfer-matrix";
  }
  return "?";
}

double TransmissionSpectrum::max_abs_t2() const {
  double m = 0.0;
  for (const Complex& z : t) m = std::max(m, std::norm(z));
  return m;
}

std::vector<double> linear_grid(double lo, double hi, std::size_t n) {
  if (n < 2 || !(lo > 0.0) || !(hi > lo)) throw DomainError("grid needs n >= 2 and 0 < lo < hi");
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i) g[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  g.back() = hi;
  return g;
}

std::vector<double> default_k_grid() { return linear_grid(0.005, 10.0, 2001); }

TransmissionSpectrum spectrum_analytic(std::span<const double> grid, double alpha, unsigned threads) {
  return evaluate(grid, TransmissionMethod::Analytic, 0, threads,
                  [&](double k) { return t_analytic_double(k, alpha); });
}

TransmissionSpectrum spectrum_transfer_matrix(std::span<const double> grid, const DeltaPotential& potential,
                                              unsigned threads) {
  return evaluate(grid, TransmissionMethod::TransferMatrix, 0, threads,
                  [&](double k) { return scattering(k, potential).t; });
}

TransmissionSpectrum spectrum_mittag_leffler(std::span<const double> grid,
                                             std::span<const ResonantState> states, double alpha,
                                             unsigned threads) {
  const PoleSeries series = series_double(states, alpha);
  return evaluate(grid, TransmissionMethod::MittagLeffler, states.size(), threads,
                  [&](double k) { return series.transmission(k); });
}

TransmissionSpectrum spectrum_mittag_leffler(std::span<const double> grid,
                                             std::span<const PiecewiseWave> waves, unsigned threads) {
  const PoleSeries series = series_waves(waves);
  return evaluate(grid, TransmissionMethod::MittagLeffler, waves.size(), threads,
                  [&](double k) { return series.transmission(k); });
}

std::vector<ResonantState> bound_and_pairs(std::span<const ResonantState> states, std::size_t n_pairs) {
  std::vector<ResonantState> out;
  std::vector<ResonantState> right;
  for (const auto& s : states) {
    if (s.kind == StateClass::Bound) out.push_back(s);
    else if (s.kind == StateClass::NormalRS && s.k.real() > 0.0) right.push_back(s);
  }
  std::stable_sort(right.begin(), right.end(),
                   [](const ResonantState& a, const ResonantState& b) { return a.k.real() < b.k.real(); });
  right.resize(std::min(right.size(), n_pairs));
  for (const auto& r : right) {
    out.push_back(r);
    const Complex mirror = -std::conj(r.k);
    const auto it = std::find_if(states.begin(), states.end(), [&](const ResonantState& s) {
      return std::abs(s.k - mirror) <= kMirrorTol;
    });
    if (it == states.end()) throw ConsistencyError("state list is missing a mirror partner");
    out.push_back(*it);
  }
  return out;
}

std::vector<ResonantState> states_in_window(std::span<const ResonantState> states, double re_max) {
  std::vector<ResonantState> out;
  std::copy_if(states.begin(), states.end(), std::back_inserter(out),
               [&](const ResonantState& s) { return std::abs(s.k.real()) <= re_max; });
  return out;
}

double max_abs_t2_deviation(const TransmissionSpectrum& a, const TransmissionSpectrum& b) {
  if (a.k_grid != b.k_grid) throw DomainError("spectra are on different grids");
  double m = 0.0;
  for (std::size_t i = 0; i < a.t.size(); ++i) m = std::max(m, std::abs(std::norm(a.t[i]) - std::norm(b.t[i])));
  return m;
}

}  // namespace rsdelta
