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

#include "rsdelta_cli/check.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>

#include <fmt/format.h>

#include "rsdelta/errors.hpp"
#include "rsdelta/rootfinder.hpp"
#include "rsdelta/secular.hpp"
#include "rsdelta/transmission.hpp"
#include "rsdelta/wavefunction.hpp"

namespace rsdelta::cli {

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

Outcome verdict(bool passed, std::string detail) { return {passed, std::move(detail)}; }

SecularEquation equation_for(Structure structure, const DimensionlessParams& p, Parity parity) {
  if (structure == Structure::Double)
    return SecularEquation(parity == Parity::Even ? Family::DoubleEven : Family::DoubleOdd, p);
  if (parity == Parity::Even) return SecularEquation(Family::TripleSymEven, p);
  if (parity == Parity::Odd) return SecularEquation(Family::DoubleOdd, p);
  return SecularEquation(Family::TripleGeneral, p);
}

// Largest distance from any root of `a` to its nearest root in `b`.
double max_nearest(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double worst = 0.0;
  for (Complex z : a) {
    double best = INFINITY;
    for (Complex w : b) best = std::min(best, std::abs(z - w));
    worst = std::max(worst, best);
  }
  return worst;
}

std::vector<Complex> wavenumbers(const std::vector<ResonantState>& states) {
  std::vector<Complex> ks;
  for (const auto& s : states) ks.push_back(s.k);
  return ks;
}

class Suite {
 public:
  explicit Suite(const CheckConfig& config) : config_(config) {
    window_ = default_window(config.structure, config.params, config.re_max);
    states_ = find_all_states(config.structure, config.params, window_);
    if (config.fault == Fault::AdmitZeroRoot) {
      ResonantState zero;
      zero.k = 0.0;
      zero.kind = StateClass::Bound;
      zero.parity = config.structure == Structure::Double || config.params.b_over_a == 0.0 ? Parity::Odd
                                                                                          : Parity::Mixed;
      states_.insert(states_.begin(), zero);
    }
  }

  std::vector<CheckResult> run() {
    std::vector<CheckResult> out;
    const auto add = [&](std::string name, const std::function<Outcome()>& check) {
      CheckResult r{std::move(name), false, {}};
      try {
        const Outcome o = check();
        r.passed = o.passed;
        r.detail = o.detail;
      } catch (const std::exception& e) {
        r.detail = fmt::format("error: {}", e.what());
      }
      out.push_back(std::move(r));
    };
    add("spurious-root", [&] { return spurious_root(); });
    add("residuals", [&] { return residuals(); });
    add("mirror-symmetry", [&] { return mirror(); });
    add("no-duplicates", [&] { return duplicates(); });
    add("orthonormality", [&] { return orthonormality(); });
    add("reduction-b0", [&] { return reduction_b0(); });
    add("reduction-small-epsilon", [&] { return reduction_small_epsilon(); });
    add("rs-zeros-of-m22", [&] { return zeros_of_m22(); });
    add("flux-conservation", [&] { return flux(); });
    if (config_.structure == Structure::Double) add("tm-vs-analytic", [&] { return tm_vs_analytic(); });
    add("ml-vs-reference", [&] { return ml_vs_reference(); });
    return out;
  }

 private:
  Outcome spurious_root() const {
    std::size_t bad = 0;
    for (const auto& s : states_) bad += std::abs(s.k) <= 1e-9;
    return verdict(bad == 0, fmt::format("{} states, {} with |ka| <= 1e-9", states_.size(), bad));
  }

  Outcome residuals() const {
    double worst = 0.0;
    for (const auto& s : states_) {
      const SecularEquation eq = equation_for(config_.structure, config_.params, s.parity);
      worst = std::max(worst, std::abs(eq.residual(s.k)) / std::max(1.0, eq.residual_scale(s.k)));
    }
    return verdict(worst <= 1e-12, fmt::format("max scaled |F| = {:.3g}", worst));
  }

  Outcome mirror() const {
    double worst = 0.0;
    for (const auto& s : states_) {
      if (std::abs(s.k.real()) > window_.re_max) continue;
      double best = INFINITY;
      for (const auto& t : states_) best = std::min(best, std::abs(t.k + std::conj(s.k)));
      worst = std::max(worst, best);
    }
    return verdict(worst <= 1e-8, fmt::format("max |k' + k*| = {:.3g}", worst));
  }

  Outcome duplicates() const {
    double closest = INFINITY;
    for (std::size_t i = 0; i < states_.size(); ++i)
      for (std::size_t j = i + 1; j < states_.size(); ++j)
        closest = std::min(closest, std::abs(states_[i].k - states_[j].k));
    return verdict(closest > 1e-8, fmt::format("min pairwise |dk| = {:.3g}", closest));
  }

  Outcome orthonormality() const {
    std::vector<ResonantState> first = states_;
    std::stable_sort(first.begin(), first.end(), [](const ResonantState& a, const ResonantState& b) {
      return std::abs(a.k.real()) < std::abs(b.k.real());
    });
    first.resize(std::min<std::size_t>(first.size(), 20));
    std::vector<PiecewiseWave> waves;
    for (const auto& s : first) waves.push_back(wave_of(s, config_.structure, config_.params));
    const auto inner = orthonormality_matrix(waves, -1.0, 1.0);
    const auto outer = orthonormality_matrix(waves, -3.0, 3.0);
    double shift = 0.0;
    for (std::size_t i = 0; i < waves.size(); ++i)
      for (std::size_t j = 0; j < waves.size(); ++j)
        if (inner(i, j) && outer(i, j)) shift = std::max(shift, std::abs(*inner(i, j) - *outer(i, j)));
    const double dev = std::max(inner.max_deviation_from_identity(), outer.max_deviation_from_identity());
    return verdict(dev <= 1e-8 && shift <= 1e-8,
                   fmt::format("{} states, max |M - I| = {:.3g}, interval shift {:.3g}", waves.size(), dev, shift));
  }

  Outcome reduction_b0() const {
    DimensionlessParams p = config_.params;
    if (config_.structure == Structure::Double) p.epsilon = 0.5;
    p.b_over_a = 0.0;
    if (p.epsilon == 0.0) p.epsilon = 0.5;
    const SearchWindow w = default_window(Structure::Triple, p, 10.0);
    const auto general = find_roots(SecularEquation(Family::TripleGeneral, p), w);
    auto factors = find_roots(SecularEquation(Family::TripleSymEven, p), w);
    const auto odd = find_roots(SecularEquation(Family::DoubleOdd, p), w);
    factors.insert(factors.end(), odd.begin(), odd.end());
    const double d = std::max(max_nearest(general, factors), max_nearest(factors, general));
    return verdict(general.size() == factors.size() && d <= 1e-10,
                   fmt::format("{} vs {} roots, max distance {:.3g}", general.size(), factors.size(), d));
  }

  Outcome reduction_small_epsilon() const {
    const DimensionlessParams dp{config_.params.alpha, 0.0, 0.0};
    const DimensionlessParams tp{config_.params.alpha, 1e-12, 0.0};
    const SearchWindow w = default_window(Structure::Double, dp, 10.0);
    const auto d = wavenumbers(find_all_states(Structure::Double, dp, w));
    const auto t = wavenumbers(find_all_states(Structure::Triple, tp, w));
    const double dist = std::max(max_nearest(d, t), max_nearest(t, d));
    return verdict(d.size() == t.size() && dist <= 1e-9,
                   fmt::format("{} vs {} roots, max distance {:.3g}", d.size(), t.size(), dist));
  }

  DeltaPotential potential() const { return DeltaPotential::from_params(config_.structure, config_.params); }

  Outcome zeros_of_m22() const {
    const DeltaPotential v = potential();
    double worst = 0.0;
    for (const auto& s : states_) {
      const Mat2 m = transfer_matrix(s.k, v);
      const double scale = std::max({1.0, std::abs(m.m11), std::abs(m.m12), std::abs(m.m21)});
      worst = std::max(worst, std::abs(m.m22) / scale);
    }
    return verdict(worst <= 1e-10, fmt::format("max |M22| / scale = {:.3g}", worst));
  }

  Outcome flux() const {
    const DeltaPotential v = potential();
    double worst = 0.0;
    double peak = 0.0;
    for (double k : default_k_grid()) {
      const Scattering sc = scattering(k, v);
      worst = std::max(worst, std::abs(std::norm(sc.t) + std::norm(sc.r) - 1.0));
      peak = std::max(peak, std::norm(sc.t));
    }
    return verdict(worst <= 1e-12 && peak <= 1.0 + 1e-10,
                   fmt::format("max ||t|^2 + |r|^2 - 1| = {:.3g}, max |t|^2 = {:.12g}", worst, peak));
  }

  Outcome tm_vs_analytic() const {
    const auto grid = default_k_grid();
    const auto a = spectrum_analytic(grid, config_.params.alpha);
    const auto m = spectrum_transfer_matrix(grid, potential());
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) worst = std::max(worst, std::abs(a.t[i] - m.t[i]));
    return verdict(worst <= 1e-12, fmt::format("max |t_a - t_tm| = {:.3g} on {} points", worst, grid.size()));
  }

  // Pole expansion against the exact amplitude on 0.2 <= ka <= 2.
  Outcome ml_vs_reference() const {
    const auto grid = linear_grid(0.2, 2.0, 361);
    std::vector<Complex> ml(grid.size());
    if (config_.structure == Structure::Double) {
      std::vector<ResonantState> used = states_;
      if (config_.fault == Fault::WrongResidueSign)
        for (auto& s : used) s.parity = s.parity == Parity::Even ? Parity::Odd : Parity::Even;
      for (std::size_t i = 0; i < grid.size(); ++i) ml[i] = t_mittag_leffler(grid[i], used, config_.params.alpha);
    } else {
      std::vector<PiecewiseWave> waves;
      for (const auto& s : states_) waves.push_back(wave_of(s, config_.structure, config_.params));
      if (config_.fault == Fault::WrongResidueSign)
        for (auto& w : waves) w = w.scaled(Complex(0.0, 1.0));
      for (std::size_t i = 0; i < grid.size(); ++i) ml[i] = t_mittag_leffler(grid[i], waves);
    }
    const DeltaPotential v = potential();
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) worst = std::max(worst, std::abs(ml[i] - scattering(grid[i], v).t));
    return verdict(worst <= 5e-3, fmt::format("max |t_ml - t| = {:.3g} with {} states", worst, states_.size()));
  }

  CheckConfig config_;
  SearchWindow window_;
  std::vector<ResonantState> states_;
};

}  // namespace

Fault parse_fault(std::string_view name) {
  if (name == "none") return Fault::None;
  if (name == "wrong-residue-sign") return Fault::WrongResidueSign;
  if (name == "admit-zero-root") return Fault::AdmitZeroRoot;
  throw DomainError(fmt::format("unknown fault '{}'", name));
}

std::vector<CheckResult> run_checks(const CheckConfig& config) { return Suite(config).run(); }

}  // namespace rsdelta::cli
