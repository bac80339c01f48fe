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

#include "rsdelta/rootfinder.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rsdelta/errors.hpp"
#include "rsdelta/parallel.hpp"
#include "rsdelta/wavefunction.hpp"

namespace rsdelta {

namespace {

constexpr double kZeroRoot = 1e-9;
constexpr double kAxisSnap = 1e-10;

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Residual test at a converged iterate, relative to the size of the residual's terms.
// The published residual is undefined for alpha = 0 or beta = 0 in some families; the
// solver form is used there instead.
bool residual_small(const SecularEquation& eq, Complex z, double tol) {
  try {
    return std::abs(eq.residual(z)) <= tol * std::max(1.0, eq.residual_scale(z));
  } catch (const PoleError&) {
    return false;
  } catch (const DomainError&) {
    const auto [g, dg] = eq.solver_form(z);
    return std::abs(g) <= tol * std::max(1.0, std::abs(dg) * std::max(1.0, std::abs(z)));
  }
}

double upper_bound_bound_states(const DimensionlessParams& p) {
  // kappa <= (sum of well strengths)/2, i.e. Im ka <= alpha(2 + eps)/2 for the triple.
  const double wells = std::max(p.alpha, 0.0) * 2.0 + std::max(p.epsilon * p.alpha, 0.0);
  return std::max(1.0, 0.5 * wells) + 0.5;
}

}  // namespace

void SearchWindow::validate() const {
  if (!(re_max > 0.0)) throw DomainError("search window: re_max must be positive");
  if (!(im_min < 0.0) || !std::isfinite(im_min)) throw DomainError("search window: im_min must be negative");
  if (seed_density < 4) throw DomainError("search window: seed_density must be at least 4");
}

SearchWindow default_window(Structure structure, const DimensionlessParams& p, double re_max,
                            int seed_density) {
  double gap = 2.0;
  double g_min = std::abs(p.alpha);
  if (structure == Structure::Triple) {
    gap = std::min(1.0 + p.b_over_a, 1.0 - p.b_over_a);
    if (p.epsilon != 0.0) g_min = std::min(g_min, std::abs(p.epsilon * p.alpha));
  }
  g_min = std::max(g_min, 1e-3);
  SearchWindow w;
  w.re_max = re_max;
  w.seed_density = seed_density;
  w.im_min = -std::max(1.5, 0.5 + std::log1p(2.0 * re_max / g_min) / gap);
  return w;
}

std::optional<Complex> newton_solve(const SecularEquation& eq, Complex seed, const NewtonOptions& options) {
  Complex z = seed;
  for (int it = 0; it < options.max_iter; ++it) {
    const auto [g, dg] = eq.solver_form(z);
    if (!finite(g) || !finite(dg)) return std::nullopt;
    if (g == 0.0) break;
    if (dg == 0.0) return std::nullopt;
    const Complex step = g / dg;
    z -= step;
    if (!finite(z) || std::abs(z - seed) > options.max_travel) return std::nullopt;
    if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(z))) break;
  }
  if (!residual_small(eq, z, options.tol)) return std::nullopt;
  return z;
}

std::optional<Complex> newton_solve(const SecularEquation& eq, Complex seed, double tol, int max_iter) {
  NewtonOptions o;
  o.tol = tol;
  o.max_iter = max_iter;
  return newton_solve(eq, seed, o);
}

std::vector<Complex> seed_grid(const SearchWindow& window, const SecularEquation& eq) {
  window.validate();
  const double h = 1.0 / window.seed_density;
  std::vector<Complex> seeds;

  // Bound and anti-bound states live on the imaginary axis.
  const double axis_step = std::min(0.1, h);
  const double im_max = upper_bound_bound_states(eq.params());
  for (int i = 0;; ++i) {
    const double y = window.im_min + i * axis_step;
    if (y > im_max) break;
    if (std::abs(y) > 0.5 * axis_step) seeds.emplace_back(0.0, y);
  }

  // Fabry-Perot ladder: Re ka ~ n pi/2 with |Im ka| growing logarithmically.
  const double g = std::max(std::abs(eq.params().alpha), 1e-3);
  for (int n = 1; n * std::numbers::pi / 2.0 <= window.re_max; ++n) {
    const double re = n * std::numbers::pi / 2.0;
    const double im = std::max(window.im_min, -0.5 * std::log1p(2.0 * re / g));
    seeds.emplace_back(re, im);
    seeds.emplace_back(-re, im);
  }

  // Fill grid over the lower half of the window, offset from the axis.
  const int n_re = static_cast<int>(std::ceil(2.0 * window.re_max / h));
  const int n_im = static_cast<int>(std::ceil(-window.im_min / h));
  for (int i = 0; i < n_re; ++i) {
    const double re = -window.re_max + (i + 0.5) * h;
    for (int j = 0; j < n_im; ++j) seeds.emplace_back(re, window.im_min + (j + 0.5) * h);
  }
  return seeds;
}

std::vector<Complex> find_roots(const SecularEquation& eq, const SearchWindow& window,
                                const SolveOptions& options) {
  const std::vector<Complex> seeds = seed_grid(window, eq);
  NewtonOptions newton;
  newton.tol = options.residual_tol;

  std::vector<std::optional<Complex>> solved(seeds.size());
  parallel_for(seeds.size(), [&](std::size_t i) { solved[i] = newton_solve(eq, seeds[i], newton); },
               options.threads);

  const auto in_window = [&](Complex z) {
    return std::abs(z.real()) <= window.re_max && z.imag() >= window.im_min;
  };
  std::vector<Complex> roots;
  const auto known = [&](Complex z) {
    return std::any_of(roots.begin(), roots.end(),
                       [&](Complex r) { return std::abs(r - z) <= options.dedup_tol; });
  };

  for (const auto& s : solved) {
    if (!s) continue;
    Complex z = *s;
    if (std::abs(z) <= kZeroRoot || !in_window(z)) continue;
    if (z.real() != 0.0 && std::abs(z.real()) <= kAxisSnap) {
      if (const auto axis = newton_solve(eq, Complex(0.0, z.imag()), newton);
          axis && std::abs(*axis - z) <= options.dedup_tol)
        z = Complex(0.0, axis->imag());
    }
    if (!known(z)) roots.push_back(z);
  }

  // k and -k* are both roots of every secular function with real parameters.
  const std::size_t found = roots.size();
  for (std::size_t i = 0; i < found; ++i) {
    const Complex z = roots[i];
    if (std::abs(z.real()) <= options.classify_tol) continue;
    const Complex mirror = -std::conj(z);
    if (known(mirror)) continue;
    const auto partner = newton_solve(eq, mirror, newton);
    if (!partner || std::abs(*partner - mirror) > options.dedup_tol)
      throw ConsistencyError("mirror partner of a resonant state could not be recovered");
    roots.push_back(*partner);
  }

  std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return roots;
}

std::vector<SecularEquation> families_for(Structure structure, const DimensionlessParams& p) {
  if (structure == Structure::Double)
    return {SecularEquation(Family::DoubleEven, p), SecularEquation(Family::DoubleOdd, p)};
  if (p.b_over_a == 0.0)
    return {SecularEquation(Family::TripleSymEven, p), SecularEquation(Family::DoubleOdd, p)};
  return {SecularEquation(Family::TripleGeneral, p)};
}

std::vector<ResonantState> find_all_states(Structure structure, const DimensionlessParams& p,
                                           const SearchWindow& window, const SolveOptions& options) {
  if (p.alpha == 0.0) throw DomainError("find_all_states: alpha must be nonzero");
  std::vector<ResonantState> states;
  for (const SecularEquation& eq : families_for(structure, p)) {
    for (Complex k : find_roots(eq, window, options))
      states.push_back(make_state(k, eq.parity(), structure, p, options.classify_tol));
  }
  std::sort(states.begin(), states.end(), [](const ResonantState& a, const ResonantState& b) {
    return a.k.real() != b.k.real() ? a.k.real() < b.k.real() : a.k.imag() < b.k.imag();
  });
  return states;
}

std::vector<ResonantState> find_all_states(const DeltaPotential& potential, const SearchWindow& window,
                                           const SolveOptions& options) {
  return find_all_states(potential.structure(), potential.params(), window, options);
}

}  // namespace rsdelta
