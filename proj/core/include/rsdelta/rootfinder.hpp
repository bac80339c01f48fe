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
#include <vector>

#include "rsdelta/secular.hpp"
#include "rsdelta/types.hpp"

namespace rsdelta {

/// Rectangle of the complex ka plane searched for resonant states:
/// |Re ka| <= re_max and Im ka >= im_min (bound states above the axis are always included).
struct SearchWindow {
  double re_max = 10.0;
  double im_min = -3.0;
  int seed_density = 4;  // seeds per unit of ka

  void validate() const;
};

/// A window whose depth follows the growth of |Im k| with Re k for this structure.
SearchWindow default_window(Structure structure, const DimensionlessParams& p, double re_max,
                            int seed_density = 4);

struct NewtonOptions {
  double tol = 1e-12;
  int max_iter = 80;
  /// Iterates straying farther than this from the seed are abandoned.
  double max_travel = 2.0;
};

/// Newton iteration on the solver form with its analytic derivative.
/// Returns nullopt on divergence, on leaving the basin, or when the published
/// residual at the limit exceeds tol * max(1, residual_scale).
std::optional<Complex> newton_solve(const SecularEquation& eq, Complex seed,
                                    const NewtonOptions& options = {});
std::optional<Complex> newton_solve(const SecularEquation& eq, Complex seed, double tol, int max_iter);

/// Deterministic seeds: imaginary-axis ladder, Fabry-Perot seeds at Re ka = n pi/2, and
/// a rectangular fill grid over the lower half of the window.
std::vector<Complex> seed_grid(const SearchWindow& window, const SecularEquation& eq);

struct SolveOptions {
  double residual_tol = 1e-12;
  double dedup_tol = 1e-8;
  double classify_tol = kClassifyTol;
  unsigned threads = 0;  // 0 = default_thread_count()
};

/// All nonzero roots of one secular equation inside the window, deduplicated,
/// closed under k -> -k*, sorted by (Re, Im). Throws ConsistencyError if a mirror
/// partner cannot be recovered.
std::vector<Complex> find_roots(const SecularEquation& eq, const SearchWindow& window,
                                const SolveOptions& options = {});

/// The secular equations whose union of roots is the spectrum of a structure.
std::vector<SecularEquation> families_for(Structure structure, const DimensionlessParams& p);

/// Every resonant state of the structure in the window, classified, parity-labelled,
/// normalized and sorted by (Re k, Im k). Wavenumbers are in units of 1/a.
std::vector<ResonantState> find_all_states(Structure structure, const DimensionlessParams& p,
                                           const SearchWindow& window, const SolveOptions& options = {});
std::vector<ResonantState> find_all_states(const DeltaPotential& potential, const SearchWindow& window,
                                           const SolveOptions& options = {});

}  // namespace rsdelta
