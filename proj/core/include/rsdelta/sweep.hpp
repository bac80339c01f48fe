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
#include <string>
#include <vector>

#include "rsdelta/secular.hpp"
#include "rsdelta/types.hpp"

namespace rsdelta {

struct SweepPoint {
  double param = 0.0;
  Complex k;                        // ka
  std::optional<StateClass> kind;   // empty at a zero-energy threshold
};

enum class SweepEventKind { AxisCrossing, Merge, Truncated };
std::string_view to_string(SweepEventKind e);

struct SweepEvent {
  SweepEventKind kind = SweepEventKind::AxisCrossing;
  double param = 0.0;
  Complex k;
  std::string detail;
};

struct SweepCurve {
  SweepParameter parameter = SweepParameter::Alpha;
  std::string label;
  std::vector<SweepPoint> points;
  std::vector<SweepEvent> events;
  std::string diagnostic;  // non-empty when the curve was truncated

  bool truncated() const { return !diagnostic.empty(); }
  std::vector<const SweepEvent*> events_of(SweepEventKind kind) const;
};

struct SweepOptions {
  double continuity = 0.1;  // max |dk a| between adjacent points
  double min_step = 1e-10;
  double s_max = 50.0;      // curves stop once |s| = 2|ka| exceeds this
  double residual_tol = 1e-12;
  double classify_tol = kClassifyTol;
  std::size_t max_points = 200000;
};

/// Natural-parameter continuation of one root of `eq` from `from` to `to`.
/// The step adapts by halving (and regrows up to `step`); axis crossings are located by
/// bisection on the parameter, and a fold of two axis roots is located exactly and
/// recorded as a Merge, after which the curve continues off the axis with Re k > 0.
/// Throws ContractError when start_k is not a root at `from`.
SweepCurve sweep_branch(const SecularEquation& eq, SweepParameter param, double from, double to,
                        double step, Complex start_k, const SweepOptions& options = {},
                        std::string label = {});

/// Fold point of two imaginary-axis roots near (k = i*y0, param = p0): solves G = dG/dk = 0.
struct FoldPoint {
  double param;
  double y;   // k = i y
  double c2;  // param - param* ~ c2 (y - y*)^2 along the axis
};
std::optional<FoldPoint> locate_fold(const SecularEquation& eq, SweepParameter param, double y0,
                                     double p0);

/// Sweeps every axis state and every normal state with 0 < Re ka <= re_max found at `from`.
/// Labels are "<parity>-<n>" in order of increasing Re k, then decreasing Im k.
std::vector<SweepCurve> sweep_family(const SecularEquation& eq, SweepParameter param, double from,
                                     double to, double step, double re_max,
                                     const SweepOptions& options = {});

}  // namespace rsdelta
