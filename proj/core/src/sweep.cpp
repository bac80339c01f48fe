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

#include "rsdelta/sweep.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "rsdelta/errors.hpp"
#include "rsdelta/rootfinder.hpp"

namespace rsdelta {

namespace {

bool finite(double x) { return std::isfinite(x); }

// Class with a zero-width axis test, used to bracket crossings.
std::optional<StateClass> side_of(Complex k, double tol) {
  if (std::abs(k.real()) > tol) return StateClass::NormalRS;
  if (k.imag() > 0.0) return StateClass::Bound;
  if (k.imag() < 0.0) return StateClass::AntiBound;
  return std::nullopt;
}

class Tracker {
 public:
  Tracker(const SecularEquation& eq, SweepParameter param, const SweepOptions& options)
      : eq_(eq), param_(param), options_(options) {
    newton_.tol = options.residual_tol;
    newton_.max_travel = 2.0 * options.continuity;
  }

  std::optional<Complex> solve(double p, Complex seed) const {
    return newton_solve(eq_.with_parameter(param_, p), seed, newton_);
  }

  bool on_axis(Complex k) const { return std::abs(k.real()) <= options_.classify_tol; }

  // Sign of dG/dy at k = iy; the two axis roots on either side of a fold have opposite signs.
  bool axis_slope_positive(double p, Complex k) const {
    const auto [g, dg] = eq_.with_parameter(param_, p).solver_form(Complex(0.0, k.imag()));
    return -dg.imag() > 0.0;
  }

  // Locates a class change between (pa, ka) and (pb, kb) by bisection on the parameter.
  SweepEvent bisect(double pa, Complex ka, double pb, Complex kb) const {
    const auto ca = side_of(ka, options_.classify_tol);
    const auto cb = side_of(kb, options_.classify_tol);
    for (int i = 0; i < 200; ++i) {
      if (std::abs(pb - pa) <= 1e-15 * std::max(1.0, std::abs(pa))) break;
      const double pm = 0.5 * (pa + pb);
      const auto r = solve(pm, 0.5 * (ka + kb));
      if (!r) break;
      const auto cm = side_of(*r, options_.classify_tol);
      if (!cm) {
        pa = pb = pm;
        ka = kb = *r;
        break;
      }
      if (cm == ca) {
        pa = pm;
        ka = *r;
      } else {
        pb = pm;
        kb = *r;
      }
    }
    SweepEvent e;
    e.kind = SweepEventKind::AxisCrossing;
    e.param = 0.5 * (pa + pb);
    e.k = 0.5 * (ka + kb);
    e.detail = fmt::format("{} -> {}", ca ? to_string(*ca) : "threshold", cb ? to_string(*cb) : "threshold");
    return e;
  }

 private:
  const SecularEquation& eq_;
  SweepParameter param_;
  const SweepOptions& options_;
  NewtonOptions newton_;
};

}  // namespace

std::string_view to_string(SweepEventKind e) {
  switch (e) {
    case SweepEventKind::AxisCrossing: return "crossing";
    case SweepEventKind::Merge: return "merge";
    case SweepEventKind::Truncated: return "truncated";
  }
  return "?";
}

std::vector<const SweepEvent*> SweepCurve::events_of(SweepEventKind kind) const {
  std::vector<const SweepEvent*> out;
  for (const auto& e : events)
    if (e.kind == kind) out.push_back(&e);
  return out;
}

std::optional<FoldPoint> locate_fold(const SecularEquation& eq, SweepParameter param, double y0,
                                     double p0) {
  // On the imaginary axis every solver form is real; g(y) = G(iy), g_y = i G'(iy).
  const auto g_of = [&](double y, double p) {
    const auto [g, dg] = eq.with_parameter(param, p).solver_form(Complex(0.0, y));
    return std::pair{g.real(), -dg.imag()};
  };
  double y = y0;
  double p = p0;
  double g_p = 0.0;
  double g_yy = 0.0;
  bool converged = false;
  for (int it = 0; it < 60 && !converged; ++it) {
    const auto [g, gy] = g_of(y, p);
    const double hp = 1e-6 * std::max(1.0, std::abs(p));
    const double hy = 1e-6 * std::max(1.0, std::abs(y));
    const auto [gp_hi, gyp_hi] = g_of(y, p + hp);
    const auto [gp_lo, gyp_lo] = g_of(y, p - hp);
    const double gy_hi = g_of(y + hy, p).second;
    const double gy_lo = g_of(y - hy, p).second;
    g_p = (gp_hi - gp_lo) / (2.0 * hp);
    const double gy_p = (gyp_hi - gyp_lo) / (2.0 * hp);
    g_yy = (gy_hi - gy_lo) / (2.0 * hy);
    const double det = gy * gy_p - g_p * g_yy;
    if (det == 0.0 || !finite(det)) return std::nullopt;
    const double dy = (g_p * gy - g * gy_p) / det;
    const double dp = (g * g_yy - gy * gy) / det;
    y += dy;
    p += dp;
    if (!finite(y) || !finite(p) || std::abs(y - y0) > 1.0 || std::abs(p - p0) > 1.0) return std::nullopt;
    converged = std::abs(dy) <= 1e-14 * std::max(1.0, std::abs(y)) &&
                std::abs(dp) <= 1e-14 * std::max(1.0, std::abs(p));
  }
  const auto [g, gy] = g_of(y, p);
  if (std::abs(g) > 1e-10 || std::abs(gy) > 1e-8 || g_p == 0.0 || g_yy == 0.0) return std::nullopt;
  return FoldPoint{p, y, -g_yy / (2.0 * g_p)};
}

SweepCurve sweep_branch(const SecularEquation& eq, SweepParameter param, double from, double to,
                        double step, Complex start_k, const SweepOptions& options, std::string label) {
  if (!(step > 0.0) || !finite(step)) throw DomainError("sweep step must be positive");
  if (!finite(from) || !finite(to)) throw DomainError("sweep range must be finite");

  SweepCurve curve;
  curve.parameter = param;
  curve.label = std::move(label);
  const Tracker tracker(eq, param, options);
  const auto classify_point = [&](Complex k) { return classify_or_threshold(k, options.classify_tol); };

  NewtonOptions start_opts;
  start_opts.tol = options.residual_tol;
  const auto start = newton_solve(eq.with_parameter(param, from), start_k, start_opts);
  if (!start || std::abs(*start - start_k) > 1e-6)
    throw ContractError("sweep start is not a root of the secular equation");
  curve.points.push_back({from, *start, classify_point(*start)});

  const double dir = to >= from ? 1.0 : -1.0;
  double h = step;
  bool threshold_pending = !curve.points.back().kind.has_value();

  const auto truncate = [&](double p, Complex k, std::string why) {
    curve.events.push_back({SweepEventKind::Truncated, p, k, why});
    curve.diagnostic = std::move(why);
  };

  while (dir * (to - curve.points.back().param) > 0.0) {
    if (curve.points.size() >= options.max_points) {
      truncate(curve.points.back().param, curve.points.back().k, "point budget exhausted");
      break;
    }
    const SweepPoint& last = curve.points.back();
    const double p = last.param;
    const Complex k = last.k;
    double p_next = p + dir * h;
    if (dir * (p_next - to) > 0.0) p_next = to;

    Complex seed = k;
    const SweepPoint* prev = curve.points.size() >= 2 ? &curve.points[curve.points.size() - 2] : nullptr;
    if (prev && prev->param != p) {
      const Complex delta = (k - prev->k) * ((p_next - p) / (p - prev->param));
      if (std::abs(delta) <= options.continuity) seed = k + delta;
    }

    auto r = tracker.solve(p_next, seed);
    bool ok = r && std::abs(*r - k) <= options.continuity;
    if (ok && tracker.on_axis(*r) && tracker.on_axis(k) &&
        tracker.axis_slope_positive(p_next, *r) != tracker.axis_slope_positive(p, k))
      ok = false;

    if (!ok) {
      h *= 0.5;
      if (h >= options.min_step) continue;
      if (!tracker.on_axis(k)) {
        truncate(p, k, "continuation lost");
        break;
      }
      const auto fold = locate_fold(eq, param, k.imag(), p);
      if (!fold || dir * (fold->param - p) < -1e-9 || std::abs(fold->param - p) > step ||
          std::abs(fold->y - k.imag()) > options.continuity) {
        truncate(p, k, "continuation lost");
        break;
      }
      const Complex k_star(0.0, fold->y);
      curve.events.push_back({SweepEventKind::Merge, fold->param, k_star, "axis pair -> normal pair"});
      if (dir * (fold->param - p) > 0.0) curve.points.push_back({fold->param, k_star, classify_point(k_star)});

      const double c2 = std::abs(fold->c2);
      const double h0 = std::clamp(c2 * 0.25 * options.continuity * options.continuity, options.min_step, step);
      double p1 = fold->param + dir * h0;
      if (dir * (p1 - to) > 0.0) p1 = to;
      if (p1 == fold->param) break;
      const double sigma = std::sqrt(std::abs(p1 - fold->param) / c2);
      const auto off = tracker.solve(p1, k_star + sigma);
      if (!off || std::abs(off->real()) <= options.classify_tol ||
          std::abs(*off - k_star) > options.continuity) {
        truncate(fold->param, k_star, "continuation lost after merge");
        break;
      }
      const Complex k1 = off->real() < 0.0 ? -std::conj(*off) : *off;
      curve.points.push_back({p1, k1, classify_point(k1)});
      h = h0;
      threshold_pending = false;
      continue;
    }

    const Complex kn = *r;
    const auto cn = classify_point(kn);
    std::optional<StateClass> c_last;
    for (auto it = curve.points.rbegin(); it != curve.points.rend() && !c_last; ++it) c_last = it->kind;

    if (!cn) {
      curve.events.push_back({SweepEventKind::AxisCrossing, p_next, kn, "threshold"});
      threshold_pending = true;
    } else if (c_last && *cn != *c_last) {
      if (threshold_pending) {
        threshold_pending = false;
      } else {
        const bool to_normal = *cn == StateClass::NormalRS;
        const bool from_normal = *c_last == StateClass::NormalRS;
        std::optional<FoldPoint> fold;
        if (to_normal != from_normal) {
          const Complex axis_k = to_normal ? k : kn;
          const double axis_p = to_normal ? p : p_next;
          fold = locate_fold(eq, param, axis_k.imag(), axis_p);
          if (fold && (fold->param < std::min(p, p_next) - 1e-9 || fold->param > std::max(p, p_next) + 1e-9))
            fold.reset();
        }
        if (fold) {
          curve.events.push_back({SweepEventKind::Merge, fold->param, Complex(0.0, fold->y),
                                  from_normal ? "normal pair -> axis pair" : "axis pair -> normal pair"});
        } else {
          curve.events.push_back(tracker.bisect(p, k, p_next, kn));
        }
      }
    }
    curve.points.push_back({p_next, kn, cn});
    if (2.0 * std::abs(kn) > options.s_max) {
      truncate(p_next, kn, fmt::format("|s| exceeded {}", options.s_max));
      break;
    }
    h = std::min(2.0 * h, step);
  }
  return curve;
}

std::vector<SweepCurve> sweep_family(const SecularEquation& eq, SweepParameter param, double from,
                                     double to, double step, double re_max, const SweepOptions& options) {
  const SecularEquation start_eq = eq.with_parameter(param, from);
  const bool triple = eq.family() == Family::TripleSymEven || eq.family() == Family::TripleGeneral;
  const SearchWindow window =
      default_window(triple ? Structure::Triple : Structure::Double, start_eq.params(), re_max);
  SolveOptions solve;
  solve.residual_tol = options.residual_tol;
  solve.classify_tol = options.classify_tol;

  std::vector<Complex> starts;
  for (Complex k : find_roots(start_eq, window, solve))
    if (k.real() >= -options.classify_tol) starts.push_back(k);
  std::sort(starts.begin(), starts.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() > b.imag();
  });

  std::vector<SweepCurve> curves;
  for (std::size_t n = 0; n < starts.size(); ++n)
    curves.push_back(sweep_branch(eq, param, from, to, step, starts[n], options,
                                  fmt::format("{}-{}", to_string(eq.parity()), n)));
  return curves;
}

}  // namespace rsdelta
