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

#include "rsdelta/wavefunction.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include <boost/math/quadrature/gauss.hpp>

#include "rsdelta/detail/exprel.hpp"
#include "rsdelta/errors.hpp"
#include "rsdelta/parallel.hpp"
#include "rsdelta/secular.hpp"

namespace rsdelta {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kRootCheckTol = 1e-10;

double sign_of(Parity parity) {
  if (parity == Parity::Mixed) throw DomainError("double structure states are even or odd");
  return parity == Parity::Even ? 1.0 : -1.0;
}

// int_lo^hi e^{i kappa x} dx, stable as kappa -> 0.
Complex plane_wave_integral(Complex kappa, double lo, double hi) {
  const double len = hi - lo;
  return std::exp(kI * kappa * lo) * len * detail::exprel(kI * kappa * len);
}

Complex piece_product_exact(const WaveRegion& r1, Complex k1, const WaveRegion& r2, Complex k2,
                            double lo, double hi) {
  return r1.out * r2.out * plane_wave_integral(k1 + k2, lo, hi) +
         r1.out * r2.in * plane_wave_integral(k1 - k2, lo, hi) +
         r1.in * r2.out * plane_wave_integral(k2 - k1, lo, hi) +
         r1.in * r2.in * plane_wave_integral(-k1 - k2, lo, hi);
}

Complex piece_product_gauss(const PiecewiseWave& n, const PiecewiseWave& m, double lo, double hi,
                            int panels) {
  using Rule = boost::math::quadrature::gauss<double, 20>;
  const auto& nodes = Rule::abscissa();
  const auto& weights = Rule::weights();
  Complex sum = 0.0;
  const double h = (hi - lo) / panels;
  for (int p = 0; p < panels; ++p) {
    const double mid = lo + (p + 0.5) * h;
    const double half = 0.5 * h;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const double dx = half * nodes[i];
      Complex f = n(mid + dx) * m(mid + dx);
      if (nodes[i] != 0.0) f += n(mid - dx) * m(mid - dx);
      sum += weights[i] * half * f;
    }
  }
  return sum;
}

// Walks the amplitudes from the right outer region (out = 1, in = 0) across each delta.
PiecewiseWave propagate_from_right(Complex k, std::span<const double> x, std::span<const double> g) {
  const std::size_t n = x.size();
  std::vector<WaveRegion> regions(n + 1);
  regions[n] = {x[n - 1], kInf, 1.0, 0.0};
  for (std::size_t j = n; j-- > 0;) {
    const Complex c = kI * g[j] / (2.0 * k);
    const Complex e2 = std::exp(2.0 * kI * k * x[j]);
    const WaveRegion& right = regions[j + 1];
    const double lo = j == 0 ? -kInf : x[j - 1];
    regions[j] = {lo, x[j], (1.0 - c) * right.out - c / e2 * right.in,
                  c * e2 * right.out + (1.0 + c) * right.in};
  }
  // Siegert condition on the left: only the e^{-ikx} wave survives.
  regions[0].out = 0.0;
  return PiecewiseWave(k, std::move(regions));
}

// |F| / max(1, scale) for the family that owns k.
double scaled_residual(const SecularEquation& eq, Complex k) {
  return std::abs(eq.residual(k)) / std::max(1.0, eq.residual_scale(k));
}

void check_triple_root(Complex k, double alpha, double epsilon, double b_over_a) {
  const DimensionlessParams p{alpha, epsilon, b_over_a};
  double residual = 0.0;
  if (epsilon == 0.0) {
    residual = std::min(scaled_residual(SecularEquation(Family::DoubleEven, p), k),
                        scaled_residual(SecularEquation(Family::DoubleOdd, p), k));
  } else if (b_over_a == 0.0) {
    double even = kInf;
    try {
      even = scaled_residual(SecularEquation(Family::TripleSymEven, p), k);
    } catch (const PoleError&) {
    }
    residual = std::min(even, scaled_residual(SecularEquation(Family::DoubleOdd, p), k));
  } else {
    residual = scaled_residual(SecularEquation(Family::TripleGeneral, p), k);
  }
  if (!(residual <= kRootCheckTol))
    throw ContractError("build_wave_triple: k is not a root of the triple secular equation");
}

Complex principal_normalization(const PiecewiseWave& wave) {
  const auto norm = siegert_product(wave, wave, -1.0, 1.0);
  if (!norm || std::abs(*norm) == 0.0 || !std::isfinite(std::abs(*norm)))
    throw DegenerateNormalization("Siegert self-product vanishes");
  return 1.0 / std::sqrt(*norm);
}

}  // namespace

PiecewiseWave::PiecewiseWave(Complex k, std::vector<WaveRegion> regions)
    : k_(k), regions_(std::move(regions)) {
  if (regions_.size() < 2) throw DomainError("a piecewise wave needs at least two regions");
  for (std::size_t i = 1; i < regions_.size(); ++i)
    if (regions_[i].x_lo != regions_[i - 1].x_hi)
      throw DomainError("piecewise wave regions must be contiguous");
}

std::vector<double> PiecewiseWave::knots() const {
  std::vector<double> out;
  out.reserve(regions_.size() - 1);
  for (std::size_t i = 1; i < regions_.size(); ++i) out.push_back(regions_[i].x_lo);
  return out;
}

const WaveRegion& PiecewiseWave::region_right_of(double x) const {
  for (std::size_t i = 0; i + 1 < regions_.size(); ++i)
    if (x < regions_[i].x_hi) return regions_[i];
  return regions_.back();
}

const WaveRegion& PiecewiseWave::region_left_of(double x) const {
  for (std::size_t i = 0; i + 1 < regions_.size(); ++i)
    if (x <= regions_[i].x_hi) return regions_[i];
  return regions_.back();
}

Complex PiecewiseWave::operator()(double x) const {
  const WaveRegion& r = region_right_of(x);
  const Complex e = std::exp(kI * k_ * x);
  return r.out * e + r.in / e;
}

Complex PiecewiseWave::derivative(double x) const {
  const WaveRegion& r = region_right_of(x);
  const Complex e = std::exp(kI * k_ * x);
  return kI * k_ * (r.out * e - r.in / e);
}

Complex PiecewiseWave::derivative_left(double x) const {
  const WaveRegion& r = region_left_of(x);
  const Complex e = std::exp(kI * k_ * x);
  return kI * k_ * (r.out * e - r.in / e);
}

PiecewiseWave PiecewiseWave::scaled(Complex factor) const {
  std::vector<WaveRegion> out = regions_;
  for (auto& r : out) {
    r.out *= factor;
    r.in *= factor;
  }
  return PiecewiseWave(k_, std::move(out));
}

DoubleNormalization normalize_double(Complex k, Parity parity, double alpha) {
  const double sign = sign_of(parity);
  if (std::abs(k) == 0.0) throw DomainError("normalize_double: k = 0");
  const Complex pole = alpha + 2.0 * kI * k;
  if (std::abs(pole) == 0.0) throw DegenerateNormalization("gamma + 2ik = 0");
  const Complex arg = sign * (1.0 - 1.0 / pole);
  if (std::abs(arg) == 0.0) throw DegenerateNormalization("a - (gamma + 2ik)^{-1} = 0");
  const Complex c = 1.0 / (2.0 * std::sqrt(arg));
  const Complex a = c / (1.0 + alpha / (2.0 * kI * k));
  return {a, c};
}

DoubleNormalization normalize_double(const ResonantState& state, double alpha) {
  return normalize_double(state.k, state.parity, alpha);
}

PiecewiseWave build_wave_double(Complex k, Parity parity, double alpha) {
  const double sign = sign_of(parity);
  const SecularEquation eq(parity == Parity::Even ? Family::DoubleEven : Family::DoubleOdd, {alpha, 0.0, 0.0});
  if (!(scaled_residual(eq, k) <= kRootCheckTol))
    throw ContractError("build_wave_double: k is not a root of the secular equation");
  const auto [a, c] = normalize_double(k, parity, alpha);
  return PiecewiseWave(k, {{-kInf, -1.0, 0.0, sign * a}, {-1.0, 1.0, c, sign * c}, {1.0, kInf, a, 0.0}});
}

PiecewiseWave build_wave_triple(Complex k, double alpha, double epsilon, double b_over_a) {
  if (!(b_over_a > -1.0 && b_over_a < 1.0)) throw DomainError("b/a must lie in (-1, 1)");
  if (std::abs(k) == 0.0) throw DomainError("build_wave_triple: k = 0");
  check_triple_root(k, alpha, epsilon, b_over_a);
  const std::array<double, 3> x{-1.0, b_over_a, 1.0};
  const std::array<double, 3> g{alpha, epsilon * alpha, alpha};
  const PiecewiseWave raw = propagate_from_right(k, x, g);
  return raw.scaled(principal_normalization(raw));
}

PiecewiseWave build_wave(Complex k, Parity parity, Structure structure, const DimensionlessParams& p) {
  if (structure == Structure::Double) return build_wave_double(k, parity, p.alpha);
  return build_wave_triple(k, p.alpha, p.epsilon, p.b_over_a);
}

ResonantState make_state(Complex k, Parity parity, Structure structure, const DimensionlessParams& p,
                         double classify_tol) {
  ResonantState s;
  s.k = k;
  s.kind = classify(k, classify_tol);
  s.parity = parity;
  const PiecewiseWave wave = build_wave(k, parity, structure, p);
  const auto regions = wave.regions();
  s.norm_a = regions.back().out;
  s.norm_c = regions[regions.size() - 2].out;
  if (structure == Structure::Triple) s.norm_d = regions[1].out;
  return s;
}

PiecewiseWave wave_of(const ResonantState& state, Structure structure, const DimensionlessParams& p) {
  if (structure == Structure::Double) {
    const double sign = sign_of(state.parity);
    const Complex a = state.norm_a;
    const Complex c = state.norm_c;
    return PiecewiseWave(state.k,
                         {{-kInf, -1.0, 0.0, sign * a}, {-1.0, 1.0, c, sign * c}, {1.0, kInf, a, 0.0}});
  }
  const std::array<double, 3> x{-1.0, p.b_over_a, 1.0};
  const std::array<double, 3> g{p.alpha, p.epsilon * p.alpha, p.alpha};
  return propagate_from_right(state.k, x, g).scaled(state.norm_a);
}

std::optional<Complex> siegert_product(const PiecewiseWave& n, const PiecewiseWave& m, double x_l,
                                       double x_r, int gl_panels) {
  const Complex k_sum = n.k() + m.k();
  if (std::abs(k_sum) <= 1e-12 * std::max(1.0, std::abs(n.k()) + std::abs(m.k())))
    return std::nullopt;
  const auto rn = n.regions();
  const auto rm = m.regions();
  if (rn.size() != rm.size()) throw DomainError("siegert_product: waves of different structures");
  Complex integral = 0.0;
  for (std::size_t i = 0; i < rn.size(); ++i) {
    const double lo = std::max(rn[i].x_lo, x_l);
    const double hi = std::min(rn[i].x_hi, x_r);
    if (!(hi > lo)) continue;
    integral += gl_panels > 0 ? piece_product_gauss(n, m, lo, hi, gl_panels)
                              : piece_product_exact(rn[i], n.k(), rm[i], m.k(), lo, hi);
  }
  const Complex boundary = (n(x_l) * m(x_l) + n(x_r) * m(x_r)) / (kI * k_sum);
  return integral - boundary;
}

double OrthonormalityMatrix::max_deviation_from_identity() const {
  double worst = 0.0;
  for (std::size_t n = 0; n < size_; ++n)
    for (std::size_t m = 0; m < size_; ++m)
      if (const auto& e = (*this)(n, m)) worst = std::max(worst, std::abs(*e - (n == m ? 1.0 : 0.0)));
  return worst;
}

std::size_t OrthonormalityMatrix::indeterminate_count() const {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(), [](const auto& e) { return !e.has_value(); }));
}

OrthonormalityMatrix orthonormality_matrix(std::span<const PiecewiseWave> waves, double x_l, double x_r,
                                           int gl_panels) {
  if (!(x_l <= -1.0 && x_r >= 1.0))
    throw DomainError("orthonormality_matrix: need x_L <= -a and x_R >= a");
  OrthonormalityMatrix out(waves.size());
  parallel_for(waves.size(), [&](std::size_t n) {
    for (std::size_t m = 0; m < waves.size(); ++m)
      out(n, m) = siegert_product(waves[n], waves[m], x_l, x_r, gl_panels);
  });
  return out;
}

}  // namespace rsdelta
