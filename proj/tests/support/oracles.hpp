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


// Independent reference computations for the tests. Nothing here calls the solver:
// roots come from real bisection, extrema from golden-section search, residues from
// contour integrals and overlaps from adaptive quadrature.

#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace oracle {

using Complex = std::complex<double>;

inline double bisect(const std::function<double(double)>& f, double lo, double hi, double tol = 1e-15) {
  double flo = f(lo);
  for (int i = 0; i < 400 && hi - lo > tol * std::max(1.0, std::abs(lo)); ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

struct Extremum {
  double x;
  double value;
};

inline Extremum golden_min(const std::function<double(double)>& f, double lo, double hi, double tol = 1e-12) {
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - r * (hi - lo);
  double d = lo + r * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  while (hi - lo > tol) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - r * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + r * (hi - lo);
      fd = f(d);
    }
  }
  const double x = 0.5 * (lo + hi);
  return {x, f(x)};
}

inline Extremum golden_max(const std::function<double(double)>& f, double lo, double hi, double tol = 1e-12) {
  const auto m = golden_min([&](double x) { return -f(x); }, lo, hi, tol);
  return {m.x, -m.value};
}

/// (1 / 2 pi i) * contour integral of f over a circle; trapezoid rule, spectrally accurate.
inline Complex contour_residue(const std::function<Complex(Complex)>& f, Complex center, double radius, int n = 256) {
  Complex sum{};
  for (int j = 0; j < n; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / n;
    const Complex dz = radius * std::exp(Complex(0.0, theta));
    sum += f(center + dz) * dz;
  }
  return sum / static_cast<double>(n);
}

/// Adaptive Gauss-Kronrod integral of a complex function over [a, b].
inline Complex integrate(const std::function<Complex(double)>& f, double a, double b) {
  using boost::math::quadrature::gauss_kronrod;
  const double re = gauss_kronrod<double, 61>::integrate([&](double x) { return f(x).real(); }, a, b, 15, 1e-14);
  const double im = gauss_kronrod<double, 61>::integrate([&](double x) { return f(x).imag(); }, a, b, 15, 1e-14);
  return {re, im};
}

/// Integral over [a, b] split at the given interior points.
inline Complex integrate_pieces(const std::function<Complex(double)>& f, double a, double b,
                                std::vector<double> cuts) {
  cuts.insert(cuts.begin(), a);
  cuts.push_back(b);
  Complex total{};
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    if (cuts[i + 1] > cuts[i]) total += integrate(f, cuts[i], cuts[i + 1]);
  return total;
}

/// Bound-state q of the double structure from q = 1 +- e^{-q alpha} by bisection.
inline double double_bound_q(double alpha, bool even) {
  if (even) return bisect([&](double q) { return q - 1.0 - std::exp(-q * alpha); }, 1.0, 2.0);
  return bisect([&](double q) { return q - 1.0 + std::exp(-q * alpha); }, 1e-9, 1.0);
}

/// Even bound states of the symmetric triple from q = 1 + ((q + eps)/(q - eps)) e^{-q alpha}.
inline double triple_even_q(double alpha, double epsilon, double lo, double hi) {
  return bisect([&](double q) { return (q - 1.0) * (q - epsilon) - (q + epsilon) * std::exp(-q * alpha); }, lo, hi);
}

/// Exact transmission of two equal deltas at +-1 by direct matching at each delta.
inline Complex double_delta_t(double k, double alpha) {
  // psi = e^{ikx} + r e^{-ikx} (x < -1); c1 e^{ikx} + c2 e^{-ikx} (|x| < 1); t e^{ikx} (x > 1).
  const Complex i(0.0, 1.0);
  const Complex em = std::exp(-i * k);
  const Complex ep = std::exp(i * k);
  // Rows: continuity and derivative jump at -1, then at +1.
  Complex m[4][5] = {
      {ep, -em, -ep, 0.0, -em},
      {i * k * ep, (i * k + alpha) * em, (-i * k + alpha) * ep, 0.0, i * k * em},
      {0.0, ep, em, -ep, 0.0},
      {0.0, -i * k * ep, i * k * em, (i * k + alpha) * ep, 0.0},
  };
  // Gaussian elimination with partial pivoting.
  for (int c = 0; c < 4; ++c) {
    int p = c;
    for (int r = c + 1; r < 4; ++r)
      if (std::abs(m[r][c]) > std::abs(m[p][c])) p = r;
    for (int j = 0; j < 5; ++j) std::swap(m[c][j], m[p][j]);
    for (int r = 0; r < 4; ++r) {
      if (r == c) continue;
      const Complex f = m[r][c] / m[c][c];
      for (int j = c; j < 5; ++j) m[r][j] -= f * m[c][j];
    }
  }
  return m[3][4] / m[3][3];
}

}  // namespace oracle
