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

#include <vector>

#include <benchmark/benchmark.h>

#include "rsdelta/rootfinder.hpp"
#include "rsdelta/transmission.hpp"
#include "rsdelta/wavefunction.hpp"

using namespace rsdelta;

namespace {

void BM_SpectrumDouble(benchmark::State& state) {
  const DimensionlessParams p{3.0, 0.0, 0.0};
  const auto w = default_window(Structure::Double, p, static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(find_all_states(Structure::Double, p, w));
}
BENCHMARK(BM_SpectrumDouble)->Arg(10)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_SpectrumTriple(benchmark::State& state) {
  const DimensionlessParams p{3.0, 2.0, 0.6};
  const auto w = default_window(Structure::Triple, p, static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(find_all_states(Structure::Triple, p, w));
}
BENCHMARK(BM_SpectrumTriple)->Arg(10)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_TransferMatrixSpectrum(benchmark::State& state) {
  const auto grid = default_k_grid();
  const auto v = DeltaPotential::triple_well(3.0, 6.0, 1.0, 0.6);
  for (auto _ : state) benchmark::DoNotOptimize(spectrum_transfer_matrix(grid, v, 1));
}
BENCHMARK(BM_TransferMatrixSpectrum)->Unit(benchmark::kMicrosecond);

void BM_MittagLefflerSpectrum(benchmark::State& state) {
  const DimensionlessParams p{3.0, 0.0, 0.0};
  const auto states = find_all_states(Structure::Double, p, default_window(Structure::Double, p, 30.0));
  const auto grid = default_k_grid();
  for (auto _ : state) benchmark::DoNotOptimize(spectrum_mittag_leffler(grid, states, 3.0, 1));
}
BENCHMARK(BM_MittagLefflerSpectrum)->Unit(benchmark::kMicrosecond);

void BM_Orthonormality(benchmark::State& state) {
  const DimensionlessParams p{3.0, 0.0, 0.0};
  const auto states = find_all_states(Structure::Double, p, default_window(Structure::Double, p, 30.0));
  std::vector<PiecewiseWave> waves;
  for (std::size_t i = 0; i < 20 && i < states.size(); ++i) waves.push_back(wave_of(states[i], Structure::Double, p));
  const int panels = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(orthonormality_matrix(waves, -3.0, 3.0, panels));
}
BENCHMARK(BM_Orthonormality)->Arg(0)->Arg(40)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
