// Copyright 2026 The sqkd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference kernels vs the OpenMP versions on n-qubit registers.

#include <benchmark/benchmark.h>

#include <cstddef>
#include <vector>

#include "sqkd/engine/kernels.hpp"
#include "sqkd/engine/random.hpp"
#include "sqkd/engine/rng.hpp"

namespace {

using namespace sqkd;

struct Fixture {
  std::vector<std::size_t> dims;
  Amplitudes amps;
  Matrix u;
};

Fixture make(std::size_t qubits) {
  Rng rng(7);
  Fixture f;
  f.dims.assign(qubits, 2);
  std::vector<Label> labels;
  for (std::size_t i = 0; i < qubits; ++i) labels.push_back(reg(static_cast<std::uint32_t>(i)));
  f.amps = random_state(SubsystemLayout(f.dims, labels), rng).amps();
  f.u = random_unitary(4, rng).matrix();
  return f;
}

template <bool Parallel>
void BM_apply(benchmark::State& state) {
  auto f = make(static_cast<std::size_t>(state.range(0)));
  const std::size_t targets[] = {1, f.dims.size() - 1};
  for (auto _ : state) {
    if constexpr (Parallel) {
      kernels::apply_matrix(f.amps, f.dims, targets, f.u);
    } else {
      kernels::serial::apply_matrix(f.amps, f.dims, targets, f.u);
    }
    benchmark::DoNotOptimize(f.amps.data());
  }
}

template <bool Parallel>
void BM_reduce(benchmark::State& state) {
  const auto f = make(static_cast<std::size_t>(state.range(0)));
  const std::size_t keep[] = {0, 2, 3};
  for (auto _ : state) {
    Matrix m = Parallel ? kernels::reduce(f.amps, f.dims, keep) : kernels::serial::reduce(f.amps, f.dims, keep);
    benchmark::DoNotOptimize(m.data());
  }
}

}  // namespace

BENCHMARK(BM_apply<false>)->DenseRange(12, 20, 4);
BENCHMARK(BM_apply<true>)->DenseRange(12, 20, 4);
BENCHMARK(BM_reduce<false>)->DenseRange(12, 20, 4);
BENCHMARK(BM_reduce<true>)->DenseRange(12, 20, 4);

BENCHMARK_MAIN();
