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

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sqkd/engine/state.hpp"

// Raw dense kernels over row-major amplitude buffers. `dims` lists the
// subsystem dimensions (first = most significant); position lists index into
// `dims`. The top-level functions are the OpenMP versions used by the library;
// `serial::` holds straightforward reference versions kept for testing and
// benchmarking. Neither validates its arguments: the ops layer does.
namespace sqkd::kernels {

// Offsets, in the full index space, of every joint basis state of the
// subsystems at `positions` (enumerated row-major in the given order).
std::vector<std::size_t> subset_offsets(std::span<const std::size_t> dims,
                                        std::span<const std::size_t> positions);

std::vector<std::size_t> complement(std::size_t n, std::span<const std::size_t> positions);

// amps <- (u on targets) amps. u is indexed row-major over `targets`.
void apply_matrix(std::span<cplx> amps, std::span<const std::size_t> dims,
                  std::span<const std::size_t> targets, const Matrix& u);

// Reduced matrix on `keep`, summing over every other subsystem except the
// `fixed` ones, which are pinned to `fixed_values`. Unnormalized: with no
// fixed subsystems and a unit-norm input the trace is 1.
Matrix reduce(std::span<const cplx> amps, std::span<const std::size_t> dims,
              std::span<const std::size_t> keep, std::span<const std::size_t> fixed = {},
              std::span<const std::size_t> fixed_values = {});

// Diagonal of reduce(amps, dims, keep).
std::vector<double> marginal_probabilities(std::span<const cplx> amps,
                                           std::span<const std::size_t> dims,
                                           std::span<const std::size_t> keep);

namespace serial {

void apply_matrix(std::span<cplx> amps, std::span<const std::size_t> dims,
                  std::span<const std::size_t> targets, const Matrix& u);

Matrix reduce(std::span<const cplx> amps, std::span<const std::size_t> dims,
              std::span<const std::size_t> keep, std::span<const std::size_t> fixed = {},
              std::span<const std::size_t> fixed_values = {});

std::vector<double> marginal_probabilities(std::span<const cplx> amps,
                                           std::span<const std::size_t> dims,
                                           std::span<const std::size_t> keep);

}  // namespace serial
}  // namespace sqkd::kernels
