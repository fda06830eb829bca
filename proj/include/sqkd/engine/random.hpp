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

#include "sqkd/engine/rng.hpp"
#include "sqkd/engine/state.hpp"

namespace sqkd {

// Haar-random pure state over `layout`.
StateVector random_state(const SubsystemLayout& layout, Rng& rng);

// Haar-random unitary (QR of a complex Ginibre matrix with the phase fix).
Unitary random_unitary(std::size_t dim, Rng& rng);

}  // namespace sqkd
