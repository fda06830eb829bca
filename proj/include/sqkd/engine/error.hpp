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

#include <stdexcept>
#include <string>
#include <string_view>

namespace sqkd {

enum class Errc {
  DuplicateLabel,
  DimensionMismatch,
  UnknownLabel,
  NonQubitTarget,
  IndexOutOfRange,
  EmptyKeepSet,
  InvalidState,
  ExactCapExceeded,
  AttackLayoutMismatch,
  IncompleteTranscript,
  DuplicateRound,
  ParamOutOfRange,
  UnknownAttack,
  UnknownFamily,
  EmptyGrid,
  InvalidConfig,
  PreconditionViolated,
  ParseError,
};

std::string_view to_string(Errc code);

// Single exception type for the whole library; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace sqkd
