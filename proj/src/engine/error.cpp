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

#include "sqkd/engine/error.hpp"

namespace sqkd {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::DuplicateLabel: return "DuplicateLabel";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::UnknownLabel: return "UnknownLabel";
    case Errc::NonQubitTarget: return "NonQubitTarget";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::EmptyKeepSet: return "EmptyKeepSet";
    case Errc::InvalidState: return "InvalidState";
    case Errc::ExactCapExceeded: return "ExactCapExceeded";
    case Errc::AttackLayoutMismatch: return "AttackLayoutMismatch";
    case Errc::IncompleteTranscript: return "IncompleteTranscript";
    case Errc::DuplicateRound: return "DuplicateRound";
    case Errc::ParamOutOfRange: return "ParamOutOfRange";
    case Errc::UnknownAttack: return "UnknownAttack";
    case Errc::UnknownFamily: return "UnknownFamily";
    case Errc::EmptyGrid: return "EmptyGrid";
    case Errc::InvalidConfig: return "InvalidConfig";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace sqkd
