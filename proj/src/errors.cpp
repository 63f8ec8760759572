// Copyright 2026 The coalgame authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "coalgame/errors.hpp"

namespace coalgame {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::DuplicateCoalition: return "DuplicateCoalition";
    case Errc::NonzeroEmptySet: return "NonzeroEmptySet";
    case Errc::PlayerCountOutOfRange: return "PlayerCountOutOfRange";
    case Errc::EmptyCarrier: return "EmptyCarrier";
    case Errc::MixedPlayerCounts: return "MixedPlayerCounts";
    case Errc::EmptyList: return "EmptyList";
    case Errc::NotAdditive: return "NotAdditive";
    case Errc::NotInClass: return "NotInClass";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::Unbounded: return "Unbounded";
    case Errc::SizeLimit: return "SizeLimit";
    case Errc::NotPointed: return "NotPointed";
    case Errc::OutsideSupport: return "OutsideSupport";
    case Errc::NotABasis: return "NotABasis";
    case Errc::MissingTableEntry: return "MissingTableEntry";
    case Errc::OutsideCone: return "OutsideCone";
    case Errc::FanMismatch: return "FanMismatch";
    case Errc::NotZeroMonotone: return "NotZeroMonotone";
    case Errc::EmptyK: return "EmptyK";
    case Errc::UnboundedK: return "UnboundedK";
    case Errc::NotWeaklySuperadditive: return "NotWeaklySuperadditive";
    case Errc::GrandCoalitionMismatch: return "GrandCoalitionMismatch";
    case Errc::InvalidWeights: return "InvalidWeights";
    case Errc::ParseError: return "ParseError";
    case Errc::InvariantViolation: return "InvariantViolation";
  }
  return "UnknownError";
}

}  // namespace coalgame
