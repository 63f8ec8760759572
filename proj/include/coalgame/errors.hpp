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

#ifndef COALGAME_ERRORS_HPP
#define COALGAME_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace coalgame {

/// Failure conditions raised by the engine. Input-shaped failures
/// (ParseError, InvariantViolation) are distinguished from domain
/// precondition failures so front ends can map them to exit codes.
enum class Errc {
  DuplicateCoalition,
  NonzeroEmptySet,
  PlayerCountOutOfRange,
  EmptyCarrier,
  MixedPlayerCounts,
  EmptyList,
  NotAdditive,
  NotInClass,
  DimensionMismatch,
  Unbounded,
  SizeLimit,
  NotPointed,
  OutsideSupport,
  NotABasis,
  MissingTableEntry,
  OutsideCone,
  FanMismatch,
  NotZeroMonotone,
  EmptyK,
  UnboundedK,
  NotWeaklySuperadditive,
  GrandCoalitionMismatch,
  InvalidWeights,
  ParseError,
  InvariantViolation,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const { return code_; }

  /// True for errors caused by malformed input rather than by a
  /// violated operation precondition.
  bool is_input_error() const {
    return code_ == Errc::ParseError || code_ == Errc::InvariantViolation;
  }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace coalgame

#endif  // COALGAME_ERRORS_HPP
