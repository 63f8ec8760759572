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

#ifndef COALGAME_CLASSES_HPP
#define COALGAME_CLASSES_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coalgame/game.hpp"
#include "coalgame/polyhedra.hpp"

namespace coalgame {

/// One class-membership verdict; `witness` describes a violation when
/// the flag is false (or the certificate when one is informative).
struct FlagReport {
  bool holds = false;
  std::string witness;
};

/// Membership report for the game classes. The combinatorial flags are
/// always present; the LP-backed flags are computed only up to their
/// player-count bounds (balanced n <= 8, exact and totally balanced
/// n <= 6) and omitted beyond them.
struct ClassReport {
  FlagReport weakly_superadditive;
  FlagReport monotone;
  FlagReport supermodular;
  FlagReport totally_monotone;
  FlagReport zero_normalized;
  FlagReport zero_monotone;
  FlagReport additive;
  std::optional<FlagReport> balanced;
  std::optional<FlagReport> exact;
  std::optional<FlagReport> totally_balanced;
};

ClassReport classify(const Game& v);

bool is_weakly_superadditive(const Game& v);
bool is_monotone(const Game& v);
bool is_supermodular(const Game& v);
bool is_totally_monotone(const Game& v);
bool is_zero_normalized(const Game& v);
bool is_zero_monotone(const Game& v);
bool is_nonnegative(const Game& v);

/// Core nonemptiness with a certificate: a core allocation when
/// balanced, otherwise weights of a balanced collection whose total
/// worth exceeds v(N) (Bondareva-Shapley violation).
struct BalancednessCertificate {
  bool balanced = false;
  Allocation core_point;
  std::vector<std::pair<Coalition, Rat>> collection_weights;
};

/// Requires n <= 8.
BalancednessCertificate is_balanced(const Game& v);

/// Requires n <= 6; unbalanced games report false.
bool is_exact(const Game& v);

/// Requires n <= 6.
bool is_totally_balanced(const Game& v);

/// Minimal Jordan pair (w1, w2) of nonnegative totally monotone games
/// with v = w1 - w2, via the positive and negative parts of the Mobius
/// transform.
std::pair<Game, Game> jordan_decompose_tm(const Game& v);

/// The almost-positive expansion of a zero-normalized totally monotone
/// game: coefficients lambda with v = sum lambda_A u_A, supported on
/// |A| >= 2.
MobiusCoeffs almost_positive_coeffs(const Game& v);

}  // namespace coalgame

#endif  // COALGAME_CLASSES_HPP
