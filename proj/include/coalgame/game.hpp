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

#ifndef COALGAME_GAME_HPP
#define COALGAME_GAME_HPP

#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

#include "coalgame/coalition.hpp"
#include "coalgame/rational.hpp"

namespace coalgame {

/// A transferable-utility coalitional game on players {1,...,n}:
/// an exact-rational set function v with v(empty) = 0, stored as a
/// dense table of 2^n values indexed by coalition mask. Immutable
/// after construction; all operations below are pure.
class Game {
 public:
  Game() = default;

  static Game zero(int n);

  /// Builds a game from explicit assignments; unlisted coalitions
  /// default to 0.
  static Game make(int n,
                   const std::vector<std::pair<Coalition, Rat>>& assignments);

  /// The unanimity game u_A: worth 1 on coalitions containing A,
  /// 0 elsewhere. Requires a nonempty carrier A.
  static Game unanimity(int n, Coalition carrier);

  /// Adopts a full value table (size 2^n, table[0] must be 0).
  static Game from_table(int n, std::vector<Rat> table);

  int players() const { return n_; }
  std::size_t table_size() const { return values_.size(); }
  Coalition grand() const { return full_coalition(n_); }

  const Rat& value(Coalition a) const { return values_[a]; }
  const Rat& grand_value() const { return values_[grand()]; }
  const std::vector<Rat>& table() const { return values_; }

  bool operator==(const Game& other) const {
    return n_ == other.n_ && values_ == other.values_;
  }
  bool operator!=(const Game& other) const { return !(*this == other); }

  /// Total order by player count then table entries, so games can key
  /// ordered containers.
  bool operator<(const Game& other) const;

 private:
  Game(int n, std::vector<Rat> values) : n_(n), values_(std::move(values)) {}

  int n_ = 0;
  std::vector<Rat> values_;
};

/// A payoff allocation x in R^n; x(A) sums the coordinates of A's
/// members, with x(empty) = 0.
struct Allocation {
  int n = 0;
  Vec x;

  static Allocation zero(int n) { return Allocation{n, Vec(n, Rat(0))}; }

  Rat of(Coalition a) const;

  bool operator==(const Allocation& other) const {
    return n == other.n && x == other.x;
  }
  bool operator!=(const Allocation& other) const { return !(*this == other); }
};

/// Mobius transform coefficients (Harsanyi dividends) of a game;
/// the coefficient at the empty coalition is always 0.
struct MobiusCoeffs {
  int n = 0;
  Vec coeffs;  // dense, indexed by coalition mask

  bool operator==(const MobiusCoeffs& other) const {
    return n == other.n && coeffs == other.coeffs;
  }
};

/// Pointwise sum of scaled games. The term list must be nonempty and
/// share one player count.
Game linear_combine(const std::vector<std::pair<Rat, Game>>& terms);

Game add(const Game& a, const Game& b);
Game subtract(const Game& a, const Game& b);
Game scale(const Rat& c, const Game& v);

/// Pointwise maximum / minimum of a nonempty list of games.
Game game_sup(const std::vector<Game>& games);
Game game_inf(const std::vector<Game>& games);

/// m(A) = sum_{B subset A} (-1)^{|A\B|} v(B).
MobiusCoeffs mobius(const Game& v);

/// Inverse (zeta) transform: v(A) = sum_{B subset A} m(B).
Game mobius_inverse(const MobiusCoeffs& m);

/// Splits v into (zero-normalized part, additive part): the first has
/// value v(A) - sum_{i in A} v({i}), the second carries the singleton
/// values; their sum is v and the pair is unique.
std::pair<Game, Game> zero_normalize(const Game& v);

/// The additive game m_x with m_x(A) = x(A).
Game embed_additive(const Allocation& x);

/// Inverse of embed_additive; requires an additive game.
Allocation restrict_additive(const Game& m);

bool is_additive_game(const Game& v);

/// Restriction of v to the players of A, relabeled in increasing
/// order. A must be nonempty.
Game subgame(const Game& v, Coalition a);

}  // namespace coalgame

#endif  // COALGAME_GAME_HPP
