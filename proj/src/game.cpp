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

#include "coalgame/game.hpp"

#include <set>

#include "coalgame/errors.hpp"

namespace coalgame {

namespace {

void check_player_count(int n) {
  if (n < 1 || n > kMaxPlayers) {
    fail(Errc::PlayerCountOutOfRange,
         "player count " + std::to_string(n) + " outside [1," +
             std::to_string(kMaxPlayers) + "]");
  }
}

void check_same_players(const Game& a, const Game& b) {
  if (a.players() != b.players()) {
    fail(Errc::MixedPlayerCounts,
         "games on " + std::to_string(a.players()) + " and " +
             std::to_string(b.players()) + " players");
  }
}

}  // namespace

Game Game::zero(int n) {
  check_player_count(n);
  return Game::from_table(n, std::vector<Rat>(std::size_t{1} << n, Rat(0)));
}

Game Game::from_table(int n, std::vector<Rat> table) {
  check_player_count(n);
  if (table.size() != (std::size_t{1} << n)) {
    fail(Errc::InvariantViolation, "value table must have 2^n entries");
  }
  if (table[0] != 0) {
    fail(Errc::NonzeroEmptySet, "v({}) must be 0");
  }
  return Game(n, std::move(table));
}

Game Game::make(int n,
                const std::vector<std::pair<Coalition, Rat>>& assignments) {
  check_player_count(n);
  std::vector<Rat> table(std::size_t{1} << n, Rat(0));
  std::set<Coalition> seen;
  for (const auto& [coalition, value] : assignments) {
    if (coalition > full_coalition(n)) {
      fail(Errc::InvariantViolation,
           "coalition " + coalition_label(coalition) + " outside player set");
    }
    if (!seen.insert(coalition).second) {
      fail(Errc::DuplicateCoalition,
           "coalition " + coalition_label(coalition) + " listed twice");
    }
    if (coalition == kEmptyCoalition && value != 0) {
      fail(Errc::NonzeroEmptySet, "assignment to the empty coalition");
    }
    table[coalition] = value;
  }
  return Game(n, std::move(table));
}

Game Game::unanimity(int n, Coalition carrier) {
  check_player_count(n);
  if (carrier == kEmptyCoalition) {
    fail(Errc::EmptyCarrier, "unanimity game needs a nonempty carrier");
  }
  if (carrier > full_coalition(n)) {
    fail(Errc::InvariantViolation, "carrier outside player set");
  }
  std::vector<Rat> table(std::size_t{1} << n, Rat(0));
  const Coalition limit = full_coalition(n);
  for (Coalition a = 0; a <= limit; ++a) {
    if (is_subset(carrier, a)) table[a] = 1;
    if (a == limit) break;
  }
  return Game(n, std::move(table));
}

bool Game::operator<(const Game& other) const {
  if (n_ != other.n_) return n_ < other.n_;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const int c = cmp(values_[i], other.values_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

Rat Allocation::of(Coalition a) const {
  Rat total(0);
  for (int i : coalition_players(a)) total += x[i];
  return total;
}

Game linear_combine(const std::vector<std::pair<Rat, Game>>& terms) {
  if (terms.empty()) {
    fail(Errc::EmptyList, "linear_combine needs at least one term");
  }
  const int n = terms.front().second.players();
  std::vector<Rat> table(std::size_t{1} << n, Rat(0));
  for (const auto& [coeff, game] : terms) {
    check_same_players(terms.front().second, game);
    for (std::size_t a = 0; a < table.size(); ++a) {
      table[a] += coeff * game.table()[a];
    }
  }
  return Game::from_table(n, std::move(table));
}

Game add(const Game& a, const Game& b) {
  return linear_combine({{Rat(1), a}, {Rat(1), b}});
}

Game subtract(const Game& a, const Game& b) {
  return linear_combine({{Rat(1), a}, {Rat(-1), b}});
}

Game scale(const Rat& c, const Game& v) { return linear_combine({{c, v}}); }

namespace {

Game pointwise_extremum(const std::vector<Game>& games, bool take_max) {
  if (games.empty()) {
    fail(Errc::EmptyList, "sup/inf of an empty game list");
  }
  const int n = games.front().players();
  std::vector<Rat> table = games.front().table();
  for (std::size_t g = 1; g < games.size(); ++g) {
    check_same_players(games.front(), games[g]);
    for (std::size_t a = 0; a < table.size(); ++a) {
      const Rat& candidate = games[g].table()[a];
      if (take_max ? (candidate > table[a]) : (candidate < table[a])) {
        table[a] = candidate;
      }
    }
  }
  return Game::from_table(n, std::move(table));
}

}  // namespace

Game game_sup(const std::vector<Game>& games) {
  return pointwise_extremum(games, true);
}

Game game_inf(const std::vector<Game>& games) {
  return pointwise_extremum(games, false);
}

MobiusCoeffs mobius(const Game& v) {
  // In-place subset (Mobius) transform, one player at a time.
  const int n = v.players();
  Vec m = v.table();
  for (int i = 0; i < n; ++i) {
    const Coalition bit = singleton(i);
    for (Coalition a = 0; a < m.size(); ++a) {
      if (a & bit) m[a] -= m[a ^ bit];
    }
  }
  return MobiusCoeffs{n, std::move(m)};
}

Game mobius_inverse(const MobiusCoeffs& m) {
  const int n = m.n;
  if (m.coeffs.size() != (std::size_t{1} << n)) {
    fail(Errc::InvariantViolation, "coefficient table must have 2^n entries");
  }
  if (m.coeffs[0] != 0) {
    fail(Errc::NonzeroEmptySet, "Mobius coefficient at the empty set");
  }
  Vec table = m.coeffs;
  for (int i = 0; i < n; ++i) {
    const Coalition bit = singleton(i);
    for (Coalition a = 0; a < table.size(); ++a) {
      if (a & bit) table[a] += table[a ^ bit];
    }
  }
  return Game::from_table(n, std::move(table));
}

std::pair<Game, Game> zero_normalize(const Game& v) {
  const int n = v.players();
  Allocation singles = Allocation::zero(n);
  for (int i = 0; i < n; ++i) singles.x[i] = v.value(singleton(i));
  const Game additive = embed_additive(singles);
  return {subtract(v, additive), additive};
}

Game embed_additive(const Allocation& x) {
  const int n = x.n;
  std::vector<Rat> table(std::size_t{1} << n, Rat(0));
  for (Coalition a = 0; a < table.size(); ++a) table[a] = x.of(a);
  return Game::from_table(n, std::move(table));
}

Allocation restrict_additive(const Game& m) {
  if (!is_additive_game(m)) {
    fail(Errc::NotAdditive, "game is not additive");
  }
  Allocation x = Allocation::zero(m.players());
  for (int i = 0; i < m.players(); ++i) x.x[i] = m.value(singleton(i));
  return x;
}

bool is_additive_game(const Game& v) {
  const Coalition limit = v.grand();
  for (Coalition a = 0; a <= limit; ++a) {
    Rat sum(0);
    for (int i : coalition_players(a)) sum += v.value(singleton(i));
    if (v.value(a) != sum) return false;
    if (a == limit) break;
  }
  return true;
}

Game subgame(const Game& v, Coalition a) {
  if (a == kEmptyCoalition) {
    fail(Errc::EmptyCarrier, "subgame needs a nonempty coalition");
  }
  if (a > v.grand()) {
    fail(Errc::InvariantViolation, "coalition outside player set");
  }
  const std::vector<int> players = coalition_players(a);
  const int k = static_cast<int>(players.size());
  std::vector<Rat> table(std::size_t{1} << k, Rat(0));
  for (Coalition s = 0; s < table.size(); ++s) {
    Coalition lifted = 0;
    for (int j = 0; j < k; ++j) {
      if (has_player(s, j)) lifted |= singleton(players[j]);
    }
    table[s] = v.value(lifted);
  }
  return Game::from_table(k, std::move(table));
}

}  // namespace coalgame
