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

#include "coalgame/decomposition.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "coalgame/classes.hpp"
#include "coalgame/errors.hpp"
#include "coalgame/linalg.hpp"

namespace coalgame {

namespace {

VPolytope single_point(const Allocation& x) {
  return VPolytope{x.n, {x.x}};
}

std::string perm_label(const Permutation& pi) {
  std::string out = "pi=(";
  for (std::size_t k = 0; k < pi.image.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(pi.image[k] + 1);
  }
  return out + ")";
}

// Concatenation of constraint systems with duplicate rows removed;
// no implication pruning (double description tolerates redundancy).
HPolytope concat_systems(const std::vector<HPolytope>& systems) {
  HPolytope merged(systems.front().dim);
  std::set<std::pair<Vec, Rat>> seen_ineq, seen_eq;
  for (const HPolytope& sys : systems) {
    for (std::size_t i = 0; i < sys.A.size(); ++i) {
      if (seen_ineq.insert({sys.A[i], sys.b[i]}).second) {
        merged.A.push_back(sys.A[i]);
        merged.b.push_back(sys.b[i]);
      }
    }
    for (std::size_t j = 0; j < sys.E.size(); ++j) {
      if (seen_eq.insert({sys.E[j], sys.f[j]}).second) {
        merged.E.push_back(sys.E[j]);
        merged.f.push_back(sys.f[j]);
      }
    }
  }
  return merged;
}

}  // namespace

std::map<int, Game> marginal_games(const Game& v) {
  std::map<int, Game> out;
  const int n = v.players();
  for (int i = 0; i < n; ++i) {
    const Coalition bit = singleton(i);
    std::vector<Rat> table(v.table_size());
    for (Coalition a = 0; a < v.table_size(); ++a) {
      table[a] = v.value(a | bit) - v.value(a);
    }
    out.emplace(i, Game::from_table(n, std::move(table)));
  }
  return out;
}

FactorizationRecord factor_probabilistic(const Game& v,
                                         const ProbabilisticWeights& w) {
  if (w.n != v.players()) {
    fail(Errc::InvalidWeights, "weights sized for a different player count");
  }
  w.validate();
  FactorizationRecord record;
  record.scheme = "probabilistic";
  const std::map<int, Game> marginals = marginal_games(v);
  Allocation alpha = Allocation::zero(v.players());
  for (const auto& [player, d_game] : marginals) {
    record.tau.emplace_back("D_" + std::to_string(player + 1), d_game);
    for (Coalition a = 0; a < v.table_size(); ++a) {
      if (has_player(a, player) || w.p[player][a] == 0) continue;
      alpha.x[player] += w.p[player][a] * d_game.value(a);
    }
  }
  record.alpha = single_point(alpha);
  record.direct = single_point(probabilistic_value(v, w));
  record.commutes = polytope_equal(record.alpha, record.direct);
  return record;
}

FactorizationRecord factor_weber(const Game& v) {
  if (v.players() > 8) {
    fail(Errc::PlayerCountOutOfRange, "Weber factorization needs n <= 8");
  }
  FactorizationRecord record;
  record.scheme = "weber";
  Mat points;
  for (const Permutation& pi : all_permutations(v.players())) {
    const Game additive = embed_additive(marginal_vector(v, pi));
    points.push_back(restrict_additive(additive).x);
    record.tau.emplace_back(perm_label(pi), additive);
  }
  record.alpha = hull_of_points(v.players(), points);
  record.direct = weber(v);
  record.commutes = polytope_equal(record.alpha, record.direct);
  return record;
}

FactorizationRecord factor_selectope(const Game& v) {
  if (v.players() > 4) {
    fail(Errc::PlayerCountOutOfRange, "selectope factorization needs n <= 4");
  }
  FactorizationRecord record;
  record.scheme = "selectope";
  Mat points;
  const std::vector<Selector> selectors = all_selectors(v.players());
  for (std::size_t s = 0; s < selectors.size(); ++s) {
    const Game additive = embed_additive(selector_value(v, selectors[s]));
    points.push_back(restrict_additive(additive).x);
    record.tau.emplace_back("a[" + std::to_string(s) + "]", additive);
  }
  record.alpha = hull_of_points(v.players(), points);
  record.direct = selectope(v);
  record.commutes = polytope_equal(record.alpha, record.direct);
  return record;
}

FactorizationRecord factor_nucleolus(const Game& v, const HPolytope& K) {
  FactorizationRecord record;
  record.scheme = "nucleolus";
  // tau is the map x -> excess game; it ranges over all of K, so the
  // record keeps only the evaluation at the lexicographic minimum.
  const Allocation direct = nucleolus(v, K);
  const Allocation alpha = nucleolus(v, K);
  std::vector<Rat> excess(v.table_size());
  for (Coalition a = 0; a < v.table_size(); ++a) {
    excess[a] = v.value(a) - alpha.of(a);
  }
  record.tau.emplace_back("theta@" + vec_str(alpha.x),
                          Game::from_table(v.players(), std::move(excess)));
  record.alpha = single_point(alpha);
  record.direct = single_point(direct);
  record.commutes = polytope_equal(record.alpha, record.direct);
  return record;
}

FactorizationRecord factor_linear(
    const Game& v, const std::vector<Game>& basis, const SolutionTable& table,
    const std::function<Allocation(const Game&)>& direct_sigma) {
  const int n = v.players();
  const std::size_t dim = v.table_size() - 1;  // nonempty coalitions
  if (basis.size() != dim) {
    fail(Errc::NotABasis, "basis must contain " + std::to_string(dim) +
                              " games, got " + std::to_string(basis.size()));
  }
  Mat columns;
  for (const Game& g : basis) {
    if (g.players() != n) {
      fail(Errc::MixedPlayerCounts, "basis game on a different player set");
    }
    columns.emplace_back(g.table().begin() + 1, g.table().end());
  }
  const Vec target(v.table().begin() + 1, v.table().end());
  const auto coords = linalg::solve_columns(columns, target);
  if (!coords.has_value()) {
    fail(Errc::NotABasis, "basis games are linearly dependent");
  }

  FactorizationRecord record;
  record.scheme = "linear";
  Allocation alpha = Allocation::zero(n);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    record.tau.emplace_back("basis[" + std::to_string(k) + "]",
                            scale((*coords)[k], basis[k]));
    const auto entry = table.entries.find(basis[k]);
    if (entry == table.entries.end()) {
      fail(Errc::MissingTableEntry,
           "no tabulated solution for basis game " + std::to_string(k));
    }
    if (entry->second.vertices.size() != 1) {
      fail(Errc::InvariantViolation,
           "linear factorization needs single-point solutions");
    }
    for (int c = 0; c < n; ++c) {
      alpha.x[c] += (*coords)[k] * entry->second.vertices[0][c];
    }
  }
  record.alpha = single_point(alpha);
  record.direct = single_point(direct_sigma(v));
  record.commutes = polytope_equal(record.alpha, record.direct);
  return record;
}

FactorizationRecord factor_cone(
    const Game& v, const HPolytope& cone_h, const GameSpace& space,
    const SimplicialFan& fan, const SolutionTable& table,
    const std::function<VPolytope(const Game&)>& sigma_additive,
    const std::function<VPolytope(const Game&)>& direct_sigma) {
  if (space.n != v.players()) {
    fail(Errc::MixedPlayerCounts, "chart does not match the game");
  }
  if (cone_h.dim != space.dim() || fan.cone.dim != space.dim()) {
    fail(Errc::FanMismatch, "cone, fan, and chart dimensions disagree");
  }
  for (const Vec& gen : fan.cone.generators) {
    if (!h_contains(cone_h, gen)) {
      fail(Errc::FanMismatch, "fan generator outside the cone");
    }
  }

  const auto [vhat, additive_part] = zero_normalize(v);
  const Vec vhat_vec = game_to_vec(vhat, space);
  if (!h_contains(cone_h, vhat_vec)) {
    fail(Errc::OutsideCone, "zero-normalized part is outside the cone");
  }
  ConicCoordinates coords;
  try {
    coords = conic_coordinates(vhat_vec, fan);
  } catch (const Error& e) {
    if (e.code() == Errc::OutsideSupport) {
      fail(Errc::FanMismatch, "fan does not cover the cone at this game");
    }
    throw;
  }
  Vec full_coeffs(fan.cone.generators.size(), Rat(0));
  for (std::size_t k = 0; k < coords.support.size(); ++k) {
    full_coeffs[coords.support[k]] = coords.coeffs[k];
  }

  FactorizationRecord record;
  record.scheme = "cone";
  VPolytope alpha = sigma_additive(additive_part);
  for (std::size_t k = 0; k < fan.cone.generators.size(); ++k) {
    const Game generator = vec_to_game(fan.cone.generators[k], space);
    record.tau.emplace_back("gen[" + std::to_string(k) + "]",
                            scale(full_coeffs[k], generator));
    if (full_coeffs[k] == 0) continue;
    const auto entry = table.entries.find(generator);
    if (entry == table.entries.end()) {
      fail(Errc::MissingTableEntry,
           "no tabulated solution for generator " + std::to_string(k));
    }
    alpha = minkowski_sum(alpha, scale_polytope(full_coeffs[k], entry->second));
  }
  record.tau.emplace_back("additive", additive_part);
  record.alpha = std::move(alpha);
  record.direct = direct_sigma(v);
  record.commutes = polytope_equal(record.alpha, record.direct);
  return record;
}

Game game_vB(const Game& v, Coalition b) {
  if (b == kEmptyCoalition) {
    fail(Errc::EmptyCarrier, "v^B needs a nonempty B");
  }
  if (b > v.grand()) {
    fail(Errc::InvariantViolation, "coalition outside player set");
  }
  return linear_combine(
      {{v.value(b), Game::unanimity(v.players(), b)},
       {v.grand_value() - v.value(b), Game::unanimity(v.players(), v.grand())}});
}

namespace {

void require_zero_monotone(const Game& v) {
  if (!is_zero_normalized(v)) {
    fail(Errc::NotZeroMonotone, "game is not zero-normalized");
  }
  if (!is_monotone(v)) {
    fail(Errc::NotZeroMonotone, "game is not monotone");
  }
}

}  // namespace

std::map<Coalition, Game> max_decompose(const Game& v) {
  require_zero_monotone(v);
  std::map<Coalition, Game> out;
  for (Coalition b : canonical_coalitions(v.players(), 1)) {
    out.emplace(b, game_vB(v, b));
  }
  return out;
}

FactorizationRecord core_ws(const Game& v) {
  if (v.players() > 5) {
    fail(Errc::PlayerCountOutOfRange, "core factorization needs n <= 5");
  }
  if (!is_weakly_superadditive(v)) {
    fail(Errc::NotWeaklySuperadditive, "game is not weakly superadditive");
  }
  const auto [vhat, additive_part] = zero_normalize(v);

  FactorizationRecord record;
  record.scheme = "ws_core";
  record.tau.emplace_back("additive", additive_part);
  std::vector<HPolytope> systems;
  for (Coalition b : canonical_coalitions(v.players(), 1)) {
    const Game elementary = game_vB(vhat, b);
    record.tau.emplace_back("B=" + coalition_label(b), elementary);
    systems.push_back(core_h(elementary));
  }
  const VPolytope intersection =
      enumerate_vertices_unchecked(concat_systems(systems));
  record.alpha = minkowski_sum(single_point(restrict_additive(additive_part)),
                               intersection);
  record.direct = enumerate_vertices_unchecked(core_h(v));
  record.commutes = polytope_equal(record.alpha, record.direct);
  return record;
}

bool verify_core_intersection(const std::vector<Game>& games) {
  if (games.empty()) fail(Errc::EmptyList, "no games to intersect");
  std::vector<HPolytope> systems;
  for (const Game& g : games) {
    if (g.players() != games.front().players()) {
      fail(Errc::MixedPlayerCounts, "games on different player sets");
    }
    if (g.grand_value() != games.front().grand_value()) {
      fail(Errc::GrandCoalitionMismatch,
           "grand-coalition values differ: " + rat_str(g.grand_value()) +
               " vs " + rat_str(games.front().grand_value()));
    }
    systems.push_back(core_h(g));
  }
  const VPolytope of_sup = enumerate_vertices_unchecked(core_h(game_sup(games)));
  const VPolytope of_intersection =
      enumerate_vertices_unchecked(concat_systems(systems));
  return of_sup == of_intersection;
}

VPolytope nestohedron_core(const Game& v, Coalition b) {
  if (b == kEmptyCoalition) {
    fail(Errc::EmptyCarrier, "nestohedron core needs a nonempty B");
  }
  require_zero_monotone(v);
  const int n = v.players();
  const Rat& weight_b = v.value(b);
  const Rat weight_n = v.grand_value() - v.value(b);
  Mat points;
  for (int i : coalition_players(b)) {
    for (int j = 0; j < n; ++j) {
      Vec point(n, Rat(0));
      point[i] += weight_b;
      point[j] += weight_n;
      points.push_back(std::move(point));
    }
  }
  return hull_of_points(n, points);
}

}  // namespace coalgame
