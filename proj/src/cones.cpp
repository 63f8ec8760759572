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

#include "coalgame/cones.hpp"

#include <map>

#include "coalgame/errors.hpp"

namespace coalgame {

GameSpace GameSpace::zero_normalized(int n) {
  return GameSpace{n, canonical_coalitions(n, 2)};
}

Vec game_to_vec(const Game& v, const GameSpace& space) {
  if (v.players() != space.n) {
    fail(Errc::MixedPlayerCounts, "game does not match the chart");
  }
  for (int i = 0; i < space.n; ++i) {
    if (v.value(singleton(i)) != 0) {
      fail(Errc::NotInClass, "game is not zero-normalized");
    }
  }
  Vec x(space.coords.size());
  for (std::size_t k = 0; k < space.coords.size(); ++k) {
    x[k] = v.value(space.coords[k]);
  }
  return x;
}

Game vec_to_game(const Vec& x, const GameSpace& space) {
  if (x.size() != space.coords.size()) {
    fail(Errc::DimensionMismatch, "vector does not match the chart");
  }
  std::vector<std::pair<Coalition, Rat>> assignments;
  for (std::size_t k = 0; k < space.coords.size(); ++k) {
    assignments.emplace_back(space.coords[k], x[k]);
  }
  return Game::make(space.n, assignments);
}

HPolytope tm0_cone_h(int n) {
  const GameSpace space = GameSpace::zero_normalized(n);
  std::map<Coalition, int> index;
  for (int k = 0; k < space.dim(); ++k) index[space.coords[k]] = k;

  HPolytope cone(space.dim());
  for (Coalition a : space.coords) {
    Vec row(space.dim(), Rat(0));
    // Mobius coefficient of A: alternating sum over subsets; only
    // subsets of size >= 2 survive zero-normalization.
    for (Coalition b = a;; b = (b - 1) & a) {
      if (coalition_size(b) >= 2) {
        const int sign = (coalition_size(a ^ b) % 2 == 0) ? 1 : -1;
        row[index[b]] += sign;
      }
      if (b == 0) break;
    }
    cone.add_inequality(std::move(row), Rat(0));
  }
  return cone;
}

HPolytope supermodular0_cone_h(int n) {
  const GameSpace space = GameSpace::zero_normalized(n);
  std::map<Coalition, int> index;
  for (int k = 0; k < space.dim(); ++k) index[space.coords[k]] = k;
  const auto coord = [&](Coalition a, Vec& row, int sign) {
    if (coalition_size(a) >= 2) row[index[a]] += sign;
  };

  HPolytope cone(space.dim());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Coalition ij = singleton(i) | singleton(j);
      for (Coalition s = 0; s < (1u << n); ++s) {
        if (s & ij) continue;
        Vec row(space.dim(), Rat(0));
        coord(s | ij, row, +1);
        coord(s, row, +1);
        coord(s | singleton(i), row, -1);
        coord(s | singleton(j), row, -1);
        cone.add_inequality(std::move(row), Rat(0));
      }
    }
  }
  return cone;
}

HPolytope cone_by_name(const std::string& name, int n) {
  if (n < 1 || n > kMaxPlayers) {
    fail(Errc::PlayerCountOutOfRange, "player count " + std::to_string(n));
  }
  if (name == "tm0") return tm0_cone_h(n);
  if (name == "supermodular0") return supermodular0_cone_h(n);
  fail(Errc::NotInClass, "unknown cone class '" + name + "'");
}

std::vector<Game> cone_ray_games(const std::string& name, int n) {
  const HPolytope cone = cone_by_name(name, n);
  const GameSpace space = GameSpace::zero_normalized(n);
  std::vector<Game> games;
  if (space.dim() == 0) return games;
  for (const Vec& ray : extreme_rays(cone).generators) {
    games.push_back(vec_to_game(ray, space));
  }
  return games;
}

}  // namespace coalgame
