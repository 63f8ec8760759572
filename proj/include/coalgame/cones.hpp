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

#ifndef COALGAME_CONES_HPP
#define COALGAME_CONES_HPP

#include <string>
#include <vector>

#include "coalgame/game.hpp"
#include "coalgame/polyhedra.hpp"

namespace coalgame {

/// Coordinate chart for zero-normalized games: one coordinate per
/// coalition of size >= 2 in canonical order. Zero-normalized cones
/// are pointed in this space.
struct GameSpace {
  int n = 0;
  std::vector<Coalition> coords;

  static GameSpace zero_normalized(int n);

  int dim() const { return static_cast<int>(coords.size()); }
};

/// Projects a zero-normalized game onto the chart (the dropped
/// coordinates must all be zero).
Vec game_to_vec(const Game& v, const GameSpace& space);

/// Lifts chart coordinates back to a game, zero on the empty set and
/// singletons.
Game vec_to_game(const Vec& x, const GameSpace& space);

/// H-form of the cone of zero-normalized totally monotone games:
/// all Mobius coefficients on |A| >= 2 nonnegative.
HPolytope tm0_cone_h(int n);

/// H-form of the cone of zero-normalized supermodular games.
HPolytope supermodular0_cone_h(int n);

/// Named cone lookup for the ray catalog: "tm0" or "supermodular0".
HPolytope cone_by_name(const std::string& name, int n);

/// Extreme-ray generators of a named cone, as games.
std::vector<Game> cone_ray_games(const std::string& name, int n);

}  // namespace coalgame

#endif  // COALGAME_CONES_HPP
