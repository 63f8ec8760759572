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

#ifndef COALGAME_DECOMPOSITION_HPP
#define COALGAME_DECOMPOSITION_HPP

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "coalgame/cones.hpp"
#include "coalgame/game.hpp"
#include "coalgame/polyhedra.hpp"
#include "coalgame/solutions.hpp"

namespace coalgame {

/// Executable witness that a solution factors through elementary
/// games: the tau output (labeled elementary games), the aggregated
/// alpha output, the directly computed solution, and whether the two
/// agree exactly.
struct FactorizationRecord {
  std::string scheme;
  std::vector<std::pair<std::string, Game>> tau;
  VPolytope alpha;
  VPolytope direct;
  bool commutes = false;
};

/// Solution values tabulated on cone generators (or basis games).
struct SolutionTable {
  std::map<Game, VPolytope> entries;
};

/// The marginal-contribution games D_i with D_i(A) = v(A+i) - v(A),
/// evaluated literally (so D_i(A) = 0 when i is in A).
std::map<int, Game> marginal_games(const Game& v);

/// Probabilistic-value factorization: tau collects the marginal games,
/// alpha takes the per-player expectations.
FactorizationRecord factor_probabilistic(const Game& v,
                                         const ProbabilisticWeights& w);

/// Weber-set factorization through the additive embeddings of the
/// marginal vectors. Requires n <= 8.
FactorizationRecord factor_weber(const Game& v);

/// Selectope factorization through the additive embeddings of the
/// selector values. Requires n <= 4.
FactorizationRecord factor_selectope(const Game& v);

/// Nucleolus factorization: tau is the excess-game map, kept lazily;
/// the record stores the excess games at the points the lexicographic
/// minimization visited.
FactorizationRecord factor_nucleolus(const Game& v, const HPolytope& K);

/// Linear-basis factorization: tau gives the coordinates of v in the
/// basis, alpha recombines the tabulated single-point solutions.
FactorizationRecord factor_linear(
    const Game& v, const std::vector<Game>& basis, const SolutionTable& table,
    const std::function<Allocation(const Game&)>& direct_sigma);

/// Conic factorization over a zero-normalized cone: the coordinates of
/// the zero-normalized part in the fan's minimal cell, plus the
/// additive remainder, recombined with scaled Minkowski sums.
FactorizationRecord factor_cone(
    const Game& v, const HPolytope& cone_h, const GameSpace& space,
    const SimplicialFan& fan, const SolutionTable& table,
    const std::function<VPolytope(const Game&)>& sigma_additive,
    const std::function<VPolytope(const Game&)>& direct_sigma);

/// The elementary game v^B = v(B) u_B + (v(N) - v(B)) u_N.
Game game_vB(const Game& v, Coalition b);

/// Max-decomposition of a zero-monotone game: the family {v^B} whose
/// pointwise supremum is v, each member zero-normalized totally
/// monotone with the same grand value.
std::map<Coalition, Game> max_decompose(const Game& v);

/// Core factorization on weakly superadditive games: translate by the
/// additive part and intersect the nestohedron cores of the
/// zero-normalized part. Requires n <= 5.
FactorizationRecord core_ws(const Game& v);

/// Checks core(sup of games) == intersection of the cores, for games
/// sharing the grand-coalition value.
bool verify_core_intersection(const std::vector<Game>& games);

/// Core of v^B as a weighted Minkowski sum of two standard simplices.
VPolytope nestohedron_core(const Game& v, Coalition b);

}  // namespace coalgame

#endif  // COALGAME_DECOMPOSITION_HPP
