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

#ifndef COALGAME_SOLUTIONS_HPP
#define COALGAME_SOLUTIONS_HPP

#include <vector>

#include "coalgame/game.hpp"
#include "coalgame/polyhedra.hpp"

namespace coalgame {

/// H-form of the core: x(N) = v(N) plus x(A) >= v(A) for every proper
/// nonempty A. An empty core is a valid (empty) polytope.
HPolytope core_h(const Game& v);

/// The imputation set {x(N) = v(N), x_i >= v({i})}, the default K for
/// the nucleolus.
HPolytope imputation_set(const Game& v);

/// A permutation of the players stored as an image array:
/// image[k] is the (0-based) player placed at position k.
struct Permutation {
  int n = 0;
  std::vector<int> image;

  static Permutation identity(int n);
};

std::vector<Permutation> all_permutations(int n);

/// Marginal vector: each player receives their marginal contribution
/// when players enter in the order given by the permutation.
Allocation marginal_vector(const Game& v, const Permutation& pi);

/// Convex hull of all marginal vectors. Requires n <= 8.
VPolytope weber(const Game& v);

/// A selector picks one member of every nonempty coalition.
struct Selector {
  int n = 0;
  std::vector<int> choice;  // indexed by mask; choice[a] is a 0-based member

  bool valid() const;
};

/// All selectors in odometer order over the canonical coalition list.
/// Intended for small n; the count is the product of coalition sizes.
std::vector<Selector> all_selectors(int n);

/// Selector value: dividends of each coalition assigned to the chosen
/// member.
Allocation selector_value(const Game& v, const Selector& a);

/// Convex hull of all selector values. Requires n <= 4.
VPolytope selectope(const Game& v);

/// Per-player probability measures over coalitions not containing the
/// player; p[i] is a dense table over all masks, zero on masks
/// containing i.
struct ProbabilisticWeights {
  int n = 0;
  std::vector<Vec> p;

  static ProbabilisticWeights shapley(int n);
  void validate() const;  // throws InvalidWeights
};

Allocation probabilistic_value(const Game& v, const ProbabilisticWeights& p);

/// The Shapley value, as the probabilistic value with the symmetric
/// weight preset; equals the average of all marginal vectors.
Allocation shapley(const Game& v);

/// All 2^n excesses v(A) - x(A) sorted non-increasingly.
struct ExcessProfile {
  Vec sorted;
};

ExcessProfile excess_profile(const Game& v, const Allocation& x);

/// Strict lexicographic comparison; profiles must have equal length.
bool lex_less(const ExcessProfile& a, const ExcessProfile& b);
bool lex_leq(const ExcessProfile& a, const ExcessProfile& b);

/// The nucleolus of v with respect to a nonempty bounded H-polytope K:
/// the unique point of K with lexicographically minimal excess
/// profile. Iterative scheme: minimize the maximum excess over the
/// not-yet-fixed coalitions, restrict to the optimal face, fix the
/// coalitions whose excess became constant, repeat. Requires n <= 6.
Allocation nucleolus(const Game& v, const HPolytope& K);

}  // namespace coalgame

#endif  // COALGAME_SOLUTIONS_HPP
