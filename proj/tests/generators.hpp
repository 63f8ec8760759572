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

// Seeded random generators for games and class-constrained corpora.
// Everything is deterministic given the engine state.

#ifndef COALGAME_TESTS_GENERATORS_HPP
#define COALGAME_TESTS_GENERATORS_HPP

#include <random>
#include <vector>

#include "coalgame/cones.hpp"
#include "coalgame/game.hpp"
#include "coalgame/polyhedra.hpp"
#include "coalgame/solutions.hpp"

namespace coalgame::testing {

using Rng = std::mt19937_64;

inline Rat rand_rat(Rng& rng, int max_num = 100, int max_den = 100) {
  std::uniform_int_distribution<int> num(-max_num, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  return make_rat(num(rng), den(rng));
}

inline Rat rand_nonneg_rat(Rng& rng, int max_num = 100, int max_den = 100) {
  std::uniform_int_distribution<int> num(0, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  return make_rat(num(rng), den(rng));
}

inline Game rand_game(Rng& rng, int n, int max_num = 100, int max_den = 100) {
  std::vector<Rat> table(std::size_t{1} << n, Rat(0));
  for (std::size_t a = 1; a < table.size(); ++a) {
    table[a] = rand_rat(rng, max_num, max_den);
  }
  return Game::from_table(n, std::move(table));
}

inline Allocation rand_allocation(Rng& rng, int n) {
  Allocation x = Allocation::zero(n);
  for (int i = 0; i < n; ++i) x.x[i] = rand_rat(rng);
  return x;
}

// Monotone + zero-normalized: grow values along the subset order.
inline Game rand_zero_monotone(Rng& rng, int n) {
  std::vector<Rat> table(std::size_t{1} << n, Rat(0));
  for (Coalition a : canonical_coalitions(n, 2)) {
    Rat floor(0);
    for (int i : coalition_players(a)) {
      const Coalition smaller = a & ~singleton(i);
      if (table[smaller] > floor) floor = table[smaller];
    }
    table[a] = floor + rand_nonneg_rat(rng, 20, 10);
  }
  return Game::from_table(n, std::move(table));
}

// Nonnegative dividends on |A| >= 2; optionally rescaled to hit a
// prescribed grand value.
inline Game rand_tm0(Rng& rng, int n, const Rat* grand_value = nullptr) {
  MobiusCoeffs m{n, Vec(std::size_t{1} << n, Rat(0))};
  for (Coalition a : canonical_coalitions(n, 2)) {
    m.coeffs[a] = rand_nonneg_rat(rng, 20, 10);
  }
  Game game = mobius_inverse(m);
  if (grand_value != nullptr) {
    const Rat current = game.grand_value();
    if (current == 0) {
      MobiusCoeffs bump{n, Vec(std::size_t{1} << n, Rat(0))};
      bump.coeffs[full_coalition(n)] = *grand_value;
      return mobius_inverse(bump);
    }
    game = scale(*grand_value / current, game);
  }
  return game;
}

inline Game rand_weakly_superadditive(Rng& rng, int n) {
  return add(rand_zero_monotone(rng, n), embed_additive(rand_allocation(rng, n)));
}

// Conic combination of the zero-normalized supermodular generators
// plus an additive game. Pass the precomputed ray list to amortize the
// double-description run.
inline Game rand_supermodular(Rng& rng, int n,
                              const std::vector<Game>& supermodular0_rays) {
  std::vector<std::pair<Rat, Game>> terms;
  terms.emplace_back(Rat(1), embed_additive(rand_allocation(rng, n)));
  for (const Game& ray : supermodular0_rays) {
    terms.emplace_back(rand_nonneg_rat(rng, 10, 5), ray);
  }
  return linear_combine(terms);
}

inline std::vector<Game> supermodular0_rays(int n) {
  return cone_ray_games("supermodular0", n);
}

// Uniform rational point of the imputation set (requires it nonempty).
inline Allocation rand_imputation_point(Rng& rng, const Game& v) {
  const int n = v.players();
  Rat slack = v.grand_value();
  for (int i = 0; i < n; ++i) slack -= v.value(singleton(i));
  std::uniform_int_distribution<int> w(0, 50);
  Vec weights(n);
  Rat total(0);
  for (int i = 0; i < n; ++i) {
    weights[i] = w(rng);
    total += weights[i];
  }
  if (total == 0) {
    weights[0] = 1;
    total = 1;
  }
  Allocation x = Allocation::zero(n);
  for (int i = 0; i < n; ++i) {
    x.x[i] = v.value(singleton(i)) + slack * weights[i] / total;
  }
  return x;
}

}  // namespace coalgame::testing

#endif  // COALGAME_TESTS_GENERATORS_HPP
