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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "coalgame/classes.hpp"
#include "coalgame/errors.hpp"
#include "coalgame/solutions.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace coalgame;
using namespace coalgame::testing;

namespace {

Vec V(std::initializer_list<int> entries) {
  Vec out;
  for (int e : entries) out.push_back(Rat(e));
  return out;
}

Game majority3() {
  return Game::make(3, {{0b011, Rat(1)},
                        {0b101, Rat(1)},
                        {0b110, Rat(1)},
                        {0b111, Rat(1)}});
}

}  // namespace

TEST_CASE("core_h") {
  const Game u12 = Game::unanimity(3, 0b011);
  const HPolytope core = core_h(u12);
  CHECK(core.E.size() == 1);
  CHECK(core.A.size() == 6);
  CHECK(polytope_equal(core, VPolytope{3, {V({0, 1, 0}), V({1, 0, 0})}}));

  Rng rng(41);
  const Allocation x = rand_allocation(rng, 3);
  const VPolytope point_core =
      enumerate_vertices_unchecked(core_h(embed_additive(x)));
  REQUIRE(point_core.vertices.size() == 1);
  CHECK(point_core.vertices[0] == x.x);

  CHECK(enumerate_vertices_unchecked(core_h(majority3())).empty());
}

TEST_CASE("marginal_vector") {
  Rng rng(42);
  const Allocation x = rand_allocation(rng, 3);
  const Game mx = embed_additive(x);
  for (const Permutation& pi : all_permutations(3)) {
    CHECK(marginal_vector(mx, pi) == x);
  }

  const Game un = Game::unanimity(4, 0b1111);
  const Allocation last = marginal_vector(un, Permutation::identity(4));
  CHECK(last.x == V({0, 0, 0, 1}));

  // Order (2,1,3): player 1 completes {1,2} and collects the unit.
  const Game u12 = Game::unanimity(3, 0b011);
  const Allocation m = marginal_vector(u12, Permutation{3, {1, 0, 2}});
  CHECK(m.x == V({1, 0, 0}));

  // Efficiency: coordinates always sum to v(N).
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const Game v = rand_game(rng, n);
    for (const Permutation& pi : all_permutations(n)) {
      CHECK(marginal_vector(v, pi).of(v.grand()) == v.grand_value());
    }
  }
}

TEST_CASE("weber") {
  Rng rng(43);
  const Allocation x = rand_allocation(rng, 3);
  const VPolytope point = weber(embed_additive(x));
  REQUIRE(point.vertices.size() == 1);
  CHECK(point.vertices[0] == x.x);

  CHECK(polytope_equal(weber(Game::unanimity(3, 0b111)),
                       vertices(core_h(Game::unanimity(3, 0b111)))));

  // Supermodular games: Weber set equals the core (classical identity,
  // used as a cross-library sanity check).
  const std::vector<Game> rays = supermodular0_rays(3);
  for (int trial = 0; trial < 15; ++trial) {
    const Game v = rand_supermodular(rng, 3, rays);
    CHECK(polytope_equal(weber(v), enumerate_vertices_unchecked(core_h(v))));
  }
  const std::vector<Game> rays4 = supermodular0_rays(4);
  for (int trial = 0; trial < 5; ++trial) {
    const Game v = rand_supermodular(rng, 4, rays4);
    CHECK(polytope_equal(weber(v), enumerate_vertices_unchecked(core_h(v))));
  }

  CHECK_THROWS_AS(weber(Game::zero(9)), Error);
}

TEST_CASE("selector machinery") {
  // u_B: a single dividend goes to the chosen member of B.
  const Game ub = Game::unanimity(3, 0b110);
  for (const Selector& a : all_selectors(3)) {
    const Allocation phi = selector_value(ub, a);
    Vec expected(3, Rat(0));
    expected[a.choice[0b110]] = 1;
    CHECK(phi.x == expected);
  }

  // Additive games: every selector is forced on singletons and the
  // other dividends vanish.
  Rng rng(44);
  const Allocation x = rand_allocation(rng, 3);
  const Game mx = embed_additive(x);
  for (const Selector& a : all_selectors(3)) {
    CHECK(selector_value(mx, a) == x);
  }

  // v(A) = |A|^2 with the min-element selector: dividends are 1 on
  // singletons and 2 on pairs, so phi = (5, 3, 1).
  std::vector<Rat> table(8);
  for (Coalition a = 0; a < 8; ++a) {
    table[a] = coalition_size(a) * coalition_size(a);
  }
  const Game square = Game::from_table(3, std::move(table));
  Selector min_sel{3, std::vector<int>(8, -1)};
  for (Coalition a = 1; a < 8; ++a) {
    min_sel.choice[a] = coalition_players(a).front();
  }
  CHECK(selector_value(square, min_sel).x == V({5, 3, 1}));

  CHECK(all_selectors(3).size() == 24);   // 1^3 * 2^3 * 3
  CHECK(all_selectors(4).size() == 20736);
}

TEST_CASE("selectope") {
  CHECK(polytope_equal(selectope(Game::unanimity(3, 0b110)),
                       vertices(core_h(Game::unanimity(3, 0b110)))));

  Rng rng(45);
  const Allocation x = rand_allocation(rng, 3);
  const VPolytope point = selectope(embed_additive(x));
  REQUIRE(point.vertices.size() == 1);
  CHECK(point.vertices[0] == x.x);

  // Nonnegative dividends: the core sits inside the selectope.
  for (int trial = 0; trial < 10; ++trial) {
    const Game v = rand_tm0(rng, 3);
    const VPolytope sel = selectope(v);
    for (const Vec& vert : enumerate_vertices_unchecked(core_h(v)).vertices) {
      CHECK(in_convex_hull(vert, sel));
    }
  }

  CHECK_THROWS_AS(selectope(Game::zero(5)), Error);
}

TEST_CASE("probabilistic_value") {
  // All mass on the empty coalition pays v({i}).
  Rng rng(46);
  const Game v = rand_game(rng, 3);
  ProbabilisticWeights dictator;
  dictator.n = 3;
  dictator.p.assign(3, Vec(8, Rat(0)));
  for (int i = 0; i < 3; ++i) dictator.p[i][0] = 1;
  const Allocation psi = probabilistic_value(v, dictator);
  for (int i = 0; i < 3; ++i) CHECK(psi.x[i] == v.value(singleton(i)));

  // Shapley preset on u_12 (3 players) pays (1/2, 1/2, 0).
  const Allocation sh = probabilistic_value(
      Game::unanimity(3, 0b011), ProbabilisticWeights::shapley(3));
  CHECK(sh.x[0] == make_rat(1, 2));
  CHECK(sh.x[1] == make_rat(1, 2));
  CHECK(sh.x[2] == 0);

  // Additive games pay the allocation under any valid weights.
  const Allocation x = rand_allocation(rng, 3);
  ProbabilisticWeights skew;
  skew.n = 3;
  skew.p.assign(3, Vec(8, Rat(0)));
  for (int i = 0; i < 3; ++i) {
    skew.p[i][0] = make_rat(1, 3);
    const Coalition rest = full_coalition(3) & ~singleton(i);
    skew.p[i][rest] = make_rat(2, 3);
  }
  CHECK(probabilistic_value(embed_additive(x), skew) == x);

  ProbabilisticWeights bad = skew;
  bad.p[1][0] = make_rat(-1, 3);
  bad.p[1][full_coalition(3) & ~singleton(1)] = make_rat(4, 3);
  CHECK_THROWS_AS(probabilistic_value(v, bad), Error);
}

TEST_CASE("shapley") {
  const Allocation un = shapley(Game::unanimity(4, 0b1111));
  for (const Rat& c : un.x) CHECK(c == make_rat(1, 4));

  const Allocation u12 = shapley(Game::unanimity(3, 0b011));
  CHECK(u12.x == Vec{make_rat(1, 2), make_rat(1, 2), Rat(0)});

  // Equality with the average of all marginal vectors.
  Rng rng(47);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const Game v = rand_game(rng, n);
    Allocation average = Allocation::zero(n);
    const auto perms = all_permutations(n);
    for (const Permutation& pi : perms) {
      const Allocation m = marginal_vector(v, pi);
      for (int i = 0; i < n; ++i) average.x[i] += m.x[i];
    }
    for (int i = 0; i < n; ++i) {
      average.x[i] /= static_cast<int>(perms.size());
    }
    CHECK(shapley(v) == average);
    CHECK(shapley(v).of(v.grand()) == v.grand_value());
  }
  // n = 5 spot check of the same identity.
  const Game big = rand_game(rng, 5);
  Allocation avg5 = Allocation::zero(5);
  for (const Permutation& pi : all_permutations(5)) {
    const Allocation m = marginal_vector(big, pi);
    for (int i = 0; i < 5; ++i) avg5.x[i] += m.x[i];
  }
  for (int i = 0; i < 5; ++i) avg5.x[i] /= 120;
  CHECK(shapley(big) == avg5);
}

TEST_CASE("excess_profile") {
  const Game u12 = Game::unanimity(3, 0b011);
  const Allocation mid{3, {make_rat(1, 2), make_rat(1, 2), Rat(0)}};
  const ExcessProfile profile = excess_profile(u12, mid);
  REQUIRE(profile.sorted.size() == 8);
  // Top entries 0 (for {}, N, {1,2}), then -1/2 entries.
  CHECK(profile.sorted[0] == 0);
  CHECK(profile.sorted[2] == 0);
  CHECK(profile.sorted[3] == make_rat(-1, 2));

  CHECK(excess_profile(Game::zero(2), Allocation::zero(2)).sorted ==
        Vec(4, Rat(0)));

  // Core points have no positive excess.
  Rng rng(48);
  const std::vector<Game> rays = supermodular0_rays(3);
  const Game v = rand_supermodular(rng, 3, rays);
  const BalancednessCertificate cert = is_balanced(v);
  REQUIRE(cert.balanced);
  const ExcessProfile at_core = excess_profile(v, cert.core_point);
  CHECK(at_core.sorted[0] == 0);
  CHECK(at_core.sorted[at_core.sorted.size() - 1] <= 0);
}

TEST_CASE("nucleolus with a single-point K") {
  Rng rng(49);
  const Allocation x = rand_allocation(rng, 3);
  const Game any = rand_game(rng, 3);
  HPolytope point(3);
  for (int i = 0; i < 3; ++i) {
    Vec axis(3, Rat(0));
    axis[i] = 1;
    point.add_equality(std::move(axis), x.x[i]);
  }
  CHECK(nucleolus(any, point).x == x.x);
}

TEST_CASE("nucleolus on imputation sets") {
  const Game un = Game::unanimity(3, 0b111);
  CHECK(nucleolus(un, imputation_set(un)).x == Vec(3, make_rat(1, 3)));

  const Game u12 = Game::unanimity(3, 0b011);
  const Allocation nuc = nucleolus(u12, imputation_set(u12));
  CHECK(nuc.x == Vec{make_rat(1, 2), make_rat(1, 2), Rat(0)});

  // Lexicographic minimality against random imputations, and the
  // fixed point of re-running.
  Rng rng(50);
  for (int trial = 0; trial < 8; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 2);
    Game v = rand_game(rng, n, 10, 5);
    {
      // Make the imputation set nonempty.
      Rat singles(0);
      for (int i = 0; i < n; ++i) singles += v.value(singleton(i));
      std::vector<Rat> table = v.table();
      table[v.grand()] = singles + rand_nonneg_rat(rng, 10, 3);
      v = Game::from_table(n, std::move(table));
    }
    const HPolytope K = imputation_set(v);
    const Allocation nu = nucleolus(v, K);
    CHECK(lp_point_feasible(K, nu.x));
    const ExcessProfile best = excess_profile(v, nu);
    for (int probe = 0; probe < 200; ++probe) {
      const Allocation y = rand_imputation_point(rng, v);
      CHECK(lex_leq(best, excess_profile(v, y)));
    }
    CHECK(nucleolus(v, K).x == nu.x);
  }

  // Permuting K's rows does not change the point.
  const Game u13 = Game::unanimity(3, 0b101);
  HPolytope K = imputation_set(u13);
  HPolytope permuted(3);
  for (std::size_t r = K.A.size(); r-- > 0;) {
    permuted.A.push_back(K.A[r]);
    permuted.b.push_back(K.b[r]);
  }
  permuted.E = K.E;
  permuted.f = K.f;
  CHECK(nucleolus(u13, K).x == nucleolus(u13, permuted).x);

  // Empty and unbounded K fail loudly.
  HPolytope empty(2);
  empty.add_inequality(V({1, 0}), Rat(1));
  empty.add_inequality(V({-1, 0}), Rat(0));
  CHECK_THROWS_AS(nucleolus(Game::zero(2), empty), Error);
  HPolytope unbounded(2);
  unbounded.add_inequality(V({1, 0}), Rat(0));
  unbounded.add_inequality(V({0, 1}), Rat(0));
  CHECK_THROWS_AS(nucleolus(Game::zero(2), unbounded), Error);
}
