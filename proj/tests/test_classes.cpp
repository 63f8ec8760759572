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

Game majority3() {
  return Game::make(3, {{0b011, Rat(1)},
                        {0b101, Rat(1)},
                        {0b110, Rat(1)},
                        {0b111, Rat(1)}});
}

// The implication chain on a report; vacuously true where a premise
// flag is false or unavailable.
void check_chain(const Game& v, const ClassReport& r) {
  if (r.totally_monotone.holds && is_nonnegative(v)) {
    CHECK(r.supermodular.holds);
  }
  if (r.supermodular.holds && r.exact) CHECK(r.exact->holds);
  if (r.exact && r.exact->holds && r.totally_balanced) {
    CHECK(r.totally_balanced->holds);
  }
  if (r.totally_balanced && r.totally_balanced->holds && r.balanced) {
    CHECK(r.balanced->holds);
  }
}

}  // namespace

TEST_CASE("classify named examples") {
  for (Coalition a : canonical_coalitions(3, 1)) {
    const Game u = Game::unanimity(3, a);
    const ClassReport r = classify(u);
    CHECK(r.totally_monotone.holds);
    CHECK(r.supermodular.holds);
    CHECK(r.monotone.holds);
    REQUIRE(r.balanced);
    CHECK(r.balanced->holds);
    REQUIRE(r.exact);
    CHECK(r.exact->holds);
    CHECK(r.zero_normalized.holds == (coalition_size(a) >= 2));
    check_chain(u, r);
  }

  const ClassReport maj = classify(majority3());
  REQUIRE(maj.balanced);
  CHECK(!maj.balanced->holds);
  CHECK(maj.monotone.holds);
  CHECK(!maj.supermodular.holds);

  const ClassReport zero = classify(Game::zero(3));
  CHECK(zero.weakly_superadditive.holds);
  CHECK(zero.monotone.holds);
  CHECK(zero.supermodular.holds);
  CHECK(zero.totally_monotone.holds);
  CHECK(zero.zero_normalized.holds);
  CHECK(zero.zero_monotone.holds);
  CHECK(zero.additive.holds);
  CHECK(zero.balanced->holds);
  CHECK(zero.exact->holds);
  CHECK(zero.totally_balanced->holds);
}

TEST_CASE("is_balanced certificates") {
  // u_N: balanced with a verifiable core point.
  const Game un = Game::unanimity(3, 0b111);
  const BalancednessCertificate cert = is_balanced(un);
  REQUIRE(cert.balanced);
  CHECK(lp_point_feasible(core_h(un), cert.core_point.x));

  // Majority game: the certificate is the pair collection with
  // weights 1/2, worth 3/2 > 1.
  const BalancednessCertificate maj = is_balanced(majority3());
  REQUIRE(!maj.balanced);
  REQUIRE(maj.collection_weights.size() == 3);
  Rat worth(0);
  Vec coverage(3, Rat(0));
  for (const auto& [coal, w] : maj.collection_weights) {
    CHECK(w == make_rat(1, 2));
    CHECK(coalition_size(coal) == 2);
    worth += w * majority3().value(coal);
    for (int i : coalition_players(coal)) coverage[i] += w;
  }
  CHECK(worth == make_rat(3, 2));
  for (const Rat& c : coverage) CHECK(c == 1);

  // An additive game's core is the single allocation itself.
  Rng rng(31);
  const Allocation x = rand_allocation(rng, 3);
  const BalancednessCertificate add_cert = is_balanced(embed_additive(x));
  REQUIRE(add_cert.balanced);
  CHECK(add_cert.core_point == x);

  CHECK_THROWS_AS(is_balanced(Game::zero(9)), Error);
}

TEST_CASE("is_exact") {
  CHECK(is_exact(Game::unanimity(3, 0b111)));
  CHECK(is_exact(Game::unanimity(4, 0b0011)));

  // min x({1,2}) over the zero core is 0 > -1.
  const Game v = Game::make(3, {{0b011, Rat(-1)}});
  CHECK(is_balanced(v).balanced);
  CHECK(!is_exact(v));

  CHECK(!is_exact(majority3()));  // unbalanced games are not exact

  Rng rng(32);
  const std::vector<Game> rays = supermodular0_rays(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Game g = rand_supermodular(rng, 3, rays);
    CHECK(supermodular_oracle(g));
    CHECK(is_exact(g));
    CHECK(is_totally_balanced(g));
  }
  const std::vector<Game> rays4 = supermodular0_rays(4);
  CHECK(rays4.size() == 37);  // golden: count of extreme rays for n=4
  for (int trial = 0; trial < 10; ++trial) {
    const Game g = rand_supermodular(rng, 4, rays4);
    CHECK(supermodular_oracle(g));
    CHECK(is_exact(g));
    CHECK(is_totally_balanced(g));
  }
}

TEST_CASE("is_totally_balanced") {
  CHECK(!is_totally_balanced(majority3()));
  Rng rng(33);
  for (int trial = 0; trial < 20; ++trial) {
    const Game additive = embed_additive(rand_allocation(rng, 4));
    CHECK(is_totally_balanced(additive));
  }
}

TEST_CASE("jordan_decompose_tm") {
  const Game u12 = Game::unanimity(3, 0b011);
  const Game u13 = Game::unanimity(3, 0b101);
  const auto [p1, p2] = jordan_decompose_tm(subtract(u12, u13));
  CHECK(p1 == u12);
  CHECK(p2 == u13);

  const auto [z1, z2] = jordan_decompose_tm(Game::zero(3));
  CHECK(z1 == Game::zero(3));
  CHECK(z2 == Game::zero(3));

  Rng rng(34);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const Game v = rand_game(rng, n);
    const auto [w1, w2] = jordan_decompose_tm(v);
    CHECK(subtract(w1, w2) == v);
    const MobiusCoeffs m1 = mobius(w1);
    const MobiusCoeffs m2 = mobius(w2);
    for (Coalition a = 1; a < v.table_size(); ++a) {
      CHECK(m1.coeffs[a] >= 0);
      CHECK(m2.coeffs[a] >= 0);
      CHECK((m1.coeffs[a] == 0 || m2.coeffs[a] == 0));  // disjoint supports
    }
    CHECK(is_nonnegative(w1));
    CHECK(is_nonnegative(w2));
    CHECK(is_totally_monotone(w1));
    CHECK(is_monotone(w1));
  }

  // Totally monotone nonnegative inputs are their own positive part.
  Rng rng2(35);
  const Game tm = rand_tm0(rng2, 3);
  const auto [t1, t2] = jordan_decompose_tm(tm);
  CHECK(t1 == tm);
  CHECK(t2 == Game::zero(3));
}

TEST_CASE("almost_positive_coeffs") {
  const Game u = Game::unanimity(3, 0b110);
  const MobiusCoeffs lambda = almost_positive_coeffs(u);
  for (Coalition a = 0; a < 8; ++a) {
    CHECK(lambda.coeffs[a] == (a == 0b110 ? 1 : 0));
  }

  // v^B of a zero-monotone game expands as v(B) u_B + (v(N)-v(B)) u_N.
  Rng rng(36);
  const Game zm = rand_zero_monotone(rng, 3);
  const Coalition b = 0b011;
  const Game vb = linear_combine(
      {{zm.value(b), Game::unanimity(3, b)},
       {zm.grand_value() - zm.value(b), Game::unanimity(3, 0b111)}});
  const MobiusCoeffs lam = almost_positive_coeffs(vb);
  CHECK(lam.coeffs[b] == zm.value(b));
  CHECK(lam.coeffs[0b111] == zm.grand_value() - zm.value(b));

  // The expansion reproduces the game.
  std::vector<std::pair<Rat, Game>> terms;
  for (Coalition a : canonical_coalitions(3, 2)) {
    terms.emplace_back(lam.coeffs[a], Game::unanimity(3, a));
  }
  CHECK(linear_combine(terms) == vb);

  const Game not_zn = Game::make(2, {{0b01, Rat(1)}, {0b11, Rat(2)}});
  CHECK_THROWS_AS(almost_positive_coeffs(not_zn), Error);
}

TEST_CASE("implication chain on class-targeted corpora") {
  Rng rng(37);
  const std::vector<Game> rays3 = supermodular0_rays(3);
  for (int trial = 0; trial < 250; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    check_chain(rand_game(rng, n, 10, 5), classify(rand_game(rng, n, 10, 5)));
    const Game zm = rand_zero_monotone(rng, n);
    check_chain(zm, classify(zm));
    const Game tm = rand_tm0(rng, n);
    check_chain(tm, classify(tm));
    if (n == 3) {
      const Game sm = rand_supermodular(rng, 3, rays3);
      const ClassReport r = classify(sm);
      CHECK(r.supermodular.holds);
      check_chain(sm, r);
    }
  }
}

TEST_CASE("balancedness agrees with core vertex enumeration") {
  Rng rng(38);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const Game v = rand_game(rng, n, 10, 5);
    const bool balanced = is_balanced(v).balanced;
    const bool nonempty =
        !enumerate_vertices_unchecked(core_h(v)).vertices.empty();
    CHECK(balanced == nonempty);
  }
}
