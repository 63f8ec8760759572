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

#include "coalgame/solutions.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "coalgame/errors.hpp"
#include "coalgame/linalg.hpp"

namespace coalgame {

namespace {

void require_players(const Game& v, int bound, const char* what) {
  if (v.players() > bound) {
    fail(Errc::PlayerCountOutOfRange,
         std::string(what) + " supported only up to " + std::to_string(bound) +
             " players");
  }
}

Vec indicator_vec(int n, Coalition a) {
  Vec row(n, Rat(0));
  for (int i : coalition_players(a)) row[i] = 1;
  return row;
}

}  // namespace

HPolytope core_h(const Game& v) {
  const int n = v.players();
  HPolytope poly(n);
  poly.add_equality(indicator_vec(n, v.grand()), v.grand_value());
  for (Coalition a : canonical_coalitions(n, 1)) {
    if (a == v.grand()) continue;
    poly.add_inequality(indicator_vec(n, a), v.value(a));
  }
  return poly;
}

HPolytope imputation_set(const Game& v) {
  const int n = v.players();
  HPolytope poly(n);
  poly.add_equality(indicator_vec(n, v.grand()), v.grand_value());
  for (int i = 0; i < n; ++i) {
    poly.add_inequality(indicator_vec(n, singleton(i)),
                        v.value(singleton(i)));
  }
  return poly;
}

Permutation Permutation::identity(int n) {
  Permutation pi{n, std::vector<int>(n)};
  std::iota(pi.image.begin(), pi.image.end(), 0);
  return pi;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  Permutation pi = Permutation::identity(n);
  do {
    out.push_back(pi);
  } while (std::next_permutation(pi.image.begin(), pi.image.end()));
  return out;
}

Allocation marginal_vector(const Game& v, const Permutation& pi) {
  if (pi.n != v.players()) {
    fail(Errc::MixedPlayerCounts, "permutation size does not match game");
  }
  Allocation x = Allocation::zero(v.players());
  Coalition placed = kEmptyCoalition;
  for (int player : pi.image) {
    const Coalition next = placed | singleton(player);
    x.x[player] = v.value(next) - v.value(placed);
    placed = next;
  }
  return x;
}

VPolytope weber(const Game& v) {
  require_players(v, 8, "Weber set");
  Mat points;
  for (const Permutation& pi : all_permutations(v.players())) {
    points.push_back(marginal_vector(v, pi).x);
  }
  return hull_of_points(v.players(), points);
}

bool Selector::valid() const {
  if (choice.size() != (std::size_t{1} << n)) return false;
  for (Coalition a = 1; a < choice.size(); ++a) {
    if (choice[a] < 0 || choice[a] >= n || !has_player(a, choice[a])) {
      return false;
    }
  }
  return true;
}

std::vector<Selector> all_selectors(int n) {
  const std::vector<Coalition> order = canonical_coalitions(n, 1);
  std::vector<std::vector<int>> members;
  for (Coalition a : order) members.push_back(coalition_players(a));

  std::vector<Selector> out;
  std::vector<std::size_t> odo(order.size(), 0);
  for (;;) {
    Selector sel{n, std::vector<int>(std::size_t{1} << n, -1)};
    for (std::size_t k = 0; k < order.size(); ++k) {
      sel.choice[order[k]] = members[k][odo[k]];
    }
    out.push_back(std::move(sel));
    std::size_t pos = 0;
    while (pos < order.size()) {
      if (++odo[pos] < members[pos].size()) break;
      odo[pos] = 0;
      ++pos;
    }
    if (pos == order.size()) break;
  }
  return out;
}

Allocation selector_value(const Game& v, const Selector& a) {
  if (a.n != v.players() || !a.valid()) {
    fail(Errc::InvariantViolation, "selector does not fit the game");
  }
  const MobiusCoeffs m = mobius(v);
  Allocation phi = Allocation::zero(v.players());
  for (Coalition coal = 1; coal < m.coeffs.size(); ++coal) {
    phi.x[a.choice[coal]] += m.coeffs[coal];
  }
  return phi;
}

VPolytope selectope(const Game& v) {
  require_players(v, 4, "selectope");
  const MobiusCoeffs m = mobius(v);
  Mat points;
  for (const Selector& sel : all_selectors(v.players())) {
    Vec phi(v.players(), Rat(0));
    for (Coalition coal = 1; coal < m.coeffs.size(); ++coal) {
      phi[sel.choice[coal]] += m.coeffs[coal];
    }
    points.push_back(std::move(phi));
  }
  return hull_of_points(v.players(), points);
}

ProbabilisticWeights ProbabilisticWeights::shapley(int n) {
  ProbabilisticWeights w;
  w.n = n;
  w.p.assign(n, Vec(std::size_t{1} << n, Rat(0)));
  std::vector<Rat> factorial(n + 1, Rat(1));
  for (int k = 1; k <= n; ++k) factorial[k] = factorial[k - 1] * k;
  for (int i = 0; i < n; ++i) {
    for (Coalition a = 0; a < (1u << n); ++a) {
      if (has_player(a, i)) continue;
      const int s = coalition_size(a);
      w.p[i][a] = factorial[s] * factorial[n - s - 1] / factorial[n];
    }
  }
  return w;
}

void ProbabilisticWeights::validate() const {
  if (static_cast<int>(p.size()) != n) {
    fail(Errc::InvalidWeights, "one table per player required");
  }
  for (int i = 0; i < n; ++i) {
    if (p[i].size() != (std::size_t{1} << n)) {
      fail(Errc::InvalidWeights, "weight table must have 2^n entries");
    }
    Rat total(0);
    for (Coalition a = 0; a < p[i].size(); ++a) {
      if (has_player(a, i)) {
        if (p[i][a] != 0) {
          fail(Errc::InvalidWeights,
               "weight on a coalition containing player " +
                   std::to_string(i + 1));
        }
        continue;
      }
      if (p[i][a] < 0) {
        fail(Errc::InvalidWeights, "negative weight for player " +
                                       std::to_string(i + 1) + " at " +
                                       coalition_label(a));
      }
      total += p[i][a];
    }
    if (total != 1) {
      fail(Errc::InvalidWeights,
           "weights of player " + std::to_string(i + 1) + " sum to " +
               rat_str(total));
    }
  }
}

Allocation probabilistic_value(const Game& v, const ProbabilisticWeights& w) {
  if (w.n != v.players()) {
    fail(Errc::InvalidWeights, "weights sized for a different player count");
  }
  w.validate();
  Allocation psi = Allocation::zero(v.players());
  for (int i = 0; i < v.players(); ++i) {
    const Coalition bit = singleton(i);
    for (Coalition a = 0; a < (1u << v.players()); ++a) {
      if (a & bit) continue;
      if (w.p[i][a] == 0) continue;
      psi.x[i] += w.p[i][a] * (v.value(a | bit) - v.value(a));
    }
  }
  return psi;
}

Allocation shapley(const Game& v) {
  require_players(v, kMaxPlayers, "Shapley value");
  return probabilistic_value(v, ProbabilisticWeights::shapley(v.players()));
}

ExcessProfile excess_profile(const Game& v, const Allocation& x) {
  if (x.n != v.players()) {
    fail(Errc::MixedPlayerCounts, "allocation size does not match game");
  }
  Vec excesses;
  excesses.reserve(v.table_size());
  for (Coalition a = 0; a < v.table_size(); ++a) {
    excesses.push_back(v.value(a) - x.of(a));
  }
  std::sort(excesses.begin(), excesses.end(),
            [](const Rat& lhs, const Rat& rhs) { return lhs > rhs; });
  return ExcessProfile{std::move(excesses)};
}

bool lex_less(const ExcessProfile& a, const ExcessProfile& b) {
  assert(a.sorted.size() == b.sorted.size());
  for (std::size_t i = 0; i < a.sorted.size(); ++i) {
    const int c = cmp(a.sorted[i], b.sorted[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

bool lex_leq(const ExcessProfile& a, const ExcessProfile& b) {
  return !lex_less(b, a);
}

namespace {

// Minimizes the maximum excess over the given coalitions subject to
// x in P, via the lifted LP over (x, t).
struct MinMaxResult {
  Rat level;
  Vec point;
};

MinMaxResult min_max_excess(const Game& v, const HPolytope& P,
                            const std::vector<Coalition>& active) {
  const int n = v.players();
  const auto lift = [](Vec row) {
    row.push_back(Rat(0));
    return row;
  };
  HPolytope lifted(n + 1);
  for (std::size_t r = 0; r < P.A.size(); ++r) {
    lifted.add_inequality(lift(P.A[r]), P.b[r]);
  }
  for (std::size_t r = 0; r < P.E.size(); ++r) {
    lifted.add_equality(lift(P.E[r]), P.f[r]);
  }
  for (Coalition a : active) {
    Vec row = indicator_vec(n, a);
    row.push_back(Rat(1));  // x(A) + t >= v(A)
    lifted.add_inequality(std::move(row), v.value(a));
  }
  Vec objective(n + 1, Rat(0));
  objective[n] = 1;
  const LPResult res = lp_solve(objective, lifted, Sense::Min);
  assert(res.status == LPStatus::Optimal);
  Vec x(res.point.begin(), res.point.begin() + n);
  return {res.value, std::move(x)};
}

}  // namespace

Allocation nucleolus(const Game& v, const HPolytope& K) {
  require_players(v, 6, "nucleolus");
  const int n = v.players();
  if (K.dim != n) {
    fail(Errc::DimensionMismatch, "K lives in the wrong dimension");
  }
  const Vec zero_obj(n, Rat(0));
  if (lp_solve(zero_obj, K, Sense::Min).status == LPStatus::Infeasible) {
    fail(Errc::EmptyK, "K is empty");
  }
  for (int i = 0; i < n; ++i) {
    Vec axis(n, Rat(0));
    axis[i] = 1;
    if (lp_solve(axis, K, Sense::Max).status == LPStatus::Unbounded ||
        lp_solve(axis, K, Sense::Min).status == LPStatus::Unbounded) {
      fail(Errc::UnboundedK, "K unbounded in coordinate " + std::to_string(i));
    }
  }

  HPolytope face = K;
  std::vector<bool> fixed(v.table_size(), false);
  std::size_t remaining = v.table_size();
  while (remaining > 0) {
    std::vector<Coalition> active;
    for (Coalition a = 0; a < v.table_size(); ++a) {
      if (!fixed[a]) active.push_back(a);
    }
    const MinMaxResult round = min_max_excess(v, face, active);
    for (Coalition a : active) {
      face.add_inequality(indicator_vec(n, a), v.value(a) - round.level);
    }
    // A coalition is settled once its excess is constant on the face.
    const std::size_t before = remaining;
    for (Coalition a : active) {
      const Vec indicator = indicator_vec(n, a);
      const LPResult lo = lp_solve(indicator, face, Sense::Min);
      const LPResult hi = lp_solve(indicator, face, Sense::Max);
      assert(lo.status == LPStatus::Optimal && hi.status == LPStatus::Optimal);
      if (lo.value == hi.value) {
        fixed[a] = true;
        --remaining;
      }
    }
    assert(remaining < before);
  }
  const LPResult final_point = lp_solve(zero_obj, face, Sense::Min);
  assert(final_point.status == LPStatus::Optimal);
  return Allocation{n, final_point.point};
}

}  // namespace coalgame
