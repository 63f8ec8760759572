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

// Test-only oracles, independent of the implementation paths they
// check: direct definitional evaluations and certificate verifiers.

#ifndef COALGAME_TESTS_ORACLES_HPP
#define COALGAME_TESTS_ORACLES_HPP

#include "coalgame/game.hpp"
#include "coalgame/linalg.hpp"
#include "coalgame/polyhedra.hpp"
#include "coalgame/solutions.hpp"

namespace coalgame::testing {

// Mobius coefficient by the defining alternating sum.
inline Rat mobius_oracle(const Game& v, Coalition a) {
  Rat sum(0);
  for (Coalition b = a;; b = (b - 1) & a) {
    const int parity = coalition_size(a ^ b) % 2;
    if (parity == 0) {
      sum += v.value(b);
    } else {
      sum -= v.value(b);
    }
    if (b == 0) break;
  }
  return sum;
}

// Zeta transform by direct subset summation.
inline Rat zeta_oracle(const MobiusCoeffs& m, Coalition a) {
  Rat sum(0);
  for (Coalition b = a;; b = (b - 1) & a) {
    sum += m.coeffs[b];
    if (b == 0) break;
  }
  return sum;
}

// Definitional supermodularity over all coalition pairs.
inline bool supermodular_oracle(const Game& v) {
  const Coalition limit = v.grand();
  for (Coalition a = 0; a <= limit; ++a) {
    for (Coalition b = 0; b <= limit; ++b) {
      if (v.value(a | b) + v.value(a & b) < v.value(a) + v.value(b)) {
        return false;
      }
      if (b == limit) break;
    }
    if (a == limit) break;
  }
  return true;
}

inline bool weakly_superadditive_oracle(const Game& v) {
  const Coalition limit = v.grand();
  for (Coalition a = 0; a <= limit; ++a) {
    for (int i = 0; i < v.players(); ++i) {
      if (!has_player(a, i) &&
          v.value(a | singleton(i)) < v.value(a) + v.value(singleton(i))) {
        return false;
      }
    }
    if (a == limit) break;
  }
  return true;
}

// --- LP certificate verifiers (substitution only) ---

inline bool lp_point_feasible(const HPolytope& p, const Vec& x) {
  for (std::size_t i = 0; i < p.A.size(); ++i) {
    if (linalg::dot(p.A[i], x) < p.b[i]) return false;
  }
  for (std::size_t j = 0; j < p.E.size(); ++j) {
    if (linalg::dot(p.E[j], x) != p.f[j]) return false;
  }
  return true;
}

// Optimality certificate for the stated sense: primal feasibility,
// dual sign, gradient identity, strong duality, complementary slack.
inline bool lp_optimal_certificate(const Vec& objective, const HPolytope& p,
                                   Sense sense, const LPResult& r) {
  if (r.status != LPStatus::Optimal) return false;
  if (!lp_point_feasible(p, r.point)) return false;
  if (linalg::dot(objective, r.point) != r.value) return false;
  Rat dual_value(0);
  Vec gradient(p.dim, Rat(0));
  for (std::size_t i = 0; i < p.A.size(); ++i) {
    const Rat& y = r.ineq_duals[i];
    if (sense == Sense::Min && y < 0) return false;
    if (sense == Sense::Max && y > 0) return false;
    if (y != 0 && linalg::dot(p.A[i], r.point) != p.b[i]) return false;
    dual_value += y * p.b[i];
    for (int c = 0; c < p.dim; ++c) gradient[c] += y * p.A[i][c];
  }
  for (std::size_t j = 0; j < p.E.size(); ++j) {
    dual_value += r.eq_duals[j] * p.f[j];
    for (int c = 0; c < p.dim; ++c) gradient[c] += r.eq_duals[j] * p.E[j][c];
  }
  if (dual_value != r.value) return false;
  for (int c = 0; c < p.dim; ++c) {
    if (gradient[c] != objective[c]) return false;
  }
  return true;
}

inline bool lp_farkas_certificate(const HPolytope& p, const LPResult& r) {
  if (r.status != LPStatus::Infeasible) return false;
  Vec combo(p.dim, Rat(0));
  Rat rhs(0);
  for (std::size_t i = 0; i < p.A.size(); ++i) {
    if (r.farkas_ineq[i] < 0) return false;
    rhs += r.farkas_ineq[i] * p.b[i];
    for (int c = 0; c < p.dim; ++c) combo[c] += r.farkas_ineq[i] * p.A[i][c];
  }
  for (std::size_t j = 0; j < p.E.size(); ++j) {
    rhs += r.farkas_eq[j] * p.f[j];
    for (int c = 0; c < p.dim; ++c) combo[c] += r.farkas_eq[j] * p.E[j][c];
  }
  return linalg::is_zero_vec(combo) && rhs > 0;
}

inline bool lp_ray_certificate(const Vec& objective, const HPolytope& p,
                               Sense sense, const LPResult& r) {
  if (r.status != LPStatus::Unbounded) return false;
  if (!lp_point_feasible(p, r.point)) return false;
  for (std::size_t i = 0; i < p.A.size(); ++i) {
    if (linalg::dot(p.A[i], r.ray) < 0) return false;
  }
  for (std::size_t j = 0; j < p.E.size(); ++j) {
    if (linalg::dot(p.E[j], r.ray) != 0) return false;
  }
  const Rat slope = linalg::dot(objective, r.ray);
  return sense == Sense::Min ? slope < 0 : slope > 0;
}

// Membership of x in conv(vertices) by LP over the weights.
inline bool in_convex_hull(const Vec& x, const VPolytope& p) {
  if (p.vertices.empty()) return false;
  detail::LPProblem problem;
  const std::size_t k = p.vertices.size();
  problem.dim = static_cast<int>(k);
  problem.c.assign(k, Rat(0));
  problem.nonneg.assign(k, true);
  for (int coord = 0; coord < p.dim; ++coord) {
    Vec row(k);
    for (std::size_t j = 0; j < k; ++j) row[j] = p.vertices[j][coord];
    problem.E.push_back(std::move(row));
    problem.f.push_back(x[coord]);
  }
  problem.E.push_back(Vec(k, Rat(1)));
  problem.f.push_back(Rat(1));
  return detail::solve_min(problem).status == LPStatus::Optimal;
}

// Extremality of a cone ray: the rows tight at the ray must have
// rank dim-1 and every row must hold.
inline bool extreme_ray_oracle(const HPolytope& cone, const Vec& ray) {
  Mat tight;
  for (const Vec& row : cone.A) {
    const Rat s = linalg::dot(row, ray);
    if (s < 0) return false;
    if (s == 0) tight.push_back(row);
  }
  for (const Vec& row : cone.E) {
    if (linalg::dot(row, ray) != 0) return false;
    tight.push_back(row);
  }
  return linalg::rank(tight) == cone.dim - 1;
}

}  // namespace coalgame::testing

#endif  // COALGAME_TESTS_ORACLES_HPP
