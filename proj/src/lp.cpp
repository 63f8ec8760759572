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

#include <cassert>
#include <cstddef>

#include "coalgame/errors.hpp"
#include "coalgame/linalg.hpp"
#include "coalgame/polyhedra.hpp"

namespace coalgame {
namespace detail {

namespace {

// Dense two-phase simplex with Bland's rule. Free variables are split
// into differences of nonnegative pairs; every row gets an artificial
// variable, kept in the tableau afterwards so the simplex multipliers
// can be read off its reduced costs.
class Simplex {
 public:
  explicit Simplex(const LPProblem& problem) : problem_(problem) { build(); }

  LPResult run() {
    // Phase 1: minimize the artificial sum.
    Vec cost(num_cols_, Rat(0));
    for (std::size_t i = 0; i < num_rows_; ++i) cost[art_base_ + i] = 1;
    set_objective(cost);
    allow_artificials_ = false;
    optimize();
    if (objective_value() > 0) return infeasible_result();
    repair_basis();

    // Phase 2: the real objective, artificials pinned out.
    Vec cost2(num_cols_, Rat(0));
    for (std::size_t j = 0; j < var_cols_.size(); ++j) {
      cost2[j] = var_cols_[j].sign * problem_.c[var_cols_[j].var];
    }
    set_objective(cost2);
    const std::optional<std::size_t> bad = optimize();
    if (bad.has_value()) return unbounded_result(*bad);
    return optimal_result();
  }

 private:
  struct VarCol {
    int var;   // coordinate index in the original space
    int sign;  // +1 for the positive part, -1 for the negative part
  };

  bool var_nonneg(int j) const {
    return !problem_.nonneg.empty() && problem_.nonneg[j];
  }

  void build() {
    const std::size_t m_ineq = problem_.A.size();
    const std::size_t m_eq = problem_.E.size();
    num_rows_ = m_ineq + m_eq;

    for (int j = 0; j < problem_.dim; ++j) {
      var_cols_.push_back({j, +1});
      if (!var_nonneg(j)) var_cols_.push_back({j, -1});
    }
    slack_base_ = var_cols_.size();
    art_base_ = slack_base_ + m_ineq;
    num_cols_ = art_base_ + num_rows_;

    tableau_.assign(num_rows_, Vec(num_cols_ + 1, Rat(0)));
    flip_.assign(num_rows_, 1);
    basis_.assign(num_rows_, 0);
    row_live_.assign(num_rows_, true);

    for (std::size_t i = 0; i < num_rows_; ++i) {
      const bool is_ineq = i < m_ineq;
      const Vec& normal = is_ineq ? problem_.A[i] : problem_.E[i - m_ineq];
      const Rat& rhs = is_ineq ? problem_.b[i] : problem_.f[i - m_ineq];
      const int flip = (rhs < 0) ? -1 : 1;
      flip_[i] = flip;
      for (std::size_t j = 0; j < var_cols_.size(); ++j) {
        tableau_[i][j] = Rat(flip * var_cols_[j].sign) * normal[var_cols_[j].var];
      }
      if (is_ineq) tableau_[i][slack_base_ + i] = Rat(-flip);
      tableau_[i][art_base_ + i] = 1;
      tableau_[i][num_cols_] = Rat(flip) * rhs;
      basis_[i] = static_cast<int>(art_base_ + i);
    }
  }

  void set_objective(const Vec& cost) {
    cost_ = cost;
    obj_.assign(num_cols_ + 1, Rat(0));
    for (std::size_t j = 0; j <= num_cols_; ++j) {
      Rat reduced = (j < num_cols_) ? cost[j] : Rat(0);
      for (std::size_t i = 0; i < num_rows_; ++i) {
        if (!row_live_[i]) continue;
        if (cost[basis_[i]] != 0) reduced -= cost[basis_[i]] * tableau_[i][j];
      }
      obj_[j] = reduced;
    }
  }

  Rat objective_value() const { return -obj_[num_cols_]; }

  void pivot(std::size_t row, std::size_t col) {
    const Rat lead = tableau_[row][col];
    for (std::size_t j = 0; j <= num_cols_; ++j) tableau_[row][j] /= lead;
    for (std::size_t i = 0; i < num_rows_; ++i) {
      if (i == row || !row_live_[i] || tableau_[i][col] == 0) continue;
      const Rat factor = tableau_[i][col];
      for (std::size_t j = 0; j <= num_cols_; ++j) {
        tableau_[i][j] -= factor * tableau_[row][j];
      }
    }
    if (obj_[col] != 0) {
      const Rat factor = obj_[col];
      for (std::size_t j = 0; j <= num_cols_; ++j) {
        obj_[j] -= factor * tableau_[row][j];
      }
    }
    basis_[row] = static_cast<int>(col);
  }

  // Returns the entering column on unboundedness, nullopt at optimum.
  std::optional<std::size_t> optimize() {
    for (;;) {
      std::size_t entering = num_cols_;
      for (std::size_t j = 0; j < num_cols_; ++j) {
        if (j >= art_base_) break;  // artificials never re-enter
        if (obj_[j] < 0) {
          entering = j;
          break;
        }
      }
      if (entering == num_cols_) return std::nullopt;

      std::size_t leaving = num_rows_;
      Rat best_ratio;
      for (std::size_t i = 0; i < num_rows_; ++i) {
        if (!row_live_[i] || tableau_[i][entering] <= 0) continue;
        const Rat ratio = tableau_[i][num_cols_] / tableau_[i][entering];
        if (leaving == num_rows_ || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (leaving == num_rows_) return entering;
      pivot(leaving, entering);
    }
  }

  // After a zero-cost phase 1, removes artificials from the basis by
  // degenerate pivots; rows with no eligible pivot are redundant and
  // retired from the tableau.
  void repair_basis() {
    for (std::size_t i = 0; i < num_rows_; ++i) {
      if (!row_live_[i] || static_cast<std::size_t>(basis_[i]) < art_base_) {
        continue;
      }
      std::size_t col = art_base_;
      for (std::size_t j = 0; j < art_base_; ++j) {
        if (tableau_[i][j] != 0) {
          col = j;
          break;
        }
      }
      if (col == art_base_) {
        row_live_[i] = false;
      } else {
        pivot(i, col);
      }
    }
  }

  Vec extract_point() const {
    Vec x(problem_.dim, Rat(0));
    for (std::size_t i = 0; i < num_rows_; ++i) {
      if (!row_live_[i]) continue;
      const std::size_t j = basis_[i];
      if (j < var_cols_.size()) {
        x[var_cols_[j].var] += Rat(var_cols_[j].sign) * tableau_[i][num_cols_];
      }
    }
    return x;
  }

  // Simplex multipliers from the artificial columns' reduced costs.
  void fill_duals(Vec& ineq, Vec& eq, bool phase_one) const {
    const std::size_t m_ineq = problem_.A.size();
    ineq.assign(m_ineq, Rat(0));
    eq.assign(problem_.E.size(), Rat(0));
    for (std::size_t i = 0; i < num_rows_; ++i) {
      if (!row_live_[i]) continue;
      Rat y = -obj_[art_base_ + i];
      if (phase_one) y += 1;
      y *= flip_[i];
      if (i < m_ineq) {
        ineq[i] = y;
      } else {
        eq[i - m_ineq] = y;
      }
    }
  }

  LPResult infeasible_result() const {
    LPResult result;
    result.status = LPStatus::Infeasible;
    fill_duals(result.farkas_ineq, result.farkas_eq, /*phase_one=*/true);
    return result;
  }

  LPResult unbounded_result(std::size_t entering) const {
    LPResult result;
    result.status = LPStatus::Unbounded;
    result.point = extract_point();
    Vec direction(problem_.dim, Rat(0));
    if (entering < var_cols_.size()) {
      direction[var_cols_[entering].var] += var_cols_[entering].sign;
    }
    for (std::size_t i = 0; i < num_rows_; ++i) {
      if (!row_live_[i]) continue;
      const std::size_t j = basis_[i];
      if (j < var_cols_.size() && tableau_[i][entering] != 0) {
        direction[var_cols_[j].var] -=
            Rat(var_cols_[j].sign) * tableau_[i][entering];
      }
    }
    result.ray = direction;
    return result;
  }

  LPResult optimal_result() const {
    LPResult result;
    result.status = LPStatus::Optimal;
    result.point = extract_point();
    result.value = linalg::dot(problem_.c, result.point);
    fill_duals(result.ineq_duals, result.eq_duals, /*phase_one=*/false);
    return result;
  }

  const LPProblem& problem_;
  Mat tableau_;
  Vec obj_;
  Vec cost_;
  std::vector<int> basis_;
  std::vector<int> flip_;
  std::vector<bool> row_live_;
  std::vector<VarCol> var_cols_;
  std::size_t slack_base_ = 0;
  std::size_t art_base_ = 0;
  std::size_t num_rows_ = 0;
  std::size_t num_cols_ = 0;
  bool allow_artificials_ = true;
};

}  // namespace

LPResult solve_min(const LPProblem& problem) {
  assert(problem.c.size() == static_cast<std::size_t>(problem.dim));
  Simplex simplex(problem);
  return simplex.run();
}

}  // namespace detail

LPResult lp_solve(const Vec& objective, const HPolytope& poly, Sense sense) {
  if (objective.size() != static_cast<std::size_t>(poly.dim)) {
    fail(Errc::DimensionMismatch,
         "objective has " + std::to_string(objective.size()) +
             " entries for dimension " + std::to_string(poly.dim));
  }
  detail::LPProblem problem;
  problem.dim = poly.dim;
  problem.A = poly.A;
  problem.b = poly.b;
  problem.E = poly.E;
  problem.f = poly.f;
  problem.c = objective;
  if (sense == Sense::Max) {
    for (Rat& entry : problem.c) entry = -entry;
  }
  LPResult result = detail::solve_min(problem);
  if (sense == Sense::Max && result.status != LPStatus::Infeasible) {
    result.value = -result.value;
    for (Rat& y : result.ineq_duals) y = -y;
    for (Rat& y : result.eq_duals) y = -y;
  }
  return result;
}

}  // namespace coalgame
