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

#ifndef COALGAME_POLYHEDRA_HPP
#define COALGAME_POLYHEDRA_HPP

#include <optional>
#include <vector>

#include "coalgame/rational.hpp"

namespace coalgame {

/// Half-space representation: { x : A x >= b, E x = f }. Rows are kept
/// as primitive integer vectors; equality rows are additionally
/// sign-normalized (first nonzero coefficient positive).
struct HPolytope {
  int dim = 0;
  Mat A;
  Vec b;
  Mat E;
  Vec f;

  explicit HPolytope(int dimension = 0) : dim(dimension) {}

  void add_inequality(Vec normal, Rat rhs);
  void add_equality(Vec normal, Rat rhs);

  std::size_t rows() const { return A.size() + E.size(); }
};

/// Vertex representation: irredundant, lexicographically sorted
/// vertex list. Empty set and single points are first-class values.
struct VPolytope {
  int dim = 0;
  Mat vertices;

  bool empty() const { return vertices.empty(); }
  bool operator==(const VPolytope& other) const {
    return dim == other.dim && vertices == other.vertices;
  }
};

enum class Sense { Min, Max };
enum class LPStatus { Optimal, Infeasible, Unbounded };

/// Exact LP outcome with substitution-checkable certificates.
///
/// Optimal: `point` is feasible, `value` = objective(point), and the
/// duals satisfy value = ineq_duals.b + eq_duals.f together with
/// sum_i ineq_duals[i] A_i + sum_j eq_duals[j] E_j = objective
/// (inequality duals are >= 0 for Min, <= 0 for Max) and
/// complementary slackness.
/// Infeasible: farkas weights combine rows into a contradiction:
/// sum farkas_ineq[i] A_i + sum farkas_eq[j] E_j = 0 with
/// farkas_ineq >= 0 and farkas_ineq.b + farkas_eq.f > 0.
/// Unbounded: `point` is feasible and `ray` is a recession direction
/// strictly improving the objective.
struct LPResult {
  LPStatus status = LPStatus::Infeasible;
  Rat value;
  Vec point;
  Vec ineq_duals;
  Vec eq_duals;
  Vec farkas_ineq;
  Vec farkas_eq;
  Vec ray;
};

/// Exact simplex (Bland's rule, deterministic) over free variables.
LPResult lp_solve(const Vec& objective, const HPolytope& poly, Sense sense);

namespace detail {

/// General computational form used internally: minimize c.x subject to
/// A x >= b, E x = f, and x_j >= 0 for flagged coordinates.
struct LPProblem {
  int dim = 0;
  Mat A;
  Vec b;
  Mat E;
  Vec f;
  Vec c;
  std::vector<bool> nonneg;  // empty means all variables free
};

LPResult solve_min(const LPProblem& problem);

}  // namespace detail

/// Vertex enumeration of a bounded H-polytope (double description on
/// the homogenization). Enforces desk-scale limits; empty input
/// systems yield the empty polytope.
VPolytope vertices(const HPolytope& poly);

/// Same as `vertices` without the size limits (internal workhorse,
/// still exact). Throws Unbounded on unbounded input.
VPolytope enumerate_vertices_unchecked(const HPolytope& poly);

/// Concatenates two constraint systems and removes redundant rows.
HPolytope intersect(const HPolytope& p, const HPolytope& q);

VPolytope minkowski_sum(const VPolytope& p, const VPolytope& q);

VPolytope scale_polytope(const Rat& c, const VPolytope& p);

/// Exact set equality via canonical vertex sets.
bool polytope_equal(const HPolytope& p, const HPolytope& q);
bool polytope_equal(const VPolytope& p, const VPolytope& q);
bool polytope_equal(const HPolytope& p, const VPolytope& q);
bool polytope_equal(const VPolytope& p, const HPolytope& q);

/// Convex hull of an explicit point list: deduplicates, finds the
/// vertex set, and certifies it against every input point.
VPolytope hull_of_points(int dim, const Mat& points);

/// Facet description of a V-polytope: affine-hull equalities plus the
/// facet inequalities, via double description of the polar cone.
HPolytope facet_form(const VPolytope& poly);

/// Membership of a point in an H-polytope by substitution.
bool h_contains(const HPolytope& poly, const Vec& x);

/// A pointed polyhedral cone given by primitive integer generators of
/// its extreme rays.
struct PointedCone {
  int dim = 0;
  Mat generators;
};

/// Extreme rays of the cone { x : A x >= 0, E x = 0 }. All right-hand
/// sides must be zero; the cone must be pointed.
PointedCone extreme_rays(const HPolytope& cone);

/// Simplicial fan subdividing a pointed cone: `cells` lists the
/// maximal simplex cones as index sets into the cone's generator list
/// (faces are implied). Cells are produced by a placing triangulation
/// over the generator order, so every cell uses original generators,
/// the support equals the cone, and cells meet in common faces.
struct SimplicialFan {
  PointedCone cone;
  std::vector<std::vector<int>> cells;
};

SimplicialFan triangulate_cone(const PointedCone& cone);

/// Coordinates of a point in its minimal containing cell: `support`
/// lists generator indices with strictly positive coefficients,
/// `coeffs` the matching coefficients, `cell` the index of a maximal
/// cell containing the point (-1 only for the apex 0).
struct ConicCoordinates {
  std::vector<int> support;
  Vec coeffs;
  int cell = -1;
};

ConicCoordinates conic_coordinates(const Vec& x, const SimplicialFan& fan);

}  // namespace coalgame

#endif  // COALGAME_POLYHEDRA_HPP
