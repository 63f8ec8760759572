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

#include "coalgame/polyhedra.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <map>
#include <set>

#include "coalgame/errors.hpp"
#include "coalgame/linalg.hpp"

namespace coalgame {

namespace {

bool vec_less(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    const int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

struct VecLess {
  bool operator()(const Vec& a, const Vec& b) const { return vec_less(a, b); }
};

void sort_rows(Mat& rows) { std::sort(rows.begin(), rows.end(), VecLess{}); }

Vec with_entry(Vec v, Rat extra) {
  v.push_back(std::move(extra));
  return v;
}

}  // namespace

void HPolytope::add_inequality(Vec normal, Rat rhs) {
  if (normal.size() != static_cast<std::size_t>(dim)) {
    fail(Errc::DimensionMismatch, "inequality row of wrong dimension");
  }
  Vec joint = linalg::primitive(with_entry(std::move(normal), -rhs));
  if (linalg::is_zero_vec(joint)) return;  // 0 >= 0, trivially true
  Vec a(joint.begin(), joint.end() - 1);
  if (linalg::is_zero_vec(a) && joint.back() > 0) return;  // 0 >= negative
  A.push_back(std::move(a));
  b.push_back(-joint.back());
}

void HPolytope::add_equality(Vec normal, Rat rhs) {
  if (normal.size() != static_cast<std::size_t>(dim)) {
    fail(Errc::DimensionMismatch, "equality row of wrong dimension");
  }
  Vec joint =
      linalg::primitive(with_entry(std::move(normal), -rhs), /*sign=*/true);
  if (linalg::is_zero_vec(joint)) return;  // 0 = 0
  E.emplace_back(joint.begin(), joint.end() - 1);
  f.push_back(-joint.back());
}

bool h_contains(const HPolytope& poly, const Vec& x) {
  for (std::size_t i = 0; i < poly.A.size(); ++i) {
    if (linalg::dot(poly.A[i], x) < poly.b[i]) return false;
  }
  for (std::size_t j = 0; j < poly.E.size(); ++j) {
    if (linalg::dot(poly.E[j], x) != poly.f[j]) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Double description on a pointed cone { x : row . x >= 0 }.

namespace {

using Bits = std::vector<std::uint64_t>;

Bits make_bits(std::size_t n) { return Bits((n + 63) / 64, 0); }

void set_bit(Bits& bits, std::size_t i) { bits[i / 64] |= 1ull << (i % 64); }

bool bits_subset(const Bits& a, const Bits& b) {
  for (std::size_t w = 0; w < a.size(); ++w) {
    if (a[w] & ~b[w]) return false;
  }
  return true;
}

Bits bits_and(const Bits& a, const Bits& b) {
  Bits out(a.size());
  for (std::size_t w = 0; w < a.size(); ++w) out[w] = a[w] & b[w];
  return out;
}

struct DDRay {
  Vec dir;
  Bits tight;
};

// Incremental double description. `rows` must describe a pointed cone
// (rank == dim); returns the extreme rays as primitive vectors.
Mat dd_rays(const Mat& rows, int dim) {
  if (dim == 0 || rows.empty()) return {};
  const std::vector<int> basis_rows = linalg::independent_rows(rows);
  if (static_cast<int>(basis_rows.size()) != dim) {
    fail(Errc::NotPointed, "cone has nonzero lineality space");
  }

  // Process the chosen independent rows first; they form the initial
  // simplex cone whose rays are the columns of the inverse matrix.
  std::vector<int> order = basis_rows;
  {
    std::set<int> used(basis_rows.begin(), basis_rows.end());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (!used.count(static_cast<int>(i))) order.push_back(static_cast<int>(i));
    }
  }

  Mat bmat;
  for (int r : basis_rows) bmat.push_back(rows[r]);
  std::vector<DDRay> rays;
  for (int j = 0; j < dim; ++j) {
    Vec unit(dim, Rat(0));
    unit[j] = 1;
    auto col = linalg::solve_square(bmat, unit);
    assert(col.has_value());
    rays.push_back({linalg::primitive(*col), {}});
  }

  const auto recompute_tight = [&](DDRay& ray, std::size_t processed) {
    ray.tight = make_bits(order.size());
    for (std::size_t k = 0; k < processed; ++k) {
      if (linalg::dot(rows[order[k]], ray.dir) == 0) set_bit(ray.tight, k);
    }
  };
  for (DDRay& ray : rays) recompute_tight(ray, dim);

  for (std::size_t k = dim; k < order.size(); ++k) {
    const Vec& row = rows[order[k]];
    std::vector<int> plus, zero, minus;
    Vec sign_value(rays.size());
    for (std::size_t r = 0; r < rays.size(); ++r) {
      sign_value[r] = linalg::dot(row, rays[r].dir);
      const int s = sgn(sign_value[r]);
      if (s > 0) plus.push_back(static_cast<int>(r));
      else if (s < 0) minus.push_back(static_cast<int>(r));
      else zero.push_back(static_cast<int>(r));
    }
    if (minus.empty()) {
      for (std::size_t r = 0; r < rays.size(); ++r) {
        if (sign_value[r] == 0) set_bit(rays[r].tight, k);
      }
      continue;
    }

    std::vector<DDRay> next;
    std::set<Vec, VecLess> seen;
    for (int r : plus) {
      next.push_back(rays[r]);
      seen.insert(rays[r].dir);
    }
    for (int r : zero) {
      DDRay ray = rays[r];
      set_bit(ray.tight, k);
      if (seen.insert(ray.dir).second) next.push_back(std::move(ray));
    }
    for (int p : plus) {
      for (int m : minus) {
        const Bits common = bits_and(rays[p].tight, rays[m].tight);
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size(); ++r) {
          if (static_cast<int>(r) == p || static_cast<int>(r) == m) continue;
          if (bits_subset(common, rays[r].tight)) {
            adjacent = false;
            break;
          }
        }
        if (!adjacent) continue;
        Vec combo(dim);
        for (int j = 0; j < dim; ++j) {
          combo[j] =
              sign_value[p] * rays[m].dir[j] - sign_value[m] * rays[p].dir[j];
        }
        DDRay fresh{linalg::primitive(combo), {}};
        if (!seen.insert(fresh.dir).second) continue;
        recompute_tight(fresh, k + 1);
        next.push_back(std::move(fresh));
      }
    }
    rays = std::move(next);
  }

  Mat out;
  for (DDRay& ray : rays) out.push_back(std::move(ray.dir));
  sort_rows(out);
  return out;
}

Mat homogeneous_rows(const HPolytope& poly) {
  Mat rows;
  rows.reserve(poly.A.size() + 2 * poly.E.size() + 1);
  for (std::size_t i = 0; i < poly.A.size(); ++i) {
    rows.push_back(with_entry(poly.A[i], -poly.b[i]));
  }
  for (std::size_t j = 0; j < poly.E.size(); ++j) {
    Vec pos = with_entry(poly.E[j], -poly.f[j]);
    Vec neg(pos.size());
    for (std::size_t c = 0; c < pos.size(); ++c) neg[c] = -pos[c];
    rows.push_back(std::move(pos));
    rows.push_back(std::move(neg));
  }
  Vec t_axis(poly.dim + 1, Rat(0));
  t_axis[poly.dim] = 1;
  rows.push_back(std::move(t_axis));
  return rows;
}

}  // namespace

VPolytope enumerate_vertices_unchecked(const HPolytope& poly) {
  const Vec zero_obj(poly.dim, Rat(0));
  const LPResult feas = lp_solve(zero_obj, poly, Sense::Min);
  if (feas.status == LPStatus::Infeasible) return VPolytope{poly.dim, {}};
  for (int i = 0; i < poly.dim; ++i) {
    Vec axis(poly.dim, Rat(0));
    axis[i] = 1;
    if (lp_solve(axis, poly, Sense::Max).status == LPStatus::Unbounded ||
        lp_solve(axis, poly, Sense::Min).status == LPStatus::Unbounded) {
      fail(Errc::Unbounded,
           "polytope unbounded in coordinate " + std::to_string(i + 1));
    }
  }
  const Mat rays = dd_rays(homogeneous_rows(poly), poly.dim + 1);
  Mat points;
  for (const Vec& ray : rays) {
    const Rat& t = ray[poly.dim];
    assert(t > 0);
    Vec x(poly.dim);
    for (int j = 0; j < poly.dim; ++j) x[j] = ray[j] / t;
    points.push_back(std::move(x));
  }
  sort_rows(points);
  return VPolytope{poly.dim, std::move(points)};
}

VPolytope vertices(const HPolytope& poly) {
  if (poly.dim > 8) {
    fail(Errc::SizeLimit, "vertex enumeration limited to dimension 8");
  }
  if (poly.A.size() > 64) {
    fail(Errc::SizeLimit, "vertex enumeration limited to 64 inequalities");
  }
  return enumerate_vertices_unchecked(poly);
}

// ---------------------------------------------------------------------------
// Convex hull of explicit points, with a certified vertex set.

HPolytope facet_form(const VPolytope& poly) {
  assert(!poly.vertices.empty());
  const int d = poly.dim;
  Mat lifted;
  for (const Vec& p : poly.vertices) lifted.push_back(with_entry(p, Rat(1)));

  HPolytope out(d);
  for (const Vec& y : linalg::kernel_basis(lifted, d + 1)) {
    out.add_equality(Vec(y.begin(), y.end() - 1), -y.back());
  }
  const Mat q = linalg::row_space_basis(lifted);
  Mat cone_rows;
  for (const Vec& row : lifted) {
    Vec z(q.size());
    for (std::size_t t = 0; t < q.size(); ++t) z[t] = linalg::dot(row, q[t]);
    cone_rows.push_back(std::move(z));
  }
  for (const Vec& z : dd_rays(cone_rows, static_cast<int>(q.size()))) {
    Vec y(d + 1, Rat(0));
    for (std::size_t t = 0; t < q.size(); ++t) {
      for (int c = 0; c <= d; ++c) y[c] += z[t] * q[t][c];
    }
    Vec a(y.begin(), y.end() - 1);
    if (linalg::is_zero_vec(a)) continue;  // the far-face ray
    out.add_inequality(std::move(a), -y.back());
  }
  return out;
}

namespace {

// Index of the point maximizing direction . p, lexicographically
// largest among ties; such a point is always a hull vertex.
std::size_t directional_vertex(const Mat& points, const Vec& direction) {
  std::size_t best = 0;
  Rat best_value = linalg::dot(direction, points[0]);
  for (std::size_t i = 1; i < points.size(); ++i) {
    const Rat value = linalg::dot(direction, points[i]);
    const int c = cmp(value, best_value);
    if (c > 0 || (c == 0 && vec_less(points[best], points[i]))) {
      best = i;
      best_value = value;
    }
  }
  return best;
}

}  // namespace

VPolytope hull_of_points(int dim, const Mat& raw_points) {
  Mat points = raw_points;
  sort_rows(points);
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() <= 1) return VPolytope{dim, std::move(points)};

  std::set<std::size_t> chosen;
  chosen.insert(points.size() - 1);  // lexicographic maximum
  for (int k = 0; k < dim; ++k) {
    Vec axis(dim, Rat(0));
    axis[k] = 1;
    chosen.insert(directional_vertex(points, axis));
    axis[k] = -1;
    chosen.insert(directional_vertex(points, axis));
  }

  for (;;) {
    Mat hull_points;
    for (std::size_t i : chosen) hull_points.push_back(points[i]);
    sort_rows(hull_points);
    const HPolytope h = facet_form(VPolytope{dim, hull_points});

    std::set<Vec, VecLess> expand;
    for (const Vec& p : points) {
      for (std::size_t r = 0; r < h.A.size(); ++r) {
        if (linalg::dot(h.A[r], p) < h.b[r]) {
          Vec neg(h.A[r].size());
          for (std::size_t c = 0; c < neg.size(); ++c) neg[c] = -h.A[r][c];
          expand.insert(std::move(neg));
        }
      }
      for (std::size_t r = 0; r < h.E.size(); ++r) {
        const int side = cmp(linalg::dot(h.E[r], p), h.f[r]);
        if (side > 0) expand.insert(h.E[r]);
        if (side < 0) {
          Vec neg(h.E[r].size());
          for (std::size_t c = 0; c < neg.size(); ++c) neg[c] = -h.E[r][c];
          expand.insert(std::move(neg));
        }
      }
    }
    if (expand.empty()) {
      return VPolytope{dim, std::move(hull_points)};
    }
    const std::size_t before = chosen.size();
    for (const Vec& direction : expand) {
      chosen.insert(directional_vertex(points, direction));
    }
    assert(chosen.size() > before);
  }
}

// ---------------------------------------------------------------------------
// Polytope operations.

HPolytope intersect(const HPolytope& p, const HPolytope& q) {
  if (p.dim != q.dim) {
    fail(Errc::DimensionMismatch, "intersecting polytopes of different dims");
  }
  HPolytope merged(p.dim);
  std::set<Vec, VecLess> seen_ineq, seen_eq;
  const auto add_all = [&](const HPolytope& src) {
    for (std::size_t i = 0; i < src.A.size(); ++i) {
      if (seen_ineq.insert(with_entry(src.A[i], src.b[i])).second) {
        merged.A.push_back(src.A[i]);
        merged.b.push_back(src.b[i]);
      }
    }
    for (std::size_t j = 0; j < src.E.size(); ++j) {
      if (seen_eq.insert(with_entry(src.E[j], src.f[j])).second) {
        merged.E.push_back(src.E[j]);
        merged.f.push_back(src.f[j]);
      }
    }
  };
  add_all(p);
  add_all(q);

  // Drop rows implied by the rest, testing in listed order.
  HPolytope pruned(p.dim);
  pruned.E = merged.E;
  pruned.f = merged.f;
  std::vector<bool> keep(merged.A.size(), true);
  for (std::size_t i = 0; i < merged.A.size(); ++i) {
    HPolytope rest(p.dim);
    rest.E = merged.E;
    rest.f = merged.f;
    for (std::size_t r = 0; r < merged.A.size(); ++r) {
      if (r == i || !keep[r]) continue;
      rest.A.push_back(merged.A[r]);
      rest.b.push_back(merged.b[r]);
    }
    const LPResult probe = lp_solve(merged.A[i], rest, Sense::Min);
    const bool redundant =
        probe.status == LPStatus::Infeasible ||
        (probe.status == LPStatus::Optimal && probe.value >= merged.b[i]);
    keep[i] = !redundant;
  }
  for (std::size_t i = 0; i < merged.A.size(); ++i) {
    if (keep[i]) {
      pruned.A.push_back(merged.A[i]);
      pruned.b.push_back(merged.b[i]);
    }
  }
  std::vector<bool> keep_eq(pruned.E.size(), true);
  for (std::size_t j = 0; j < pruned.E.size(); ++j) {
    HPolytope rest(p.dim);
    rest.A = pruned.A;
    rest.b = pruned.b;
    for (std::size_t r = 0; r < pruned.E.size(); ++r) {
      if (r == j || !keep_eq[r]) continue;
      rest.E.push_back(pruned.E[r]);
      rest.f.push_back(pruned.f[r]);
    }
    const LPResult lo = lp_solve(pruned.E[j], rest, Sense::Min);
    const LPResult hi = lp_solve(pruned.E[j], rest, Sense::Max);
    keep_eq[j] = !(lo.status == LPStatus::Optimal &&
                   hi.status == LPStatus::Optimal && lo.value == pruned.f[j] &&
                   hi.value == pruned.f[j]);
  }
  HPolytope out(p.dim);
  out.A = pruned.A;
  out.b = pruned.b;
  for (std::size_t j = 0; j < pruned.E.size(); ++j) {
    if (keep_eq[j]) {
      out.E.push_back(pruned.E[j]);
      out.f.push_back(pruned.f[j]);
    }
  }
  return out;
}

VPolytope minkowski_sum(const VPolytope& p, const VPolytope& q) {
  if (p.dim != q.dim) {
    fail(Errc::DimensionMismatch, "summing polytopes of different dims");
  }
  if (p.empty() || q.empty()) return VPolytope{p.dim, {}};
  Mat sums;
  sums.reserve(p.vertices.size() * q.vertices.size());
  for (const Vec& u : p.vertices) {
    for (const Vec& v : q.vertices) {
      Vec s(p.dim);
      for (int c = 0; c < p.dim; ++c) s[c] = u[c] + v[c];
      sums.push_back(std::move(s));
    }
  }
  return hull_of_points(p.dim, sums);
}

VPolytope scale_polytope(const Rat& c, const VPolytope& p) {
  Mat scaled;
  scaled.reserve(p.vertices.size());
  for (const Vec& v : p.vertices) {
    Vec s(p.dim);
    for (int k = 0; k < p.dim; ++k) s[k] = c * v[k];
    scaled.push_back(std::move(s));
  }
  sort_rows(scaled);
  scaled.erase(std::unique(scaled.begin(), scaled.end()), scaled.end());
  return VPolytope{p.dim, std::move(scaled)};
}

namespace {

VPolytope canonical_v(const VPolytope& p) {
  Mat verts = p.vertices;
  sort_rows(verts);
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  return VPolytope{p.dim, std::move(verts)};
}

}  // namespace

bool polytope_equal(const HPolytope& p, const HPolytope& q) {
  if (p.dim != q.dim) fail(Errc::DimensionMismatch, "dimension mismatch");
  return enumerate_vertices_unchecked(p) == enumerate_vertices_unchecked(q);
}

bool polytope_equal(const VPolytope& p, const VPolytope& q) {
  if (p.dim != q.dim) fail(Errc::DimensionMismatch, "dimension mismatch");
  return canonical_v(p) == canonical_v(q);
}

bool polytope_equal(const HPolytope& p, const VPolytope& q) {
  if (p.dim != q.dim) fail(Errc::DimensionMismatch, "dimension mismatch");
  return enumerate_vertices_unchecked(p) == canonical_v(q);
}

bool polytope_equal(const VPolytope& p, const HPolytope& q) {
  return polytope_equal(q, p);
}

// ---------------------------------------------------------------------------
// Cones and fans.

PointedCone extreme_rays(const HPolytope& cone) {
  for (const Rat& rhs : cone.b) {
    if (rhs != 0) fail(Errc::InvariantViolation, "cone rows must have rhs 0");
  }
  for (const Rat& rhs : cone.f) {
    if (rhs != 0) fail(Errc::InvariantViolation, "cone rows must have rhs 0");
  }
  if (cone.dim > 12) fail(Errc::SizeLimit, "cone dimension above 12");
  if (cone.rows() > 512) fail(Errc::SizeLimit, "too many cone rows");

  Mat rows = cone.A;
  for (const Vec& e : cone.E) {
    rows.push_back(e);
    Vec neg(e.size());
    for (std::size_t c = 0; c < e.size(); ++c) neg[c] = -e[c];
    rows.push_back(std::move(neg));
  }
  if (!linalg::kernel_basis(rows, cone.dim).empty()) {
    fail(Errc::NotPointed, "cone has a nonzero lineality space");
  }
  Mat rays = dd_rays(rows, cone.dim);
  return PointedCone{cone.dim, std::move(rays)};
}

namespace {

bool cone_is_pointed(const PointedCone& cone) {
  if (cone.generators.empty()) return true;
  // Pointed iff 0 is not a nonzero conic combination of generators,
  // i.e. the convex hull of the generators misses the origin.
  detail::LPProblem problem;
  const std::size_t k = cone.generators.size();
  problem.dim = static_cast<int>(k);
  problem.c.assign(k, Rat(0));
  problem.nonneg.assign(k, true);
  for (int coord = 0; coord < cone.dim; ++coord) {
    Vec row(k);
    for (std::size_t j = 0; j < k; ++j) row[j] = cone.generators[j][coord];
    problem.E.push_back(std::move(row));
    problem.f.push_back(Rat(0));
  }
  problem.E.push_back(Vec(k, Rat(1)));
  problem.f.push_back(Rat(1));
  return detail::solve_min(problem).status == LPStatus::Infeasible;
}

}  // namespace

SimplicialFan triangulate_cone(const PointedCone& cone) {
  if (!cone_is_pointed(cone)) {
    fail(Errc::NotPointed, "generators span a non-pointed cone");
  }
  SimplicialFan fan;
  fan.cone = cone;

  Mat span_basis;  // generators spanning the placed linear span
  std::vector<std::vector<int>> cells;

  for (std::size_t idx = 0; idx < cone.generators.size(); ++idx) {
    const Vec& g = cone.generators[idx];
    if (linalg::is_zero_vec(g)) continue;
    if (span_basis.empty()) {
      span_basis.push_back(g);
      cells.push_back({static_cast<int>(idx)});
      continue;
    }
    Mat probe = span_basis;
    probe.push_back(g);
    const bool in_span =
        linalg::rank(probe) == static_cast<int>(span_basis.size());
    if (!in_span) {
      for (auto& cell : cells) cell.push_back(static_cast<int>(idx));
      span_basis.push_back(g);
      continue;
    }

    const std::size_t k = span_basis.size();
    Mat span_cols;  // span basis as columns for coordinate solves
    for (std::size_t t = 0; t < k; ++t) span_cols.push_back(span_basis[t]);
    const auto coords = [&](const Vec& v) {
      auto c = linalg::solve_columns(span_cols, v);
      assert(c.has_value());
      return *c;
    };
    const Vec g_coords = coords(g);
    if (k == 1) {
      // In a pointed cone a collinear generator is a positive multiple.
      continue;
    }

    // Boundary facets: (k-1)-subsets appearing in exactly one cell.
    std::map<std::vector<int>, std::vector<std::pair<std::size_t, int>>>
        facet_owners;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      for (std::size_t drop = 0; drop < cells[c].size(); ++drop) {
        std::vector<int> facet = cells[c];
        const int opposite = facet[drop];
        facet.erase(facet.begin() + drop);
        facet_owners[facet].push_back({c, opposite});
      }
    }
    std::vector<std::vector<int>> grown;
    for (const auto& [facet, owners] : facet_owners) {
      if (owners.size() != 1) continue;
      Mat facet_coords;
      for (int member : facet) {
        facet_coords.push_back(coords(cone.generators[member]));
      }
      const Mat normal = linalg::kernel_basis(facet_coords, static_cast<int>(k));
      assert(normal.size() == 1);
      const int inside = sgn(
          linalg::dot(normal[0], coords(cone.generators[owners[0].second])));
      const int side = sgn(linalg::dot(normal[0], g_coords));
      if (side != 0 && side == -inside) {
        std::vector<int> cell = facet;
        cell.push_back(static_cast<int>(idx));
        std::sort(cell.begin(), cell.end());
        grown.push_back(std::move(cell));
      }
    }
    for (auto& cell : grown) cells.push_back(std::move(cell));
  }

  for (auto& cell : cells) std::sort(cell.begin(), cell.end());
  std::sort(cells.begin(), cells.end());
  fan.cells = std::move(cells);
  return fan;
}

ConicCoordinates conic_coordinates(const Vec& x, const SimplicialFan& fan) {
  if (x.size() != static_cast<std::size_t>(fan.cone.dim)) {
    fail(Errc::DimensionMismatch, "point of wrong dimension");
  }
  if (linalg::is_zero_vec(x)) return ConicCoordinates{{}, {}, -1};
  for (std::size_t c = 0; c < fan.cells.size(); ++c) {
    Mat cols;
    for (int member : fan.cells[c]) {
      cols.push_back(fan.cone.generators[member]);
    }
    const auto lambda = linalg::solve_columns(cols, x);
    if (!lambda.has_value()) continue;
    bool nonneg = true;
    for (const Rat& v : *lambda) {
      if (v < 0) {
        nonneg = false;
        break;
      }
    }
    if (!nonneg) continue;
    ConicCoordinates out;
    out.cell = static_cast<int>(c);
    for (std::size_t j = 0; j < lambda->size(); ++j) {
      if ((*lambda)[j] > 0) {
        out.support.push_back(fan.cells[c][j]);
        out.coeffs.push_back((*lambda)[j]);
      }
    }
    return out;
  }
  fail(Errc::OutsideSupport, "point outside the fan's support");
}

}  // namespace coalgame
