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

#include "coalgame/classes.hpp"

#include <cassert>

#include "coalgame/errors.hpp"
#include "coalgame/linalg.hpp"
#include "coalgame/solutions.hpp"

namespace coalgame {

namespace {

void require_players(const Game& v, int bound, const char* what) {
  if (v.players() > bound) {
    fail(Errc::PlayerCountOutOfRange,
         std::string(what) + " supported only up to " + std::to_string(bound) +
             " players");
  }
}

std::string pair_witness(const char* relation, Coalition a, Coalition b) {
  return std::string(relation) + " fails at A=" + coalition_label(a) +
         ", B=" + coalition_label(b);
}

FlagReport check_weakly_superadditive(const Game& v) {
  const Coalition limit = v.grand();
  for (Coalition a = 0; a <= limit; ++a) {
    for (int i = 0; i < v.players(); ++i) {
      if (has_player(a, i)) continue;
      const Coalition bit = singleton(i);
      if (v.value(a | bit) < v.value(a) + v.value(bit)) {
        return {false, pair_witness("v(A+i) >= v(A)+v(i)", a, bit)};
      }
    }
    if (a == limit) break;
  }
  return {true, ""};
}

FlagReport check_monotone(const Game& v) {
  const Coalition limit = v.grand();
  for (Coalition a = 0; a <= limit; ++a) {
    for (int i = 0; i < v.players(); ++i) {
      if (has_player(a, i)) continue;
      if (v.value(a) > v.value(a | singleton(i))) {
        return {false, pair_witness("monotonicity", a, a | singleton(i))};
      }
    }
    if (a == limit) break;
  }
  return {true, ""};
}

// Local supermodularity over pairs (A+i, A+j); equivalent to the
// definitional quantifier, which is re-checked below at small n.
FlagReport check_supermodular(const Game& v) {
  const int n = v.players();
  FlagReport report{true, ""};
  for (Coalition a = 0; a <= v.grand() && report.holds; ++a) {
    for (int i = 0; i < n && report.holds; ++i) {
      if (has_player(a, i)) continue;
      for (int j = i + 1; j < n; ++j) {
        if (has_player(a, j)) continue;
        const Coalition ai = a | singleton(i);
        const Coalition aj = a | singleton(j);
        if (v.value(ai | aj) + v.value(a) < v.value(ai) + v.value(aj)) {
          report = {false, pair_witness("supermodularity", ai, aj)};
          break;
        }
      }
    }
    if (a == v.grand()) break;
  }
  if (n <= 5) {
    bool definitional = true;
    for (Coalition a = 0; a <= v.grand() && definitional; ++a) {
      for (Coalition b = 0; b <= v.grand(); ++b) {
        if (v.value(a | b) + v.value(a & b) < v.value(a) + v.value(b)) {
          definitional = false;
          break;
        }
        if (b == v.grand()) break;
      }
      if (a == v.grand()) break;
    }
    assert(definitional == report.holds);
  }
  return report;
}

// Total monotonicity via Mobius nonnegativity on |A| >= 2. At n <= 4
// the k = 2, 3 definitional inequalities are re-validated when the
// criterion reports membership.
FlagReport check_totally_monotone(const Game& v) {
  const MobiusCoeffs m = mobius(v);
  FlagReport report{true, ""};
  for (Coalition a : canonical_coalitions(v.players(), 2)) {
    if (m.coeffs[a] < 0) {
      report = {false, "negative dividend at A=" + coalition_label(a)};
      break;
    }
  }
  if (report.holds && v.players() <= 4) {
    const Coalition limit = v.grand();
    for (Coalition a = 0; a <= limit; ++a) {
      for (Coalition b = 0; b <= limit; ++b) {
        assert(v.value(a | b) + v.value(a & b) >= v.value(a) + v.value(b));
        for (Coalition c = 0; c <= limit; ++c) {
          const Rat lhs = v.value(a | b | c);
          const Rat rhs = v.value(a) + v.value(b) + v.value(c) -
                          v.value(a & b) - v.value(a & c) - v.value(b & c) +
                          v.value(a & b & c);
          assert(lhs >= rhs);
          if (c == limit) break;
        }
        if (b == limit) break;
      }
      if (a == limit) break;
    }
  }
  return report;
}

FlagReport check_zero_normalized(const Game& v) {
  for (int i = 0; i < v.players(); ++i) {
    if (v.value(singleton(i)) != 0) {
      return {false, "v({" + std::to_string(i + 1) + "}) != 0"};
    }
  }
  return {true, ""};
}

FlagReport check_additive(const Game& v) {
  const Coalition limit = v.grand();
  for (Coalition a = 0; a <= limit; ++a) {
    Rat sum(0);
    for (int i : coalition_players(a)) sum += v.value(singleton(i));
    if (v.value(a) != sum) {
      return {false, "additivity fails at A=" + coalition_label(a)};
    }
    if (a == limit) break;
  }
  return {true, ""};
}

}  // namespace

bool is_weakly_superadditive(const Game& v) {
  return check_weakly_superadditive(v).holds;
}
bool is_monotone(const Game& v) { return check_monotone(v).holds; }
bool is_supermodular(const Game& v) { return check_supermodular(v).holds; }
bool is_totally_monotone(const Game& v) {
  return check_totally_monotone(v).holds;
}
bool is_zero_normalized(const Game& v) {
  return check_zero_normalized(v).holds;
}
bool is_zero_monotone(const Game& v) {
  return is_zero_normalized(v) && is_monotone(v);
}

bool is_nonnegative(const Game& v) {
  for (const Rat& value : v.table()) {
    if (value < 0) return false;
  }
  return true;
}

BalancednessCertificate is_balanced(const Game& v) {
  require_players(v, 8, "balancedness");
  const int n = v.players();
  BalancednessCertificate cert;
  const HPolytope core = core_h(v);
  const LPResult feas = lp_solve(Vec(n, Rat(0)), core, Sense::Min);
  if (feas.status == LPStatus::Optimal) {
    cert.balanced = true;
    cert.core_point = Allocation{n, feas.point};
    return cert;
  }
  assert(feas.status == LPStatus::Infeasible);

  // Bondareva-Shapley dual: maximize the worth of a balanced
  // collection. The optimum exceeds v(N) exactly when the core is
  // empty; proper nonempty coalitions index the weights.
  const std::vector<Coalition> proper = [&] {
    std::vector<Coalition> out;
    for (Coalition a : canonical_coalitions(n, 1)) {
      if (a != v.grand()) out.push_back(a);
    }
    return out;
  }();
  detail::LPProblem dual;
  dual.dim = static_cast<int>(proper.size());
  dual.nonneg.assign(proper.size(), true);
  dual.c.resize(proper.size());
  for (std::size_t j = 0; j < proper.size(); ++j) {
    dual.c[j] = -v.value(proper[j]);  // internal form minimizes
  }
  for (int i = 0; i < n; ++i) {
    Vec row(proper.size(), Rat(0));
    for (std::size_t j = 0; j < proper.size(); ++j) {
      if (has_player(proper[j], i)) row[j] = 1;
    }
    dual.E.push_back(std::move(row));
    dual.f.push_back(Rat(1));
  }
  const LPResult weights = detail::solve_min(dual);
  assert(weights.status == LPStatus::Optimal);
  assert(-weights.value > v.grand_value());
  cert.balanced = false;
  for (std::size_t j = 0; j < proper.size(); ++j) {
    if (weights.point[j] != 0) {
      cert.collection_weights.emplace_back(proper[j], weights.point[j]);
    }
  }
  return cert;
}

bool is_exact(const Game& v) {
  require_players(v, 6, "exactness");
  if (!is_balanced(v).balanced) return false;
  const HPolytope core = core_h(v);
  for (Coalition a : canonical_coalitions(v.players(), 1)) {
    Vec indicator(v.players(), Rat(0));
    for (int i : coalition_players(a)) indicator[i] = 1;
    const LPResult probe = lp_solve(indicator, core, Sense::Min);
    assert(probe.status == LPStatus::Optimal);
    if (probe.value != v.value(a)) return false;
  }
  return true;
}

bool is_totally_balanced(const Game& v) {
  require_players(v, 6, "total balancedness");
  for (Coalition a : canonical_coalitions(v.players(), 1)) {
    if (!is_balanced(subgame(v, a)).balanced) return false;
  }
  return true;
}

ClassReport classify(const Game& v) {
  ClassReport report;
  report.weakly_superadditive = check_weakly_superadditive(v);
  report.monotone = check_monotone(v);
  report.supermodular = check_supermodular(v);
  report.totally_monotone = check_totally_monotone(v);
  report.zero_normalized = check_zero_normalized(v);
  report.zero_monotone = {
      report.zero_normalized.holds && report.monotone.holds,
      report.zero_normalized.holds ? report.monotone.witness
                                   : report.zero_normalized.witness};
  if (report.zero_monotone.holds) report.zero_monotone.witness.clear();
  report.additive = check_additive(v);

  if (v.players() <= 8) {
    const BalancednessCertificate cert = is_balanced(v);
    FlagReport flag{cert.balanced, ""};
    if (cert.balanced) {
      flag.witness = "core point " + vec_str(cert.core_point.x);
    } else {
      std::string weights;
      for (const auto& [coal, w] : cert.collection_weights) {
        if (!weights.empty()) weights += ", ";
        weights += coalition_label(coal) + ":" + rat_str(w);
      }
      flag.witness = "balanced collection {" + weights + "}";
    }
    report.balanced = flag;
  }
  if (v.players() <= 6) {
    report.exact = FlagReport{is_exact(v), ""};
    report.totally_balanced = FlagReport{is_totally_balanced(v), ""};
  }
  return report;
}

std::pair<Game, Game> jordan_decompose_tm(const Game& v) {
  const MobiusCoeffs m = mobius(v);
  MobiusCoeffs pos{m.n, Vec(m.coeffs.size(), Rat(0))};
  MobiusCoeffs neg{m.n, Vec(m.coeffs.size(), Rat(0))};
  for (std::size_t a = 1; a < m.coeffs.size(); ++a) {
    if (m.coeffs[a] > 0) pos.coeffs[a] = m.coeffs[a];
    if (m.coeffs[a] < 0) neg.coeffs[a] = -m.coeffs[a];
  }
  return {mobius_inverse(pos), mobius_inverse(neg)};
}

MobiusCoeffs almost_positive_coeffs(const Game& v) {
  const FlagReport zn = check_zero_normalized(v);
  if (!zn.holds) {
    fail(Errc::NotInClass, "zero_normalized violated: " + zn.witness);
  }
  const FlagReport tm = check_totally_monotone(v);
  if (!tm.holds) {
    fail(Errc::NotInClass, "totally_monotone violated: " + tm.witness);
  }
  return mobius(v);
}

}  // namespace coalgame
