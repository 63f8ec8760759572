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

#ifndef COALGAME_COALITION_HPP
#define COALGAME_COALITION_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace coalgame {

/// A coalition over players {1,...,n} encoded as an n-bit mask:
/// player i corresponds to bit i-1. The empty coalition is mask 0.
using Coalition = std::uint32_t;

constexpr int kMaxPlayers = 12;

constexpr Coalition kEmptyCoalition = 0u;

inline Coalition full_coalition(int n) {
  return (n == 0) ? 0u : ((1u << n) - 1u);
}

inline int coalition_size(Coalition a) { return std::popcount(a); }

inline bool is_subset(Coalition a, Coalition b) { return (a & ~b) == 0; }

/// Membership of player with 0-based index `i`.
inline bool has_player(Coalition a, int i) { return (a >> i) & 1u; }

inline Coalition singleton(int i) { return 1u << i; }

/// 0-based player indices of a coalition, ascending.
std::vector<int> coalition_players(Coalition a);

/// Canonical enumeration: ascending cardinality, ties broken by
/// ascending mask. Coalitions with fewer than `min_size` players are
/// skipped.
std::vector<Coalition> canonical_coalitions(int n, int min_size = 0);

/// Display form "1,3" with 1-based ascending player indices; the empty
/// coalition renders as "{}" for diagnostics.
std::string coalition_label(Coalition a);

}  // namespace coalgame

#endif  // COALGAME_COALITION_HPP
