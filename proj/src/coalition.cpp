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

#include "coalgame/coalition.hpp"

#include <algorithm>

namespace coalgame {

std::vector<int> coalition_players(Coalition a) {
  std::vector<int> players;
  for (int i = 0; a != 0; ++i, a >>= 1) {
    if (a & 1u) players.push_back(i);
  }
  return players;
}

std::vector<Coalition> canonical_coalitions(int n, int min_size) {
  std::vector<Coalition> order;
  const Coalition limit = full_coalition(n);
  for (Coalition a = 0; a <= limit; ++a) {
    if (coalition_size(a) >= min_size) order.push_back(a);
    if (a == limit) break;
  }
  std::stable_sort(order.begin(), order.end(),
                   [](Coalition lhs, Coalition rhs) {
                     const int cl = coalition_size(lhs);
                     const int cr = coalition_size(rhs);
                     if (cl != cr) return cl < cr;
                     return lhs < rhs;
                   });
  return order;
}

std::string coalition_label(Coalition a) {
  if (a == kEmptyCoalition) return "{}";
  std::string out;
  for (int i : coalition_players(a)) {
    if (!out.empty()) out += ",";
    out += std::to_string(i + 1);
  }
  return out;
}

}  // namespace coalgame
