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

#ifndef COALGAME_IO_HPP
#define COALGAME_IO_HPP

#include <string>

#include "json.hpp"

#include "coalgame/classes.hpp"
#include "coalgame/decomposition.hpp"
#include "coalgame/game.hpp"
#include "coalgame/polyhedra.hpp"
#include "coalgame/solutions.hpp"

namespace coalgame {

using Json = nlohmann::ordered_json;

/// Coalition key "1,3": comma-separated, strictly ascending 1-based
/// player indices.
std::string coalition_key(Coalition a);
Coalition coalition_from_key(const std::string& key, int n, bool allow_empty);

/// Game document: {"n": <int>, "values": {<key>: "p/q", ...}}.
/// Unlisted coalitions are zero; the empty key is not allowed.
Game game_from_json(const Json& doc);
Game parse_game_text(const std::string& text);
Json game_to_json(const Game& v);

/// Weight tables: {"n": <int>, "weights": {"<player>": {<key>: "p/q"}}}
/// where "" keys the empty coalition.
ProbabilisticWeights weights_from_json(const Json& doc);

/// K-set: {"n": <int>, "inequalities": [{"a": [...], "b": "p/q"}],
/// "equalities": [...]} with rows meaning a.x >= b resp. a.x = b.
HPolytope kset_from_json(const Json& doc);

Json rat_json(const Rat& value);
Json vec_json(const Vec& values);
Json allocation_json(const Allocation& x);
Json vpolytope_json(const VPolytope& p);
Json hpolytope_json(const HPolytope& p);
Json class_report_json(const ClassReport& report);
Json record_json(const FactorizationRecord& record);

Json load_json_text(const std::string& text);

}  // namespace coalgame

#endif  // COALGAME_IO_HPP
