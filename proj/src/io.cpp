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

#include "coalgame/io.hpp"

#include <limits>

#include "coalgame/errors.hpp"

namespace coalgame {

namespace {

int require_player_count(const Json& doc) {
  if (!doc.is_object() || !doc.contains("n") ||
      !doc["n"].is_number_integer()) {
    fail(Errc::ParseError, "document needs an integer field \"n\"");
  }
  const long long n = doc["n"].get<long long>();
  if (n < 1 || n > kMaxPlayers) {
    fail(Errc::InvariantViolation,
         "player count " + std::to_string(n) + " outside [1," +
             std::to_string(kMaxPlayers) + "]");
  }
  return static_cast<int>(n);
}

Rat rat_from_json(const Json& value, const std::string& where) {
  if (value.is_number_integer()) {
    return Rat(static_cast<long>(value.get<long long>()));
  }
  if (value.is_string()) return rat_parse(value.get<std::string>());
  fail(Errc::ParseError, "expected a rational string at " + where);
}

}  // namespace

std::string coalition_key(Coalition a) {
  std::string out;
  for (int i : coalition_players(a)) {
    if (!out.empty()) out += ",";
    out += std::to_string(i + 1);
  }
  return out;
}

Coalition coalition_from_key(const std::string& key, int n, bool allow_empty) {
  if (key.empty()) {
    if (allow_empty) return kEmptyCoalition;
    fail(Errc::ParseError, "empty coalition key not allowed");
  }
  Coalition mask = 0;
  int previous = 0;
  std::size_t pos = 0;
  while (pos < key.size()) {
    std::size_t next = key.find(',', pos);
    if (next == std::string::npos) next = key.size();
    const std::string part = key.substr(pos, next - pos);
    if (part.empty()) fail(Errc::ParseError, "empty index in key '" + key + "'");
    int player = 0;
    for (char c : part) {
      if (c < '0' || c > '9') {
        fail(Errc::ParseError, "bad player index in key '" + key + "'");
      }
      player = player * 10 + (c - '0');
      if (player > kMaxPlayers) break;
    }
    if (player < 1 || player > n) {
      fail(Errc::ParseError,
           "player " + part + " outside 1.." + std::to_string(n) +
               " in key '" + key + "'");
    }
    if (player <= previous) {
      fail(Errc::ParseError,
           "indices must be strictly ascending in key '" + key + "'");
    }
    previous = player;
    mask |= singleton(player - 1);
    pos = next + 1;
  }
  return mask;
}

Json load_json_text(const std::string& text) {
  Json doc = Json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) {
    fail(Errc::ParseError, "malformed JSON document");
  }
  return doc;
}

Game game_from_json(const Json& doc) {
  const int n = require_player_count(doc);
  std::vector<std::pair<Coalition, Rat>> assignments;
  if (doc.contains("values")) {
    if (!doc["values"].is_object()) {
      fail(Errc::ParseError, "\"values\" must be an object");
    }
    for (const auto& [key, value] : doc["values"].items()) {
      const Coalition coal = coalition_from_key(key, n, /*allow_empty=*/false);
      assignments.emplace_back(coal, rat_from_json(value, "values[" + key + "]"));
    }
  }
  return Game::make(n, assignments);
}

Game parse_game_text(const std::string& text) {
  return game_from_json(load_json_text(text));
}

Json game_to_json(const Game& v) {
  Json values = Json::object();
  for (Coalition a : canonical_coalitions(v.players(), 1)) {
    if (v.value(a) != 0) values[coalition_key(a)] = rat_str(v.value(a));
  }
  Json doc;
  doc["n"] = v.players();
  doc["values"] = std::move(values);
  return doc;
}

ProbabilisticWeights weights_from_json(const Json& doc) {
  const int n = require_player_count(doc);
  if (!doc.contains("weights") || !doc["weights"].is_object()) {
    fail(Errc::ParseError, "weights document needs a \"weights\" object");
  }
  ProbabilisticWeights w;
  w.n = n;
  w.p.assign(n, Vec(std::size_t{1} << n, Rat(0)));
  for (const auto& [player_key, tableJson] : doc["weights"].items()) {
    int player = 0;
    try {
      player = std::stoi(player_key);
    } catch (...) {
      fail(Errc::ParseError, "bad player key '" + player_key + "'");
    }
    if (player < 1 || player > n) {
      fail(Errc::ParseError, "player key outside 1.." + std::to_string(n));
    }
    if (!tableJson.is_object()) {
      fail(Errc::ParseError, "per-player weights must be an object");
    }
    for (const auto& [key, value] : tableJson.items()) {
      const Coalition coal = coalition_from_key(key, n, /*allow_empty=*/true);
      if (has_player(coal, player - 1)) {
        fail(Errc::InvariantViolation,
             "weight of player " + player_key +
                 " on a coalition containing them: '" + key + "'");
      }
      w.p[player - 1][coal] = rat_from_json(value, "weights[" + key + "]");
    }
  }
  w.validate();
  return w;
}

HPolytope kset_from_json(const Json& doc) {
  const int n = require_player_count(doc);
  HPolytope poly(n);
  const auto read_rows = [&](const char* field, bool equality) {
    if (!doc.contains(field)) return;
    if (!doc[field].is_array()) {
      fail(Errc::ParseError, std::string("\"") + field + "\" must be an array");
    }
    for (const Json& row : doc[field]) {
      if (!row.is_object() || !row.contains("a") || !row.contains("b") ||
          !row["a"].is_array() ||
          row["a"].size() != static_cast<std::size_t>(n)) {
        fail(Errc::ParseError,
             std::string("rows of \"") + field +
                 "\" need an n-vector \"a\" and a scalar \"b\"");
      }
      Vec a;
      for (const Json& entry : row["a"]) a.push_back(rat_from_json(entry, "a"));
      const Rat b = rat_from_json(row["b"], "b");
      if (equality) {
        poly.add_equality(std::move(a), b);
      } else {
        poly.add_inequality(std::move(a), b);
      }
    }
  };
  read_rows("inequalities", false);
  read_rows("equalities", true);
  return poly;
}

Json rat_json(const Rat& value) { return Json(rat_str(value)); }

Json vec_json(const Vec& values) {
  Json arr = Json::array();
  for (const Rat& v : values) arr.push_back(rat_str(v));
  return arr;
}

Json allocation_json(const Allocation& x) { return vec_json(x.x); }

Json vpolytope_json(const VPolytope& p) {
  Json doc;
  doc["dim"] = p.dim;
  Json verts = Json::array();
  for (const Vec& v : p.vertices) verts.push_back(vec_json(v));
  doc["vertices"] = std::move(verts);
  return doc;
}

Json hpolytope_json(const HPolytope& p) {
  Json doc;
  doc["dim"] = p.dim;
  Json ineqs = Json::array();
  for (std::size_t i = 0; i < p.A.size(); ++i) {
    Json row;
    row["a"] = vec_json(p.A[i]);
    row["b"] = rat_str(p.b[i]);
    ineqs.push_back(std::move(row));
  }
  doc["inequalities"] = std::move(ineqs);
  Json eqs = Json::array();
  for (std::size_t j = 0; j < p.E.size(); ++j) {
    Json row;
    row["a"] = vec_json(p.E[j]);
    row["b"] = rat_str(p.f[j]);
    eqs.push_back(std::move(row));
  }
  doc["equalities"] = std::move(eqs);
  return doc;
}

namespace {

Json flag_json(const FlagReport& flag) {
  Json doc;
  doc["holds"] = flag.holds;
  if (!flag.witness.empty()) doc["witness"] = flag.witness;
  return doc;
}

}  // namespace

Json class_report_json(const ClassReport& report) {
  Json doc;
  doc["weakly_superadditive"] = flag_json(report.weakly_superadditive);
  doc["monotone"] = flag_json(report.monotone);
  doc["supermodular"] = flag_json(report.supermodular);
  doc["totally_monotone"] = flag_json(report.totally_monotone);
  doc["zero_normalized"] = flag_json(report.zero_normalized);
  doc["zero_monotone"] = flag_json(report.zero_monotone);
  doc["additive"] = flag_json(report.additive);
  if (report.balanced) doc["balanced"] = flag_json(*report.balanced);
  if (report.exact) doc["exact"] = flag_json(*report.exact);
  if (report.totally_balanced) {
    doc["totally_balanced"] = flag_json(*report.totally_balanced);
  }
  return doc;
}

Json record_json(const FactorizationRecord& record) {
  Json doc;
  doc["scheme"] = record.scheme;
  doc["commutes"] = record.commutes;
  doc["alpha"] = vpolytope_json(record.alpha);
  doc["direct"] = vpolytope_json(record.direct);
  doc["tau_size"] = record.tau.size();
  if (record.tau.size() <= 64) {
    Json tau = Json::array();
    for (const auto& [label, game] : record.tau) {
      Json entry;
      entry["label"] = label;
      entry["game"] = game_to_json(game);
      tau.push_back(std::move(entry));
    }
    doc["tau"] = std::move(tau);
  }
  return doc;
}

}  // namespace coalgame
