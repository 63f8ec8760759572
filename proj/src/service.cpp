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

#include "coalgame/service.hpp"

#include "coalgame/errors.hpp"

namespace coalgame {

namespace {

ProbabilisticWeights weights_option(const Game& v, const Json& options) {
  if (options.is_object() && options.contains("weights")) {
    return weights_from_json(options["weights"]);
  }
  return ProbabilisticWeights::shapley(v.players());
}

HPolytope kset_option(const Game& v, const Json& options) {
  if (options.is_object() && options.contains("kset")) {
    return kset_from_json(options["kset"]);
  }
  return imputation_set(v);
}

struct ConeSetup {
  HPolytope cone_h;
  GameSpace space;
  SimplicialFan fan;
  SolutionTable table;
  std::function<VPolytope(const Game&)> sigma_additive;
  std::function<VPolytope(const Game&)> direct_sigma;
  std::string cone_name;
  std::string sigma_name;
};

ConeSetup cone_setup(const Game& v, const Json& options) {
  ConeSetup setup;
  setup.cone_name = "tm0";
  setup.sigma_name = "shapley";
  if (options.is_object() && options.contains("cone")) {
    setup.cone_name = options["cone"].get<std::string>();
  }
  if (options.is_object() && options.contains("sigma")) {
    setup.sigma_name = options["sigma"].get<std::string>();
  }
  setup.cone_h = cone_by_name(setup.cone_name, v.players());
  setup.space = GameSpace::zero_normalized(v.players());
  setup.fan = triangulate_cone(extreme_rays(setup.cone_h));

  if (setup.sigma_name == "shapley") {
    setup.direct_sigma = [](const Game& g) {
      return VPolytope{g.players(), {shapley(g).x}};
    };
  } else if (setup.sigma_name == "core") {
    setup.direct_sigma = [](const Game& g) {
      return enumerate_vertices_unchecked(core_h(g));
    };
  } else {
    fail(Errc::ParseError, "unknown sigma '" + setup.sigma_name + "'");
  }
  setup.sigma_additive = setup.direct_sigma;
  for (const Vec& gen : setup.fan.cone.generators) {
    const Game g = vec_to_game(gen, setup.space);
    setup.table.entries.emplace(g, setup.direct_sigma(g));
  }
  return setup;
}

Json command_header(const char* command, const Game* v) {
  Json doc;
  doc["command"] = command;
  if (v != nullptr) doc["n"] = v->players();
  return doc;
}

}  // namespace

Json error_document(const std::string& code, const std::string& message) {
  Json doc;
  doc["error"]["code"] = code;
  doc["error"]["message"] = message;
  return doc;
}

Json run_classify(const Game& v) {
  Json doc = command_header("classify", &v);
  doc["game"] = game_to_json(v);
  doc["classes"] = class_report_json(classify(v));
  return doc;
}

Json run_solve(const Game& v, const std::string& concept_name,
               const Json& options) {
  Json doc = command_header("solve", &v);
  doc["concept"] = concept_name;
  if (concept_name == "core") {
    const HPolytope h = core_h(v);
    const VPolytope verts = enumerate_vertices_unchecked(h);
    doc["h_form"] = hpolytope_json(h);
    doc["vertices"] = vpolytope_json(verts)["vertices"];
    doc["empty"] = verts.empty();
  } else if (concept_name == "weber") {
    doc["vertices"] = vpolytope_json(weber(v))["vertices"];
  } else if (concept_name == "selectope") {
    doc["vertices"] = vpolytope_json(selectope(v))["vertices"];
  } else if (concept_name == "shapley") {
    doc["allocation"] = allocation_json(shapley(v));
  } else if (concept_name == "probabilistic") {
    doc["allocation"] =
        allocation_json(probabilistic_value(v, weights_option(v, options)));
  } else if (concept_name == "nucleolus") {
    doc["allocation"] = allocation_json(nucleolus(v, kset_option(v, options)));
  } else {
    fail(Errc::ParseError, "unknown concept '" + concept_name + "'");
  }
  return doc;
}

Json run_decompose(const Game& v, const std::string& scheme,
                   const Json& options) {
  Json doc = command_header("decompose", &v);
  doc["scheme"] = scheme;
  if (scheme == "zero-norm") {
    const auto [zero_part, additive_part] = zero_normalize(v);
    doc["zero_normalized"] = game_to_json(zero_part);
    doc["additive"] = game_to_json(additive_part);
  } else if (scheme == "max") {
    Json parts = Json::object();
    for (const auto& [coal, part] : max_decompose(v)) {
      parts[coalition_key(coal)] = game_to_json(part);
    }
    doc["components"] = std::move(parts);
  } else if (scheme == "marginal") {
    Json parts = Json::object();
    for (const auto& [player, part] : marginal_games(v)) {
      parts[std::to_string(player + 1)] = game_to_json(part);
    }
    doc["components"] = std::move(parts);
  } else if (scheme == "linear") {
    std::vector<Game> basis;
    if (options.is_object() && options.contains("basis")) {
      for (const Json& entry : options["basis"]) {
        basis.push_back(game_from_json(entry));
      }
    } else {
      for (Coalition a : canonical_coalitions(v.players(), 1)) {
        basis.push_back(Game::unanimity(v.players(), a));
      }
    }
    SolutionTable table;
    for (const Game& g : basis) {
      table.entries.emplace(g, VPolytope{g.players(), {shapley(g).x}});
    }
    doc["record"] = record_json(
        factor_linear(v, basis, table, [](const Game& g) { return shapley(g); }));
  } else if (scheme == "cone") {
    const ConeSetup setup = cone_setup(v, options);
    doc["cone"] = setup.cone_name;
    doc["sigma"] = setup.sigma_name;
    doc["record"] = record_json(factor_cone(v, setup.cone_h, setup.space,
                                            setup.fan, setup.table,
                                            setup.sigma_additive,
                                            setup.direct_sigma));
  } else {
    fail(Errc::ParseError, "unknown scheme '" + scheme + "'");
  }
  return doc;
}

Json run_verify(const Game& v, const std::string& diagram,
                const Json& options) {
  Json doc = command_header("verify", &v);
  doc["diagram"] = diagram;
  FactorizationRecord record;
  if (diagram == "probabilistic") {
    record = factor_probabilistic(v, weights_option(v, options));
  } else if (diagram == "weber") {
    record = factor_weber(v);
  } else if (diagram == "selectope") {
    record = factor_selectope(v);
  } else if (diagram == "nucleolus") {
    record = factor_nucleolus(v, kset_option(v, options));
  } else if (diagram == "ws-core") {
    record = core_ws(v);
  } else if (diagram == "cone") {
    const ConeSetup setup = cone_setup(v, options);
    doc["cone"] = setup.cone_name;
    doc["sigma"] = setup.sigma_name;
    record = factor_cone(v, setup.cone_h, setup.space, setup.fan, setup.table,
                         setup.sigma_additive, setup.direct_sigma);
  } else {
    fail(Errc::ParseError, "unknown diagram '" + diagram + "'");
  }
  doc["commutes"] = record.commutes;
  doc["record"] = record_json(record);
  return doc;
}

Json run_rays(const std::string& cone_class, int n) {
  Json doc;
  doc["command"] = "rays";
  doc["class"] = cone_class;
  doc["n"] = n;
  Json generators = Json::array();
  for (const Game& g : cone_ray_games(cone_class, n)) {
    generators.push_back(game_to_json(g));
  }
  doc["count"] = generators.size();
  doc["generators"] = std::move(generators);
  return doc;
}

}  // namespace coalgame
