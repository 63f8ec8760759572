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

// Batch front end over the C API: classify, solve, decompose, verify,
// rays. Reads game/weights/K-set documents from files and prints one
// result document (JSON, exact rationals) to stdout or --output.
// Exit codes: 0 success, 1 parse/IO failures, 2 domain failures.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "coalgame.h"

namespace {

int status_to_exit(cgt_status status) {
  switch (status) {
    case CGT_OK: return 0;
    case CGT_ERROR_DOMAIN: return 2;
    case CGT_ERROR_IO:
    case CGT_ERROR_INTERNAL: return 1;
  }
  return 1;
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path);
  if (!in) return false;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  out = buffer.str();
  return true;
}

// Minimal JSON string escaping for option documents assembled here.
std::string json_escape(const std::string& raw) {
  std::string out;
  for (char c : raw) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default: out += c;
    }
  }
  return out;
}

struct CommonOptions {
  std::string game_path;
  std::string output_path;
  std::string weights_path;
  std::string kset_path;
  std::string basis_dir;
  std::string cone_class = "tm0";
  std::string sigma = "shapley";
};

int emit(const std::string& output_path, const char* text) {
  if (text == nullptr) return 0;
  if (output_path.empty()) {
    std::cout << text << std::endl;
    return 0;
  }
  std::ofstream out(output_path);
  if (!out) {
    std::cerr << "cannot write " << output_path << std::endl;
    return 1;
  }
  out << text << std::endl;
  return 0;
}

// Builds the options document from the file-based flags.
bool build_options(const CommonOptions& opts, bool with_cone,
                   std::string& out) {
  std::vector<std::string> fields;
  std::string content;
  if (!opts.weights_path.empty()) {
    if (!read_file(opts.weights_path, content)) {
      std::cerr << "cannot read weights file " << opts.weights_path
                << std::endl;
      return false;
    }
    fields.push_back("\"weights\": " + content);
  }
  if (!opts.kset_path.empty()) {
    if (!read_file(opts.kset_path, content)) {
      std::cerr << "cannot read K-set file " << opts.kset_path << std::endl;
      return false;
    }
    fields.push_back("\"kset\": " + content);
  }
  if (!opts.basis_dir.empty()) {
    std::vector<std::string> paths;
    std::error_code ec;
    for (const auto& entry :
         std::filesystem::directory_iterator(opts.basis_dir, ec)) {
      if (entry.path().extension() == ".json") {
        paths.push_back(entry.path().string());
      }
    }
    if (ec) {
      std::cerr << "cannot read basis directory " << opts.basis_dir
                << std::endl;
      return false;
    }
    std::sort(paths.begin(), paths.end());
    std::string array = "[";
    for (std::size_t i = 0; i < paths.size(); ++i) {
      if (!read_file(paths[i], content)) {
        std::cerr << "cannot read basis file " << paths[i] << std::endl;
        return false;
      }
      if (i) array += ",";
      array += content;
    }
    array += "]";
    fields.push_back("\"basis\": " + array);
  }
  if (with_cone) {
    fields.push_back("\"cone\": \"" + json_escape(opts.cone_class) + "\"");
    fields.push_back("\"sigma\": \"" + json_escape(opts.sigma) + "\"");
  }
  out = "{";
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ",";
    out += fields[i];
  }
  out += "}";
  return true;
}

int load_game(const std::string& path, cgt_game** game) {
  std::string content;
  if (!read_file(path, content)) {
    std::cerr << "cannot read game file " << path << std::endl;
    return 1;
  }
  const cgt_status status = cgt_game_parse(content.c_str(), game);
  if (status != CGT_OK) {
    std::cerr << cgt_last_error() << std::endl;
    return status_to_exit(status);
  }
  return 0;
}

int finish(cgt_status status, char* result, const std::string& output_path) {
  int code = status_to_exit(status);
  if (result != nullptr) {
    const int emit_code = emit(output_path, result);
    if (code == 0) code = emit_code;
    cgt_string_free(result);
  } else if (status != CGT_OK) {
    std::cerr << cgt_last_error() << std::endl;
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver and decomposition checker for TU coalitional games"};
  app.require_subcommand(1);

  CommonOptions opts;
  std::string concept;
  std::string scheme;
  std::string diagram;
  int ray_players = 3;

  CLI::App* classify = app.add_subcommand("classify", "class membership report");
  classify->add_option("file", opts.game_path, "game file")->required();
  classify->add_option("--output", opts.output_path, "write result here");

  CLI::App* solve = app.add_subcommand("solve", "compute a solution concept");
  solve->add_option("--concept", concept,
                    "core|weber|selectope|shapley|probabilistic|nucleolus")
      ->required();
  solve->add_option("--weights", opts.weights_path, "weights file");
  solve->add_option("--kset", opts.kset_path, "K-set file (H-polytope)");
  solve->add_option("file", opts.game_path, "game file")->required();
  solve->add_option("--output", opts.output_path, "write result here");

  CLI::App* decompose = app.add_subcommand("decompose", "factor a game");
  decompose->add_option("--scheme", scheme, "zero-norm|max|linear|cone|marginal")
      ->required();
  decompose->add_option("--basis", opts.basis_dir,
                        "directory of basis game files (linear scheme)");
  decompose->add_option("--cone", opts.cone_class, "tm0|supermodular0");
  decompose->add_option("--sigma", opts.sigma, "shapley|core");
  decompose->add_option("file", opts.game_path, "game file")->required();
  decompose->add_option("--output", opts.output_path, "write result here");

  CLI::App* verify = app.add_subcommand("verify", "check a factorization diagram");
  verify->add_option("--diagram", diagram,
                     "probabilistic|weber|selectope|nucleolus|ws-core|cone")
      ->required();
  verify->add_option("--weights", opts.weights_path, "weights file");
  verify->add_option("--kset", opts.kset_path, "K-set file");
  verify->add_option("--cone", opts.cone_class, "tm0|supermodular0");
  verify->add_option("--sigma", opts.sigma, "shapley|core");
  verify->add_option("file", opts.game_path, "game file")->required();
  verify->add_option("--output", opts.output_path, "write result here");

  CLI::App* rays = app.add_subcommand("rays", "extreme rays of a game cone");
  rays->add_option("--class", opts.cone_class, "tm0|supermodular0")->required();
  rays->add_option("--n", ray_players, "player count")->required();
  rays->add_option("--output", opts.output_path, "write result here");

  CLI11_PARSE(app, argc, argv);

  char* result = nullptr;
  if (rays->parsed()) {
    const cgt_status status =
        cgt_rays(opts.cone_class.c_str(), ray_players, &result);
    return finish(status, result, opts.output_path);
  }

  cgt_game* game = nullptr;
  const int load_code = load_game(opts.game_path, &game);
  if (load_code != 0) return load_code;

  cgt_status status = CGT_ERROR_INTERNAL;
  if (classify->parsed()) {
    status = cgt_classify(game, &result);
  } else {
    std::string options;
    const bool with_cone = decompose->parsed() ? scheme == "cone"
                                               : diagram == "cone";
    if (!build_options(opts, with_cone, options)) {
      cgt_game_free(game);
      return 1;
    }
    if (solve->parsed()) {
      status = cgt_solve(game, concept.c_str(), options.c_str(), &result);
    } else if (decompose->parsed()) {
      status = cgt_decompose(game, scheme.c_str(), options.c_str(), &result);
    } else if (verify->parsed()) {
      status = cgt_verify(game, diagram.c_str(), options.c_str(), &result);
    }
  }
  cgt_game_free(game);
  return finish(status, result, opts.output_path);
}
