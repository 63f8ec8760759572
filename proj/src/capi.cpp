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

#include "coalgame.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "coalgame/errors.hpp"
#include "coalgame/service.hpp"

struct cgt_game {
  coalgame::Game game;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out != nullptr) std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

void emit_error_document(const std::string& code, const std::string& message,
                         char** out_json) {
  if (out_json != nullptr) {
    *out_json = dup_string(coalgame::error_document(code, message).dump());
  }
}

// Runs `body` (which returns a result document) under the shared
// exception-to-status mapping.
template <typename Body>
cgt_status guarded(char** out_json, Body&& body) {
  if (out_json != nullptr) *out_json = nullptr;
  try {
    const coalgame::Json doc = body();
    if (out_json != nullptr) *out_json = dup_string(doc.dump());
    g_last_error.clear();
    return CGT_OK;
  } catch (const coalgame::Error& e) {
    g_last_error = e.what();
    emit_error_document(coalgame::errc_name(e.code()), e.what(), out_json);
    return e.is_input_error() ? CGT_ERROR_IO : CGT_ERROR_DOMAIN;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    emit_error_document("Internal", e.what(), out_json);
    return CGT_ERROR_INTERNAL;
  }
}

coalgame::Json parse_options(const char* options_json) {
  if (options_json == nullptr || *options_json == '\0') {
    return coalgame::Json::object();
  }
  return coalgame::load_json_text(options_json);
}

}  // namespace

extern "C" {

cgt_status cgt_game_parse(const char* json, cgt_game** out_game) {
  if (json == nullptr || out_game == nullptr) {
    g_last_error = "null argument";
    return CGT_ERROR_IO;
  }
  *out_game = nullptr;
  try {
    auto* handle = new cgt_game{coalgame::parse_game_text(json)};
    *out_game = handle;
    g_last_error.clear();
    return CGT_OK;
  } catch (const coalgame::Error& e) {
    g_last_error = e.what();
    return e.is_input_error() ? CGT_ERROR_IO : CGT_ERROR_DOMAIN;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CGT_ERROR_INTERNAL;
  }
}

void cgt_game_free(cgt_game* game) { delete game; }

int cgt_game_player_count(const cgt_game* game) {
  return game == nullptr ? 0 : game->game.players();
}

cgt_status cgt_game_to_json(const cgt_game* game, char** out_json) {
  if (game == nullptr || out_json == nullptr) {
    g_last_error = "null argument";
    return CGT_ERROR_IO;
  }
  return guarded(out_json, [&] { return coalgame::game_to_json(game->game); });
}

cgt_status cgt_game_value(const cgt_game* game, unsigned coalition_mask,
                          char** out_value) {
  if (game == nullptr || out_value == nullptr) {
    g_last_error = "null argument";
    return CGT_ERROR_IO;
  }
  *out_value = nullptr;
  if (coalition_mask >= game->game.table_size()) {
    g_last_error = "coalition mask outside the player set";
    return CGT_ERROR_DOMAIN;
  }
  *out_value = dup_string(coalgame::rat_str(game->game.value(coalition_mask)));
  g_last_error.clear();
  return CGT_OK;
}

cgt_status cgt_classify(const cgt_game* game, char** out_json) {
  if (game == nullptr) {
    g_last_error = "null game";
    return CGT_ERROR_IO;
  }
  return guarded(out_json, [&] { return coalgame::run_classify(game->game); });
}

cgt_status cgt_solve(const cgt_game* game, const char* concept_name,
                     const char* options_json, char** out_json) {
  if (game == nullptr || concept_name == nullptr) {
    g_last_error = "null argument";
    return CGT_ERROR_IO;
  }
  return guarded(out_json, [&] {
    return coalgame::run_solve(game->game, concept_name,
                               parse_options(options_json));
  });
}

cgt_status cgt_decompose(const cgt_game* game, const char* scheme,
                         const char* options_json, char** out_json) {
  if (game == nullptr || scheme == nullptr) {
    g_last_error = "null argument";
    return CGT_ERROR_IO;
  }
  return guarded(out_json, [&] {
    return coalgame::run_decompose(game->game, scheme,
                                   parse_options(options_json));
  });
}

cgt_status cgt_verify(const cgt_game* game, const char* diagram,
                      const char* options_json, char** out_json) {
  if (game == nullptr || diagram == nullptr) {
    g_last_error = "null argument";
    return CGT_ERROR_IO;
  }
  return guarded(out_json, [&] {
    return coalgame::run_verify(game->game, diagram,
                                parse_options(options_json));
  });
}

cgt_status cgt_rays(const char* cone_class, int player_count, char** out_json) {
  if (cone_class == nullptr) {
    g_last_error = "null argument";
    return CGT_ERROR_IO;
  }
  return guarded(out_json,
                 [&] { return coalgame::run_rays(cone_class, player_count); });
}

const char* cgt_last_error(void) { return g_last_error.c_str(); }

void cgt_string_free(char* text) { std::free(text); }

const char* cgt_version(void) { return "0.1.0"; }

}  // extern "C"
