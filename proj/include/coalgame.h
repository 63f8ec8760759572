/* Copyright 2026 The coalgame authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the coalgame engine. Games are opaque handles built
 * from JSON documents; results come back as JSON strings owned by the
 * library (release them with cgt_string_free). All rationals are
 * exact "p/q" strings end to end.
 */

#ifndef COALGAME_H
#define COALGAME_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define CGT_API __declspec(dllexport)
#else
#define CGT_API __attribute__((visibility("default")))
#endif

typedef struct cgt_game cgt_game;

typedef enum cgt_status {
  CGT_OK = 0,
  CGT_ERROR_IO = 1,       /* malformed input: parse or invariant errors */
  CGT_ERROR_DOMAIN = 2,   /* violated operation precondition */
  CGT_ERROR_INTERNAL = 3, /* unexpected failure */
} cgt_status;

/* Parses {"n": ..., "values": {...}} into a game handle. */
CGT_API cgt_status cgt_game_parse(const char* json, cgt_game** out_game);
CGT_API void cgt_game_free(cgt_game* game);
CGT_API int cgt_game_player_count(const cgt_game* game);
/* Canonical serialized form of the game. */
CGT_API cgt_status cgt_game_to_json(const cgt_game* game, char** out_json);
/* Value of one coalition (bit i-1 encodes player i) as "p/q". */
CGT_API cgt_status cgt_game_value(const cgt_game* game, unsigned coalition_mask,
                                  char** out_value);

/* Class-membership report. */
CGT_API cgt_status cgt_classify(const cgt_game* game, char** out_json);

/* concept: core | weber | selectope | shapley | probabilistic |
 * nucleolus. options_json may carry "weights" and "kset" documents;
 * pass NULL or "{}" for defaults. */
CGT_API cgt_status cgt_solve(const cgt_game* game, const char* concept_name,
                             const char* options_json, char** out_json);

/* scheme: zero-norm | max | linear | cone | marginal. options_json may
 * carry "basis", "cone", "sigma". */
CGT_API cgt_status cgt_decompose(const cgt_game* game, const char* scheme,
                                 const char* options_json, char** out_json);

/* diagram: probabilistic | weber | selectope | nucleolus | ws-core |
 * cone. */
CGT_API cgt_status cgt_verify(const cgt_game* game, const char* diagram,
                              const char* options_json, char** out_json);

/* cone_class: tm0 | supermodular0. */
CGT_API cgt_status cgt_rays(const char* cone_class, int player_count,
                            char** out_json);

/* Message describing the most recent failure on this thread; also an
 * error document mirroring it is returned through out_json where one
 * applies. */
CGT_API const char* cgt_last_error(void);
CGT_API void cgt_string_free(char* text);
CGT_API const char* cgt_version(void);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* COALGAME_H */
