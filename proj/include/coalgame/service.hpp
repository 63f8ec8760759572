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

#ifndef COALGAME_SERVICE_HPP
#define COALGAME_SERVICE_HPP

#include <string>

#include "coalgame/io.hpp"

namespace coalgame {

/// Command dispatch shared by the C API and the CLI. Each function
/// returns a machine-readable result document; failures surface as
/// coalgame::Error.
///
/// Options (all optional unless a command requires one):
///   "weights":  weight document        (solve probabilistic, verify)
///   "kset":     K-set document         (solve/verify nucleolus)
///   "cone":     "tm0" | "supermodular0" (decompose/verify cone)
///   "sigma":    "shapley" | "core"      (decompose/verify cone)
///   "basis":    array of game documents (decompose linear)
Json run_classify(const Game& v);
Json run_solve(const Game& v, const std::string& concept_name, const Json& options);
Json run_decompose(const Game& v, const std::string& scheme,
                   const Json& options);
Json run_verify(const Game& v, const std::string& diagram,
                const Json& options);
Json run_rays(const std::string& cone_class, int n);

/// Error document with the machine-readable code.
Json error_document(const std::string& code, const std::string& message);

}  // namespace coalgame

#endif  // COALGAME_SERVICE_HPP
