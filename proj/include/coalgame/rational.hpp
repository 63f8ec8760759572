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

#ifndef COALGAME_RATIONAL_HPP
#define COALGAME_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace coalgame {

/// Exact rational scalar. GMP keeps values canonical (lowest terms,
/// positive denominator), which every comparison below relies on.
using Rat = mpq_class;
using Int = mpz_class;

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;

inline Rat make_rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p/q" or "p" with an optional leading minus sign. The
/// denominator must be a positive integer literal.
Rat rat_parse(const std::string& text);

/// Canonical text form: "p/q" when the denominator is not 1, else "p".
std::string rat_str(const Rat& value);

std::string vec_str(const Vec& values);

inline bool rat_is_integer(const Rat& value) {
  return value.get_den() == 1;
}

}  // namespace coalgame

#endif  // COALGAME_RATIONAL_HPP
