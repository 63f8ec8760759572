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

#include "coalgame/rational.hpp"

#include <cctype>

#include "coalgame/errors.hpp"

namespace coalgame {

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
  if (from >= to) return false;
  for (std::size_t i = from; i < to; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rat rat_parse(const std::string& text) {
  const auto slash = text.find('/');
  std::string num = (slash == std::string::npos) ? text : text.substr(0, slash);
  std::size_t num_start = 0;
  if (!num.empty() && num[0] == '-') num_start = 1;
  if (!all_digits(num, num_start, num.size())) {
    fail(Errc::ParseError, "invalid rational literal '" + text + "'");
  }
  if (slash != std::string::npos) {
    if (!all_digits(text, slash + 1, text.size())) {
      fail(Errc::ParseError, "invalid rational literal '" + text + "'");
    }
  }
  Rat q;
  if (q.set_str(text, 10) != 0) {
    fail(Errc::ParseError, "invalid rational literal '" + text + "'");
  }
  if (q.get_den() == 0) {
    fail(Errc::ParseError, "zero denominator in '" + text + "'");
  }
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& value) { return value.get_str(); }

std::string vec_str(const Vec& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += rat_str(values[i]);
  }
  out += ")";
  return out;
}

}  // namespace coalgame
