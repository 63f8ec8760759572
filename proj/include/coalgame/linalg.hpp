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

#ifndef COALGAME_LINALG_HPP
#define COALGAME_LINALG_HPP

#include <optional>
#include <vector>

#include "coalgame/rational.hpp"

namespace coalgame::linalg {

Rat dot(const Vec& a, const Vec& b);

bool is_zero_vec(const Vec& a);

/// Scales a rational row to primitive integers (clears denominators,
/// divides by the gcd of the numerators). The direction is preserved;
/// when `normalize_sign` is set the row is flipped so its first
/// nonzero entry is positive (only valid where the sign is free, e.g.
/// equality rows or subspace basis vectors).
Vec primitive(const Vec& row, bool normalize_sign = false);

int rank(Mat rows);

/// Greedy maximal independent subset of rows, by ascending index.
std::vector<int> independent_rows(const Mat& rows);

/// Solves sum_j lambda_j * columns[j] = target for linearly
/// independent columns; nullopt when the target is outside the span.
std::optional<Vec> solve_columns(const Mat& columns, const Vec& target);

/// Solves the square system M * y = rhs; nullopt when singular.
std::optional<Vec> solve_square(Mat m, Vec rhs);

/// Basis of {x : row . x = 0 for every row}.
Mat kernel_basis(const Mat& rows, int dim);

/// Basis of the row space (subset of the input rows).
Mat row_space_basis(const Mat& rows);

}  // namespace coalgame::linalg

#endif  // COALGAME_LINALG_HPP
