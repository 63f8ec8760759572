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

#include "coalgame/linalg.hpp"

#include <cstddef>

namespace coalgame::linalg {

Rat dot(const Vec& a, const Vec& b) {
  Rat sum(0);
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

bool is_zero_vec(const Vec& a) {
  for (const Rat& value : a) {
    if (value != 0) return false;
  }
  return true;
}

Vec primitive(const Vec& row, bool normalize_sign) {
  Int den_lcm(1);
  for (const Rat& value : row) {
    if (value != 0) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                            value.get_den().get_mpz_t());
  }
  Int num_gcd(0);
  std::vector<Int> scaled(row.size());
  for (std::size_t i = 0; i < row.size(); ++i) {
    Rat value = row[i] * Rat(den_lcm);
    scaled[i] = value.get_num();
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
            scaled[i].get_mpz_t());
  }
  if (num_gcd == 0) return Vec(row.size(), Rat(0));
  int flip = 1;
  if (normalize_sign) {
    for (const Int& value : scaled) {
      if (value != 0) {
        flip = (value < 0) ? -1 : 1;
        break;
      }
    }
  }
  Vec out(row.size());
  for (std::size_t i = 0; i < row.size(); ++i) {
    out[i] = Rat(scaled[i] * flip) / Rat(num_gcd);
  }
  return out;
}

namespace {

// Row echelon elimination; returns pivot column per reduced row and
// leaves `rows` in echelon form. Deterministic: scans rows in order.
std::vector<int> echelon(Mat& rows) {
  std::vector<int> pivot_cols;
  const std::size_t dim = rows.empty() ? 0 : rows[0].size();
  std::size_t next_row = 0;
  for (std::size_t col = 0; col < dim && next_row < rows.size(); ++col) {
    std::size_t pivot = next_row;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[next_row], rows[pivot]);
    const Rat lead = rows[next_row][col];
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next_row || rows[r][col] == 0) continue;
      const Rat factor = rows[r][col] / lead;
      for (std::size_t c = col; c < dim; ++c) {
        rows[r][c] -= factor * rows[next_row][c];
      }
    }
    pivot_cols.push_back(static_cast<int>(col));
    ++next_row;
  }
  rows.resize(next_row);
  return pivot_cols;
}

}  // namespace

int rank(Mat rows) { return static_cast<int>(echelon(rows).size()); }

std::vector<int> independent_rows(const Mat& rows) {
  std::vector<int> chosen;
  Mat basis;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Mat candidate = basis;
    candidate.push_back(rows[i]);
    if (rank(candidate) > static_cast<int>(basis.size())) {
      basis.push_back(rows[i]);
      chosen.push_back(static_cast<int>(i));
    }
  }
  return chosen;
}

std::optional<Vec> solve_columns(const Mat& columns, const Vec& target) {
  const std::size_t k = columns.size();
  const std::size_t d = target.size();
  // Augmented system [columns | target] eliminated row by row.
  Mat aug(d, Vec(k + 1, Rat(0)));
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < k; ++c) aug[r][c] = columns[c][r];
    aug[r][k] = target[r];
  }
  const std::vector<int> pivots = echelon(aug);
  Vec lambda(k, Rat(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == static_cast<int>(k)) return std::nullopt;  // 0 = nonzero
  }
  if (pivots.size() < k) return std::nullopt;  // dependent columns
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    lambda[pivots[r]] = aug[r][k] / aug[r][pivots[r]];
  }
  // With independent columns the echelon rows past rank k are all-zero
  // unless the target leaves the span, which the pivot check caught.
  return lambda;
}

std::optional<Vec> solve_square(Mat m, Vec rhs) {
  const std::size_t k = m.size();
  for (std::size_t r = 0; r < k; ++r) m[r].push_back(rhs[r]);
  const std::vector<int> pivots = echelon(m);
  if (pivots.size() != k) return std::nullopt;
  for (int p : pivots) {
    if (p == static_cast<int>(k)) return std::nullopt;
  }
  Vec y(k, Rat(0));
  for (std::size_t r = 0; r < k; ++r) {
    y[pivots[r]] = m[r][k] / m[r][pivots[r]];
  }
  return y;
}

Mat kernel_basis(const Mat& rows, int dim) {
  Mat work = rows;
  const std::vector<int> pivots = echelon(work);
  std::vector<bool> is_pivot(dim, false);
  for (int p : pivots) is_pivot[p] = true;
  Mat basis;
  for (int free_col = 0; free_col < dim; ++free_col) {
    if (is_pivot[free_col]) continue;
    Vec v(dim, Rat(0));
    v[free_col] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = -work[r][free_col] / work[r][pivots[r]];
    }
    basis.push_back(primitive(v, true));
  }
  return basis;
}

Mat row_space_basis(const Mat& rows) {
  Mat basis;
  for (int idx : independent_rows(rows)) basis.push_back(rows[idx]);
  return basis;
}

}  // namespace coalgame::linalg
