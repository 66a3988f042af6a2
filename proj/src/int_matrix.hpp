/*
  Copyright (c) 2026 the bandforms authors

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

  http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/

#pragma once

#include <gmpxx.h>
#include <string>
#include <vector>

namespace bandforms {

// Dense integer matrix over GMP integers.
class IntMatrix {
public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}

  static IntMatrix identity(int n);
  static IntMatrix diagonal(const std::vector<mpz_class> &d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  mpz_class &at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const mpz_class &at(int i, int j) const {
    return a_[static_cast<size_t>(i) * cols_ + j];
  }

  IntMatrix transposed() const;
  IntMatrix operator*(const IntMatrix &o) const;
  bool operator==(const IntMatrix &o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  std::vector<mpz_class> mul_vec(const std::vector<mpz_class> &v) const;

  void swap_rows(int i, int j);
  void swap_cols(int i, int j);
  void negate_row(int i);
  void negate_col(int j);
  void add_row_multiple(int dst, int src, const mpz_class &c); // row dst += c*row src
  void add_col_multiple(int dst, int src, const mpz_class &c); // col dst += c*col src

  std::string str() const;

private:
  int rows_, cols_;
  std::vector<mpz_class> a_;
};

// Exact determinant (Bareiss fraction-free elimination); square input.
mpz_class det(const IntMatrix &m);

struct SnfResult {
  IntMatrix s;    // diagonal, d1 | d2 | ..., nonnegative
  IntMatrix u;    // unimodular, u * m * v == s
  IntMatrix v;    // unimodular
  IntMatrix uinv; // u * uinv == I
  IntMatrix vinv; // vinv * v == I

  std::vector<mpz_class> diagonal() const;
};

// Smith normal form with transformation matrices.  Pivoting picks the
// smallest-magnitude nonzero entry with row-major tie-break so the
// transforms are reproducible across runs.
SnfResult smith_normal_form(const IntMatrix &m);

// Column-style Hermite normal form: column operations only, result spans
// the same column lattice.  Pivots are positive with zeros to their right
// and reduced entries to their left in the pivot row.
IntMatrix hermite_normal_form(const IntMatrix &m);

// Inverse of a matrix with det = ±1.
IntMatrix unimodular_inverse(const IntMatrix &m);

} // namespace bandforms
