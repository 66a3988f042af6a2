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

#include "int_matrix.hpp"

#include <algorithm>
#include <sstream>

#include "errors.hpp"

namespace bandforms {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<mpz_class> &d) {
  int n = static_cast<int>(d.size());
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = d[i];
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix &o) const {
  if (cols_ != o.rows_) throw InputError("matrix product dimension mismatch");
  IntMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const mpz_class &aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
    }
  return r;
}

std::vector<mpz_class> IntMatrix::mul_vec(const std::vector<mpz_class> &v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw InputError("matrix-vector dimension mismatch");
  std::vector<mpz_class> r(rows_, 0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
  return r;
}

void IntMatrix::swap_rows(int i, int j) {
  if (i == j) return;
  for (int k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMatrix::swap_cols(int i, int j) {
  if (i == j) return;
  for (int k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

void IntMatrix::negate_row(int i) {
  for (int k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
}

void IntMatrix::negate_col(int j) {
  for (int k = 0; k < rows_; ++k) at(k, j) = -at(k, j);
}

void IntMatrix::add_row_multiple(int dst, int src, const mpz_class &c) {
  if (c == 0) return;
  for (int k = 0; k < cols_; ++k) at(dst, k) += c * at(src, k);
}

void IntMatrix::add_col_multiple(int dst, int src, const mpz_class &c) {
  if (c == 0) return;
  for (int k = 0; k < rows_; ++k) at(k, dst) += c * at(k, src);
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

mpz_class det(const IntMatrix &m) {
  if (m.rows() != m.cols()) throw InputError("determinant of non-square matrix");
  int n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        mpz_class t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        mpz_divexact(a.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

std::vector<mpz_class> SnfResult::diagonal() const {
  std::vector<mpz_class> d;
  int n = std::min(s.rows(), s.cols());
  d.reserve(n);
  for (int i = 0; i < n; ++i) d.push_back(s.at(i, i));
  return d;
}

namespace {

// Elementary operations applied to S are mirrored on U/V and their
// tracked inverses, preserving u*m*v == s and u*uinv == I, vinv*v == I.
struct SnfWork {
  IntMatrix s, u, v, uinv, vinv;

  void row_swap(int i, int j) {
    s.swap_rows(i, j);
    u.swap_rows(i, j);
    uinv.swap_cols(i, j);
  }
  void col_swap(int i, int j) {
    s.swap_cols(i, j);
    v.swap_cols(i, j);
    vinv.swap_rows(i, j);
  }
  void row_negate(int i) {
    s.negate_row(i);
    u.negate_row(i);
    uinv.negate_col(i);
  }
  void row_add(int dst, int src, const mpz_class &c) {
    s.add_row_multiple(dst, src, c);
    u.add_row_multiple(dst, src, c);
    uinv.add_col_multiple(src, dst, -c);
  }
  void col_add(int dst, int src, const mpz_class &c) {
    s.add_col_multiple(dst, src, c);
    v.add_col_multiple(dst, src, c);
    vinv.add_row_multiple(src, dst, -c);
  }
};

// Smallest nonzero |entry| in the trailing submatrix, row-major tie-break.
bool find_pivot(const IntMatrix &s, int t, int &pi, int &pj) {
  bool found = false;
  mpz_class best;
  for (int i = t; i < s.rows(); ++i)
    for (int j = t; j < s.cols(); ++j) {
      if (s.at(i, j) == 0) continue;
      mpz_class mag = abs(s.at(i, j));
      if (!found || mag < best) {
        found = true;
        best = mag;
        pi = i;
        pj = j;
      }
    }
  return found;
}

} // namespace

SnfResult smith_normal_form(const IntMatrix &m) {
  SnfWork w;
  w.s = m;
  w.u = IntMatrix::identity(m.rows());
  w.uinv = IntMatrix::identity(m.rows());
  w.v = IntMatrix::identity(m.cols());
  w.vinv = IntMatrix::identity(m.cols());

  int n = std::min(m.rows(), m.cols());
  for (int t = 0; t < n; ++t) {
    int pi, pj;
    if (!find_pivot(w.s, t, pi, pj)) break;
    w.row_swap(t, pi);
    w.col_swap(t, pj);

    for (;;) {
      // clear column t below the pivot
      bool dirty = false;
      for (int i = t + 1; i < w.s.rows(); ++i) {
        if (w.s.at(i, t) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), w.s.at(i, t).get_mpz_t(),
                   w.s.at(t, t).get_mpz_t());
        w.row_add(i, t, -q);
        if (w.s.at(i, t) != 0) dirty = true;
      }
      // clear row t right of the pivot
      for (int j = t + 1; j < w.s.cols(); ++j) {
        if (w.s.at(t, j) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), w.s.at(t, j).get_mpz_t(),
                   w.s.at(t, t).get_mpz_t());
        w.col_add(j, t, -q);
        if (w.s.at(t, j) != 0) dirty = true;
      }
      if (dirty) {
        // remainders became the new smallest entries; re-pivot
        if (!find_pivot(w.s, t, pi, pj)) break;
        w.row_swap(t, pi);
        w.col_swap(t, pj);
        continue;
      }
      // pivot divides everything it cleared; enforce divisibility on the
      // trailing block before moving on
      bool fixed = false;
      for (int i = t + 1; i < w.s.rows() && !fixed; ++i)
        for (int j = t + 1; j < w.s.cols() && !fixed; ++j) {
          if (w.s.at(i, j) % w.s.at(t, t) != 0) {
            w.row_add(t, i, 1);
            fixed = true;
          }
        }
      if (!fixed) break;
    }
    if (w.s.at(t, t) < 0) w.row_negate(t);
  }

  return SnfResult{w.s, w.u, w.v, w.uinv, w.vinv};
}

IntMatrix hermite_normal_form(const IntMatrix &m) {
  IntMatrix h = m;
  int rows = h.rows(), cols = h.cols();
  std::vector<std::pair<int, int>> pivots; // (row, col)
  int c = 0;
  for (int r = 0; r < rows && c < cols; ++r) {
    for (;;) {
      // smallest-magnitude nonzero entry in row r among columns >= c
      int best = -1;
      mpz_class bestmag;
      for (int j = c; j < cols; ++j) {
        if (h.at(r, j) == 0) continue;
        mpz_class mag = abs(h.at(r, j));
        if (best < 0 || mag < bestmag) {
          best = j;
          bestmag = mag;
        }
      }
      if (best < 0) break; // no pivot in this row
      h.swap_cols(c, best);
      bool clean = true;
      for (int j = c + 1; j < cols; ++j) {
        if (h.at(r, j) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), h.at(r, j).get_mpz_t(), h.at(r, c).get_mpz_t());
        h.add_col_multiple(j, c, -q);
        if (h.at(r, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h.at(r, c) != 0) {
      if (h.at(r, c) < 0) h.negate_col(c);
      pivots.push_back({r, c});
      ++c;
    }
  }
  // reduce entries left of each pivot in its pivot row
  for (auto [r, p] : pivots) {
    for (int j = 0; j < p; ++j) {
      if (h.at(r, j) == 0) continue;
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), h.at(r, j).get_mpz_t(), h.at(r, p).get_mpz_t());
      h.add_col_multiple(j, p, -q);
    }
  }
  return h;
}

IntMatrix unimodular_inverse(const IntMatrix &m) {
  if (m.rows() != m.cols()) throw InputError("inverse of non-square matrix");
  SnfResult r = smith_normal_form(m);
  for (const auto &d : r.diagonal())
    if (d != 1)
      throw InputError("unimodular_inverse: matrix is not unimodular");
  return r.v * r.u;
}

} // namespace bandforms
