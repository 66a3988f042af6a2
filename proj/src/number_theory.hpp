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
#include <optional>
#include <vector>

#include "limits.hpp"

namespace bandforms {

// Jacobi symbol (x/n) for odd n >= 3, computed by quadratic reciprocity.
// Returns 0 exactly when gcd(x, n) > 1.
int jacobi(const mpz_class &x, const mpz_class &n);

// Exhaustive modular square root: smallest r in [0, n) with r*r = x (mod n),
// or nullopt.  Deliberately brute force; this is the independent oracle the
// fast residue tests are checked against.  Refuses n beyond sqrt_mod_cap.
std::optional<mpz_class> sqrt_mod(const mpz_class &x, const mpz_class &n,
                                  const Limits &lim = default_limits());

struct PrimePower {
  mpz_class p;
  unsigned exp;
  mpz_class power; // p^exp
};

// Trial-division factorization; intended for moduli within the caps.
std::vector<PrimePower> factorize(const mpz_class &n);

bool is_perfect_square(const mpz_class &n, mpz_class *root = nullptr);

} // namespace bandforms
