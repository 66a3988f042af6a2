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

#include "number_theory.hpp"

#include "errors.hpp"

namespace bandforms {

int jacobi(const mpz_class &x, const mpz_class &n) {
  if (n < 3 || n % 2 == 0)
    throw InputError("jacobi: modulus must be odd and >= 3, got " + n.get_str());
  mpz_class a, m = n;
  mpz_fdiv_r(a.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      mpz_class r8 = m % 8;
      if (r8 == 3 || r8 == 5) result = -result;
    }
    std::swap(a, m);
    if (a % 4 == 3 && m % 4 == 3) result = -result;
    a %= m;
  }
  return m == 1 ? result : 0;
}

std::optional<mpz_class> sqrt_mod(const mpz_class &x, const mpz_class &n,
                                  const Limits &lim) {
  if (n < 2) throw InputError("sqrt_mod: modulus must be >= 2");
  if (n > cap_as_mpz(lim.sqrt_mod_cap))
    throw CapExceeded("sqrt_mod: modulus " + n.get_str() +
                      " exceeds the enumeration bound " +
                      std::to_string(lim.sqrt_mod_cap));
  mpz_class target;
  mpz_fdiv_r(target.get_mpz_t(), x.get_mpz_t(), n.get_mpz_t());
  // cap <= 1e8 keeps everything inside 64 bits
  unsigned long long nn = n.get_ui();
  unsigned long long tt = target.get_ui();
  for (unsigned long long r = 0; r < nn; ++r) {
    if (static_cast<unsigned long long>(
            (static_cast<unsigned __int128>(r) * r) % nn) == tt)
      return mpz_class(static_cast<unsigned long>(r));
  }
  return std::nullopt;
}

std::vector<PrimePower> factorize(const mpz_class &n) {
  if (n < 1) throw InputError("factorize: expected a positive integer");
  std::vector<PrimePower> out;
  mpz_class rest = n;
  auto strip = [&](const mpz_class &p) {
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e) {
      mpz_class pw;
      mpz_pow_ui(pw.get_mpz_t(), p.get_mpz_t(), e);
      out.push_back({p, e, pw});
    }
  };
  strip(2);
  for (mpz_class p = 3; p * p <= rest; p += 2) strip(p);
  if (rest > 1) out.push_back({rest, 1, rest});
  return out;
}

bool is_perfect_square(const mpz_class &n, mpz_class *root) {
  if (n < 0) return false;
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  if (r * r == n) {
    if (root) *root = r;
    return true;
  }
  return false;
}

} // namespace bandforms
