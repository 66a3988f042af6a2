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

namespace bandforms {

// Resource caps for the brute-force searches.  Everything that walks a
// whole group checks enumeration_cap against the group order first and
// refuses (CapExceeded) rather than starting an open-ended scan.
struct Limits {
  unsigned long long enumeration_cap = 1'000'000;
  // Generic isometry backtracking is much more expensive per element;
  // cyclic forms use a unit scan gated by enumeration_cap instead.
  unsigned long long isometry_cap = 10'000;
  // Hard bound for the exhaustive modular square root oracle.
  unsigned long long sqrt_mod_cap = 100'000'000;
};

inline const Limits &default_limits() {
  static const Limits l{};
  return l;
}

// gmpxx lacks an unsigned long long constructor overload
inline mpz_class cap_as_mpz(unsigned long long cap) {
  return mpz_class(static_cast<unsigned long>(cap));
}

} // namespace bandforms
