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
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bandforms {

// Externally supplied invariants of a named knot.  Everything here is
// trusted input with a provenance string; the engine never invents or
// overrides these values.  All fields are invariant under mirroring and
// reversal, so one record serves a knot and its mirror alike.
struct KnotRecord {
  std::string name;
  std::optional<mpz_class> det;
  std::optional<int> bridge;
  std::optional<int> gordian_u;
  std::optional<int> gamma4s;
  std::optional<int> gamma4t;
  std::optional<std::pair<mpz_class, mpz_class>> fraction; // two-bridge p/q
  std::optional<std::string> pd;                           // PD code alias
  std::optional<int> fusion_mm; // fusion number of K # -mirror(K)
  std::map<int, int> mu_r;      // r -> min generators of H1 of the r-fold cover
  std::string src;              // provenance (required)
};

class RecordTable {
public:
  RecordTable() = default;

  static RecordTable parse(const std::string &text);
  static RecordTable load_file(const std::string &path);
  // The vendored table compiled into the library.
  static const RecordTable &builtin();
  static const char *builtin_text();

  const KnotRecord *find(const std::string &name) const;
  // Match a two-bridge fraction p/q against the recorded fractions, up to
  // the unoriented two-bridge equivalence and mirroring (q' = +-q or
  // q*q' = +-1 mod p); sound because all record fields are mirror
  // invariant.
  const KnotRecord *match_fraction(const mpz_class &p, const mpz_class &q) const;

  const std::vector<KnotRecord> &records() const { return records_; }
  int version() const { return version_; }

private:
  std::vector<KnotRecord> records_;
  int version_ = 0;
};

} // namespace bandforms
