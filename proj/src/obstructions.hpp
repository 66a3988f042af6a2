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

#include <optional>
#include <string>
#include <vector>

#include "knot_expression.hpp"
#include "linking_form.hpp"

namespace bandforms {

enum class ObstructionReason {
  non_cyclic,              // H1 of the double cover is not cyclic
  no_pm_square_generator,  // no generator has self-linking +-1/det
  witness_found            // a qualifying generator exists
};

struct ObstructionResult {
  bool obstructed = false;
  ObstructionReason reason = ObstructionReason::witness_found;
  std::optional<mpz_class> witness; // unit x with lambda(x*1, x*1) = +-1/det

  std::string reason_str() const;
};

// Lickorish's criterion: a knot unknotted by a single twisted band has
// cyclic H1 of the double cover and a generator of self-linking +-1/det.
// Obstructed (with det > 1) forces at least two band moves.  The
// non-cyclic branch is enumeration free; the generator search is gated by
// the enumeration cap.
ObstructionResult lickorish_test(const LinkingForm &f,
                                 const Limits &lim = default_limits());

struct PmSquareResult {
  bool solvable = false;
  std::optional<mpz_class> witness;
  int sign = 0; // +1: witness^2 = c, -1: witness^2 = -c (mod n)
};

// Does x^2 = +-c (mod n) have a solution?  Brute-force scan with a
// fast-reject path through Jacobi symbols on the odd prime factors.
PmSquareResult pm_square_solvable(const mpz_class &c, const mpz_class &n,
                                  const Limits &lim = default_limits());

struct BoundEntry {
  std::string rule;     // stable rule id
  std::string citation; // the classical result behind the rule
  std::string inputs;   // data the application consumed
};

struct BoundReport {
  std::string quantity; // "u_nb", "gamma4s", "gamma4t"
  long lower = 0;
  std::optional<long> upper; // nullopt = unbounded
  std::vector<BoundEntry> provenance;
  std::vector<std::string> notes; // skipped rules, unresolvable data

  std::string interval_str() const;
};

struct BoundsResult {
  std::string expression;
  BoundReport unb, gamma4s, gamma4t;
};

// Applies every applicable bound rule and keeps the best lower and upper
// value per quantity; absent record data simply disables a rule, and a
// rule whose computation would exceed the enumeration cap is skipped with
// a note.  Inconsistent supplied data (lower > upper) raises InputError
// naming the clashing rules.
BoundsResult bounds(const KnotExpression &e,
                    const Limits &lim = default_limits());

} // namespace bandforms
