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

#include <string>
#include <vector>

#include "knot_records.hpp"
#include "obstructions.hpp"

namespace bandforms {

// Dual-route obstruction check for the sum of the two-bridge knots whose
// double covers are the lens spaces L(2a-1, 2) and L(2a+1, 2), for
// a = 4 (mod 6).  Route A searches generators directly; route B runs the
// congruence argument (minus one is not a square mod 3, and not a square
// mod 2a-1 by the Jacobi symbol).  Both must agree that a single band
// move cannot unknot the sum.
struct Section5Case {
  long a = 0;
  mpz_class group_order;          // 4a^2 - 1
  bool cyclic = false;            // sum group is cyclic of that order
  bool paper_form_isometric = false; // sum form ~ <2a/(4a^2-1)>
  ObstructionResult route_a;      // expect obstructed
  bool case_plus_blocked = false; // -1 not a square mod 3
  bool case_minus_blocked = false;// jacobi(-1, 2a-1) = -1
  bool route_b_obstructed = false;
  bool pm_square_unsolvable = false; // 2a != +-x^2 mod 4a^2-1 (brute force)
  bool routes_agree = false;
  bool pass = false;
};

Section5Case family_section5_check(long a, const Limits &lim = default_limits());

// All cases a = 4 + 6k <= a_max.
std::vector<Section5Case> family_section5_scan(long a_max,
                                               const Limits &lim = default_limits());

// Double twist family C(22+8k, 62+8k): the sum with the reversed mirror
// has a certified u_nb interval of exactly [2, 2], while the summand's
// recorded gamma4s = 3 pushes its lower bound to 3.
struct Family4Case {
  int k = 0;
  std::string expression;
  mpz_class det;
  BoundsResult sum_bounds;
  BoundsResult leaf_bounds;
  ObstructionResult sum_obstruction;  // expect obstructed (non-cyclic)
  ObstructionResult leaf_obstruction; // expect obstructed (generator search)
  bool sum_interval_ok = false;
  bool leaf_lower_ok = false;
  bool pass = false;
};

Family4Case family4_check(int k, const RecordTable &table,
                          const Limits &lim = default_limits());

// Strict subadditivity cohort: two-bridge knots with bridge index 2 and
// gamma4s = 2.  For each, u_nb(K # -mirror(K)) <= 2 < 4 <= u_nb(K) +
// u_nb(-mirror(K)).
struct SubadditivityCase {
  std::string name;
  bool record_ok = false; // present with bridge 2 and gamma4s 2
  long sum_upper = -1;
  long leaf_lower = -1;
  bool strict = false;
  bool pass = false;
  std::string detail;
};

// The fixed cohort every vendored table must carry.
const std::vector<std::string> &subadditivity_cohort();

std::vector<SubadditivityCase> subadditivity_check(
    const RecordTable &table, const Limits &lim = default_limits());

struct PaperExamplesReport {
  std::vector<Family4Case> family4;        // k = 0..4
  std::vector<Section5Case> family5;       // a = 4+6k, k = 0..9
  std::vector<SubadditivityCase> cohort;
  std::vector<std::string> failures;       // human-readable failure lines
  bool cap_trouble = false;                // some section died on the cap
  bool pass = false;
};

PaperExamplesReport paper_examples(const RecordTable &table,
                                   const Limits &lim = default_limits());

} // namespace bandforms
