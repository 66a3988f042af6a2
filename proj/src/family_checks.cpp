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

#include "family_checks.hpp"

#include <algorithm>

#include "errors.hpp"
#include "number_theory.hpp"
#include "witt.hpp"

namespace bandforms {

Section5Case family_section5_check(long a, const Limits &lim) {
  if (a < 4 || a % 6 != 4)
    throw InputError("family parameter a = " + std::to_string(a) +
                     " must satisfy a >= 4 and a = 4 (mod 6)");
  Section5Case c;
  c.a = a;
  mpz_class am(a);
  mpz_class p1 = 2 * am - 1, p2 = 2 * am + 1, n = 4 * am * am - 1;
  c.group_order = n;

  LinkingForm sum =
      direct_sum(LinkingForm::cyclic(2, p1), LinkingForm::cyclic(2, p2));
  c.cyclic = sum.group().rank() == 1 && sum.order() == n;
  c.paper_form_isometric =
      c.cyclic && are_isometric(sum, LinkingForm::cyclic(2 * am, n), lim);

  // route A: direct generator search
  c.route_a = lickorish_test(sum, lim);

  // route B: the congruence argument.  A single-band unknotting would give
  // 2a = +-x^2 mod 4a^2-1, i.e. 1 = +-x^2 mod 2a-1 and -1 = +-x^2 mod 2a+1
  // with one common sign.  Plus sign: -1 must be a square mod 3 (3 divides
  // 2a+1); minus sign: -1 must be a square mod 2a-1.
  c.case_plus_blocked = (p2 % 3 == 0) && !sqrt_mod(-1, 3, lim).has_value();
  c.case_minus_blocked = jacobi(-1, p1) == -1;
  c.route_b_obstructed = c.case_plus_blocked && c.case_minus_blocked;

  // the original congruence, brute force
  c.pm_square_unsolvable = !pm_square_solvable(2 * am, n, lim).solvable;

  c.routes_agree = c.route_a.obstructed == c.route_b_obstructed &&
                   c.route_a.obstructed == c.pm_square_unsolvable;
  c.pass = c.cyclic && c.paper_form_isometric && c.route_a.obstructed &&
           c.route_b_obstructed && c.pm_square_unsolvable && c.routes_agree;
  return c;
}

std::vector<Section5Case> family_section5_scan(long a_max, const Limits &lim) {
  if (a_max < 4)
    throw InputError("family scan needs a_max >= 4");
  std::vector<Section5Case> out;
  for (long a = 4; a <= a_max; a += 6) out.push_back(family_section5_check(a, lim));
  return out;
}

Family4Case family4_check(int k, const RecordTable &table, const Limits &lim) {
  if (k < 0) throw InputError("family index k must be >= 0");
  Family4Case c;
  c.k = k;
  long m = 22 + 8L * k, n = 62 + 8L * k;
  std::string leaf = "C(" + std::to_string(m) + "," + std::to_string(n) + ")";
  c.expression = leaf + " # m(r(" + leaf + "))";

  KnotExpression sum_expr = parse_expression(c.expression, table);
  KnotExpression leaf_expr = parse_expression(leaf, table);
  c.det = determinant(leaf_expr);

  c.sum_bounds = bounds(sum_expr, lim);
  c.leaf_bounds = bounds(leaf_expr, lim);
  c.sum_obstruction = lickorish_test(double_cover_form(sum_expr), lim);
  c.leaf_obstruction = lickorish_test(double_cover_form(leaf_expr), lim);

  c.sum_interval_ok = c.sum_bounds.unb.lower == 2 && c.sum_bounds.unb.upper &&
                      *c.sum_bounds.unb.upper == 2;
  c.leaf_lower_ok = c.leaf_bounds.unb.lower >= 3;
  c.pass = c.sum_interval_ok && c.leaf_lower_ok && c.sum_obstruction.obstructed &&
           c.sum_obstruction.reason == ObstructionReason::non_cyclic &&
           c.leaf_obstruction.obstructed;
  return c;
}

const std::vector<std::string> &subadditivity_cohort() {
  static const std::vector<std::string> cohort = {
      "4_1",   "6_3",   "7_5",   "7_7",   "8_1",   "8_2",   "8_12",  "8_13",
      "9_2",   "9_10",  "9_11",  "9_12",  "9_14",  "9_18",  "9_20",  "10_2",
      "10_5",  "10_9",  "10_10", "10_13", "10_14", "10_18", "10_19", "10_25",
      "10_26", "10_28", "10_32", "10_33", "10_34", "10_36", "10_37"};
  return cohort;
}

namespace {

SubadditivityCase run_subadditivity_case(const std::string &name,
                                         const RecordTable &table,
                                         const Limits &lim) {
  SubadditivityCase c;
  c.name = name;
  const KnotRecord *rec = table.find(name);
  if (!rec || !rec->bridge || *rec->bridge != 2 || !rec->gamma4s ||
      *rec->gamma4s != 2) {
    c.record_ok = false;
    c.detail = "record missing or without bridge = 2 and gamma4s = 2";
    return c;
  }
  c.record_ok = true;
  BoundsResult sum, leaf, mirror;
  try {
    sum = bounds(parse_expression(name + " # m(r(" + name + "))", table), lim);
    leaf = bounds(parse_expression(name, table), lim);
    mirror = bounds(parse_expression("m(r(" + name + "))", table), lim);
  } catch (const CapExceeded &) {
    throw;
  } catch (const Error &err) {
    c.detail = err.what();
    return c;
  }
  if (!sum.unb.upper) {
    c.detail = "no upper bound certified for the sum";
    return c;
  }
  c.sum_upper = *sum.unb.upper;
  c.leaf_lower = std::min(leaf.unb.lower, mirror.unb.lower);
  c.strict = c.sum_upper < leaf.unb.lower + mirror.unb.lower;
  c.pass = c.sum_upper <= 2 && c.leaf_lower >= 2 && c.strict;
  if (!c.pass)
    c.detail = "sum upper " + std::to_string(c.sum_upper) + ", leaf lowers " +
               std::to_string(leaf.unb.lower) + " and " +
               std::to_string(mirror.unb.lower);
  return c;
}

} // namespace

std::vector<SubadditivityCase> subadditivity_check(const RecordTable &table,
                                                   const Limits &lim) {
  std::vector<SubadditivityCase> out;
  for (const auto &name : subadditivity_cohort())
    out.push_back(run_subadditivity_case(name, table, lim));
  // any further qualifying records beyond the fixed cohort
  for (const auto &rec : table.records()) {
    if (std::find(subadditivity_cohort().begin(), subadditivity_cohort().end(),
                  rec.name) != subadditivity_cohort().end())
      continue;
    if (rec.bridge && *rec.bridge == 2 && rec.gamma4s && *rec.gamma4s == 2)
      out.push_back(run_subadditivity_case(rec.name, table, lim));
  }
  return out;
}

PaperExamplesReport paper_examples(const RecordTable &table, const Limits &lim) {
  PaperExamplesReport rep;
  for (int k = 0; k <= 4; ++k) {
    try {
      rep.family4.push_back(family4_check(k, table, lim));
      if (!rep.family4.back().pass)
        rep.failures.push_back("double-twist family k = " + std::to_string(k) +
                               ": expected verdicts not reproduced");
    } catch (const CapExceeded &err) {
      rep.cap_trouble = true;
      rep.failures.push_back("double-twist family k = " + std::to_string(k) +
                             ": " + err.what());
    } catch (const Error &err) {
      rep.failures.push_back("double-twist family k = " + std::to_string(k) +
                             ": " + err.what());
    }
  }
  for (long a = 4; a <= 58; a += 6) {
    try {
      rep.family5.push_back(family_section5_check(a, lim));
      if (!rep.family5.back().pass)
        rep.failures.push_back("lens-sum family a = " + std::to_string(a) +
                               ": expected verdicts not reproduced");
    } catch (const CapExceeded &err) {
      rep.cap_trouble = true;
      rep.failures.push_back("lens-sum family a = " + std::to_string(a) +
                             ": " + err.what());
    } catch (const Error &err) {
      rep.failures.push_back("lens-sum family a = " + std::to_string(a) +
                             ": " + err.what());
    }
  }
  try {
    rep.cohort = subadditivity_check(table, lim);
    for (const auto &c : rep.cohort)
      if (!c.pass)
        rep.failures.push_back("strict subadditivity for " + c.name + ": " +
                               c.detail);
  } catch (const CapExceeded &err) {
    rep.cap_trouble = true;
    rep.failures.push_back(std::string("strict subadditivity cohort: ") +
                           err.what());
  } catch (const Error &err) {
    rep.failures.push_back(std::string("strict subadditivity cohort: ") +
                           err.what());
  }
  rep.pass = rep.failures.empty();
  return rep;
}

} // namespace bandforms
