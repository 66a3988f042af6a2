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

#include "knot_records.hpp"
#include "linking_form.hpp"
#include "pd_diagram.hpp"

namespace bandforms {

enum class LeafKind { two_bridge, goeritz, named };

// One prime summand with its mirror/reverse markers.  Mirror and reverse
// are involutions, so two flags per leaf normalize any marker nesting;
// markers distribute over connected sums when flattening.
struct KnotLeaf {
  LeafKind kind = LeafKind::named;
  mpz_class p, q;        // two_bridge fraction, 0 < q < p (or p = q = 1: unknot)
  IntMatrix goeritz;     // goeritz leaf
  std::string name;      // display name; lookup key for named leaves
  bool mirrored = false;
  bool reversed = false;
  const KnotRecord *record = nullptr; // resolved invariant data, if any

  std::string display() const;
  // identity key ignoring markers is display(); full key includes them
  std::string key() const;
  std::string partner_key() const; // key with both markers toggled
};

// Normalized connected-sum expression: a flat list of marked leaves.
struct KnotExpression {
  std::vector<KnotLeaf> summands;

  bool is_sum() const { return summands.size() >= 2; }
  std::string display() const;
};

// Grammar:  expr := term ('#' term)* ;
//           term := 'K(' p '/' q ')' | 'C(' m ',' n ')' | 'pd{' PD '}'
//                 | 'm(' expr ')' | 'r(' expr ')' | '(' expr ')' | NAME
// NAME tokens come from the record table.  Two-bridge leaves are matched
// against recorded fractions to attach invariant data.
KnotExpression parse_expression(const std::string &text,
                                const RecordTable &table);

// The double twist knot C(m, n) as a two-bridge leaf with fraction
// (mn+1)/n normalized to 0 < q < p; requires at least one of m, n even.
KnotLeaf two_bridge_of_double_twist(const mpz_class &m, const mpz_class &n);

// Linking form of the double branched cover: cyclic <q/p> per two-bridge
// leaf, Goeritz form per diagram leaf, negation per mirror marker,
// direct sum over the summands.  Reversal acts trivially.
LinkingForm double_cover_form(const KnotExpression &e);
LinkingForm double_cover_form(const KnotLeaf &leaf);

mpz_class determinant(const KnotExpression &e);

// If the summands split into J and mirror(reverse(J)) as multisets
// (purely syntactic matching), returns J.
std::optional<KnotExpression> detect_k_minus_mirror(const KnotExpression &e);

// Schubert additivity: 1 + sum of (bridge - 1) over summands; absent when
// any summand lacks bridge data.
std::optional<int> bridge_index(const KnotExpression &e);
std::optional<int> leaf_bridge(const KnotLeaf &leaf);

} // namespace bandforms
