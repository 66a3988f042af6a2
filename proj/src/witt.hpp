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

#include <functional>
#include <optional>

#include "linking_form.hpp"

namespace bandforms {

// A subgroup K with lambda|KxK = 0 and K = K^perp, in the coordinates of
// the form it metabolizes.
using Metabolizer = std::vector<GroupElement>;

// True iff the form admits a metabolizer; brute-force subgroup search.
bool is_metabolic(const LinkingForm &f, const Limits &lim = default_limits());

std::optional<Metabolizer> find_metabolizer(const LinkingForm &f,
                                            const Limits &lim = default_limits());

struct MetabolicSplit {
  SubgroupStructure summand;   // M inside the decomposed form's group
  LinkingForm summand_form;    // lambda restricted to M (nonsingular, metabolic)
  Metabolizer metabolizer;     // witness in summand coordinates
};

// Test hook: reorders the isotropic first-generator candidates tried by
// the split search.  Default keeps lexicographic order.
using IsotropicPicker =
    std::function<void(std::vector<GroupElement> &candidates)>;

// Split off a nontrivial summand M, generated by at most two elements,
// with lambda|M nonsingular and metabolic.  Returns nullopt when the form
// is anisotropic.  Raises ConsistencyError when isotropic elements exist
// but no such summand does (then no orthogonal anisotropic-plus-metabolic
// decomposition of the form exists at all, e.g. <1/27>).
std::optional<MetabolicSplit> split_metabolic_summand(
    const LinkingForm &f, const Limits &lim = default_limits(),
    const IsotropicPicker &picker = nullptr);

struct WittSplitLogEntry {
  mpz_class prime;
  LinkingForm summand_form;
  Metabolizer metabolizer;
};

struct WittResult {
  LinkingForm anisotropic;
  std::vector<WittSplitLogEntry> split_log;
};

struct WittOptions {
  // permutation applied to the list of primary components (test hook)
  std::vector<int> component_order;
  IsotropicPicker picker;
};

// Witt decomposition: primary decomposition, then repeated metabolic
// splitting per p-component until no isotropic element remains.  The
// anisotropic part is unique up to isometry independent of split order.
WittResult witt_decompose(const LinkingForm &f,
                          const Limits &lim = default_limits(),
                          const WittOptions &opts = {});

// Minimal number of generators of the anisotropic part.
int mu_an(const LinkingForm &f, const Limits &lim = default_limits());

// Isometry test: cyclic forms by unit scan, otherwise backtracking over
// generator images (gated by lim.isometry_cap).
bool are_isometric(const LinkingForm &a, const LinkingForm &b,
                   const Limits &lim = default_limits());

} // namespace bandforms
