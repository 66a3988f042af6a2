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

#include "abelian_group.hpp"
#include "rational_mod_one.hpp"

namespace bandforms {

// Symmetric bilinear pairing G x G -> Q/Z, stored as a Gram matrix against
// the invariant-factor generators.  Construction checks symmetry and
// well-definedness (di * gram[i][j] integral).
class LinkingForm {
public:
  LinkingForm(); // trivial form on the trivial group
  LinkingForm(FiniteAbelianGroup group,
              std::vector<std::vector<RationalModOne>> gram);

  // <q/p> on Z_p; p >= 1 odd and coprime to q (p = 1 gives the trivial form).
  static LinkingForm cyclic(const mpz_class &q, const mpz_class &p);

  // Form presented by a symmetric relation matrix `relations` together with
  // pairings `gram` of the presentation generators; both are transported to
  // the invariant-factor coordinates of the cokernel.
  static LinkingForm from_presentation_gram(
      const IntMatrix &relations,
      const std::vector<std::vector<RationalModOne>> &gram);

  const FiniteAbelianGroup &group() const { return group_; }
  const std::vector<std::vector<RationalModOne>> &gram() const { return gram_; }
  mpz_class order() const { return group_.order(); }

  RationalModOne evaluate(const GroupElement &a, const GroupElement &b) const;

  LinkingForm negated() const;

  std::string str() const;

private:
  FiniteAbelianGroup group_;
  std::vector<std::vector<RationalModOne>> gram_;
};

LinkingForm direct_sum(const LinkingForm &a, const LinkingForm &b);

// The hyperbolic pairing [[0, 1/n], [1/n, 0]] on Z_n + Z_n.
LinkingForm hyperbolic_plane(const mpz_class &n);

// Radical { g : lambda(g, h) = 0 for all h }, by lattice arithmetic.
SubgroupStructure radical(const LinkingForm &f);

bool is_nonsingular(const LinkingForm &f);

// Orthogonal complement of the subgroup generated by `gens`.
SubgroupStructure orthogonal_complement(const LinkingForm &f,
                                        const std::vector<GroupElement> &gens);

// The restriction of the form to a subgroup, expressed against the
// subgroup's own invariant-factor basis.
LinkingForm restrict_to(const LinkingForm &f, const SubgroupStructure &s);

// Lexicographically first nonzero g with lambda(g, g) = 0.
std::optional<GroupElement> find_isotropic(const LinkingForm &f,
                                           const Limits &lim = default_limits());

// Exhaustive check that no nonzero isotropic element exists.
bool is_anisotropic(const LinkingForm &f, const Limits &lim = default_limits());

} // namespace bandforms
