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
#include <string>
#include <vector>

#include "int_matrix.hpp"
#include "limits.hpp"

namespace bandforms {

// Finite abelian group in invariant-factor form d1 | d2 | ... | dk with
// every di >= 2.  The empty list is the trivial group.
class FiniteAbelianGroup {
public:
  FiniteAbelianGroup() = default;
  explicit FiniteAbelianGroup(std::vector<mpz_class> invariant_factors);

  const std::vector<mpz_class> &factors() const { return factors_; }
  int rank() const { return static_cast<int>(factors_.size()); }
  bool is_trivial() const { return factors_.empty(); }
  mpz_class order() const;

  bool operator==(const FiniteAbelianGroup &o) const {
    return factors_ == o.factors_;
  }

  std::string str() const; // "Z_6 + Z_12", "0" for trivial

private:
  std::vector<mpz_class> factors_;
};

// Number of invariant factors = minimal size of a generating set.
inline int min_generators(const FiniteAbelianGroup &g) { return g.rank(); }

// Element as a coordinate vector against the invariant-factor basis,
// coordinate i reduced mod di.
struct GroupElement {
  std::vector<mpz_class> coords;

  bool operator==(const GroupElement &o) const { return coords == o.coords; }
  bool operator<(const GroupElement &o) const { return coords < o.coords; }
  std::string str() const;
};

GroupElement reduce(const FiniteAbelianGroup &g, std::vector<mpz_class> coords);
GroupElement zero_element(const FiniteAbelianGroup &g);
GroupElement add(const FiniteAbelianGroup &g, const GroupElement &a,
                 const GroupElement &b);
GroupElement scale(const FiniteAbelianGroup &g, const mpz_class &n,
                   const GroupElement &a);
bool is_zero(const GroupElement &a);
mpz_class element_order(const FiniteAbelianGroup &g, const GroupElement &a);

// Deterministic lexicographic element stream (odometer, last coordinate
// fastest).  Construction refuses groups larger than the enumeration cap.
class ElementStream {
public:
  ElementStream(const FiniteAbelianGroup &g, const Limits &lim = default_limits());
  std::optional<GroupElement> next();

private:
  const FiniteAbelianGroup &g_;
  GroupElement cur_;
  bool done_;
  bool first_;
};

std::vector<GroupElement> enumerate_elements(const FiniteAbelianGroup &g,
                                             const Limits &lim = default_limits());

struct Subgroup {
  FiniteAbelianGroup ambient;
  std::vector<GroupElement> generators;
};

struct SubgroupStructure {
  FiniteAbelianGroup group;          // invariant factors of the subgroup
  std::vector<GroupElement> basis;   // generators in ambient coordinates
                                     // realizing those factors
  mpz_class order;
};

// Invariant factors and a matching basis for the subgroup generated by
// `generators`, by lattice arithmetic (HNF of generators + relations,
// then SNF of the inclusion); no element enumeration.
SubgroupStructure subgroup_structure(const FiniteAbelianGroup &ambient,
                                     const std::vector<GroupElement> &generators);

// Canonical key identifying the subgroup generated by `generators`
// (HNF of the generator + relation lattice).
std::string subgroup_key(const FiniteAbelianGroup &ambient,
                         const std::vector<GroupElement> &generators);

struct Presentation {
  FiniteAbelianGroup group;
  // column j = the j-th new (invariant-factor) generator written in the
  // old generator coordinates
  IntMatrix new_basis_in_old;
  // row i = the coordinate functional sending an old-coordinate vector to
  // new coordinate i (reduce mod factors()[i] afterwards)
  IntMatrix old_to_new;
};

// Cokernel of a relation matrix (rows are relations, columns index the
// abstract generators).  Zero elementary divisors mean free summands,
// which cannot occur for the groups handled here; they raise InputError.
Presentation from_presentation(const IntMatrix &relations);

struct PrimaryComponent {
  mpz_class prime;
  FiniteAbelianGroup group;          // the p-group, invariant factors p^e
  std::vector<int> ambient_index;    // which ambient factor each component
                                     // coordinate came from
  std::vector<GroupElement> embedded_basis; // component generators as
                                            // ambient elements
};

// CRT splitting into p-primary components, with maps both ways.
std::vector<PrimaryComponent> primary_decomposition(const FiniteAbelianGroup &g);

// Project an ambient element into a primary component's coordinates.
GroupElement project_to_component(const FiniteAbelianGroup &ambient,
                                  const PrimaryComponent &comp,
                                  const GroupElement &a);

// Lift a component element back into the ambient group.
GroupElement embed_from_component(const FiniteAbelianGroup &ambient,
                                  const PrimaryComponent &comp,
                                  const GroupElement &a);

} // namespace bandforms
