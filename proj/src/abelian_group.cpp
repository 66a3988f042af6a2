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

#include "abelian_group.hpp"

#include <algorithm>
#include <sstream>

#include "errors.hpp"
#include "number_theory.hpp"

namespace bandforms {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<mpz_class> invariant_factors)
    : factors_(std::move(invariant_factors)) {
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2)
      throw InputError("invariant factor below 2");
    if (i > 0 && factors_[i] % factors_[i - 1] != 0)
      throw InputError("invariant factors violate the divisibility chain");
  }
}

mpz_class FiniteAbelianGroup::order() const {
  mpz_class o = 1;
  for (const auto &d : factors_) o *= d;
  return o;
}

std::string FiniteAbelianGroup::str() const {
  if (factors_.empty()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < factors_.size(); ++i)
    os << (i ? " + " : "") << "Z_" << factors_[i].get_str();
  return os.str();
}

std::string GroupElement::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < coords.size(); ++i)
    os << (i ? "," : "") << coords[i].get_str();
  os << ")";
  return os.str();
}

GroupElement reduce(const FiniteAbelianGroup &g, std::vector<mpz_class> coords) {
  if (coords.size() != static_cast<size_t>(g.rank()))
    throw InputError("element coordinate count does not match group rank");
  for (int i = 0; i < g.rank(); ++i) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), coords[i].get_mpz_t(),
               g.factors()[i].get_mpz_t());
    coords[i] = r;
  }
  return GroupElement{std::move(coords)};
}

GroupElement zero_element(const FiniteAbelianGroup &g) {
  return GroupElement{std::vector<mpz_class>(g.rank(), 0)};
}

GroupElement add(const FiniteAbelianGroup &g, const GroupElement &a,
                 const GroupElement &b) {
  std::vector<mpz_class> c(g.rank());
  for (int i = 0; i < g.rank(); ++i) c[i] = a.coords[i] + b.coords[i];
  return reduce(g, std::move(c));
}

GroupElement scale(const FiniteAbelianGroup &g, const mpz_class &n,
                   const GroupElement &a) {
  std::vector<mpz_class> c(g.rank());
  for (int i = 0; i < g.rank(); ++i) c[i] = n * a.coords[i];
  return reduce(g, std::move(c));
}

bool is_zero(const GroupElement &a) {
  for (const auto &c : a.coords)
    if (c != 0) return false;
  return true;
}

mpz_class element_order(const FiniteAbelianGroup &g, const GroupElement &a) {
  mpz_class ord = 1;
  for (int i = 0; i < g.rank(); ++i) {
    if (a.coords[i] == 0) continue;
    mpz_class gcd;
    mpz_gcd(gcd.get_mpz_t(), a.coords[i].get_mpz_t(),
            g.factors()[i].get_mpz_t());
    mpz_class o = g.factors()[i] / gcd;
    mpz_lcm(ord.get_mpz_t(), ord.get_mpz_t(), o.get_mpz_t());
  }
  return ord;
}

ElementStream::ElementStream(const FiniteAbelianGroup &g, const Limits &lim)
    : g_(g), cur_(zero_element(g)), done_(false), first_(true) {
  if (g.order() > cap_as_mpz(lim.enumeration_cap))
    throw CapExceeded("group of order " + g.order().get_str() +
                      " exceeds the enumeration cap " +
                      std::to_string(lim.enumeration_cap));
}

std::optional<GroupElement> ElementStream::next() {
  if (done_) return std::nullopt;
  if (first_) {
    first_ = false;
    return cur_;
  }
  for (int i = g_.rank() - 1; i >= 0; --i) {
    cur_.coords[i] += 1;
    if (cur_.coords[i] < g_.factors()[i]) return cur_;
    cur_.coords[i] = 0;
  }
  done_ = true;
  return std::nullopt;
}

std::vector<GroupElement> enumerate_elements(const FiniteAbelianGroup &g,
                                             const Limits &lim) {
  ElementStream s(g, lim);
  std::vector<GroupElement> out;
  while (auto e = s.next()) out.push_back(*e);
  return out;
}

namespace {

// Columns of the lattice presenting the subgroup: the generators together
// with the ambient relations diag(d).
IntMatrix subgroup_lattice(const FiniteAbelianGroup &ambient,
                           const std::vector<GroupElement> &generators) {
  int k = ambient.rank();
  int t = static_cast<int>(generators.size());
  IntMatrix a(k, t + k);
  for (int j = 0; j < t; ++j) {
    if (static_cast<int>(generators[j].coords.size()) != k)
      throw InputError("subgroup generator has wrong coordinate count");
    for (int i = 0; i < k; ++i) a.at(i, j) = generators[j].coords[i];
  }
  for (int i = 0; i < k; ++i) a.at(i, t + i) = ambient.factors()[i];
  return a;
}

// Keep only the pivot columns of a column-HNF matrix (drop zero columns).
IntMatrix nonzero_columns(const IntMatrix &h) {
  std::vector<int> keep;
  for (int j = 0; j < h.cols(); ++j) {
    bool nz = false;
    for (int i = 0; i < h.rows(); ++i)
      if (h.at(i, j) != 0) {
        nz = true;
        break;
      }
    if (nz) keep.push_back(j);
  }
  IntMatrix out(h.rows(), static_cast<int>(keep.size()));
  for (size_t j = 0; j < keep.size(); ++j)
    for (int i = 0; i < h.rows(); ++i) out.at(i, static_cast<int>(j)) = h.at(i, keep[j]);
  return out;
}

// Exact solve H*X = B for lower-triangular H with nonzero diagonal;
// divisions are exact by construction (B's columns lie in the lattice).
IntMatrix solve_lower_triangular(const IntMatrix &h, const IntMatrix &b) {
  int k = h.rows();
  IntMatrix x(k, b.cols());
  for (int j = 0; j < b.cols(); ++j) {
    for (int i = 0; i < k; ++i) {
      mpz_class acc = b.at(i, j);
      for (int t = 0; t < i; ++t) acc -= h.at(i, t) * x.at(t, j);
      if (h.at(i, i) == 0 || acc % h.at(i, i) != 0)
        throw ConsistencyError("lattice solve: target not in the lattice");
      x.at(i, j) = acc / h.at(i, i);
    }
  }
  return x;
}

} // namespace

SubgroupStructure subgroup_structure(const FiniteAbelianGroup &ambient,
                                     const std::vector<GroupElement> &generators) {
  int k = ambient.rank();
  if (k == 0) return SubgroupStructure{FiniteAbelianGroup{}, {}, 1};

  IntMatrix h = nonzero_columns(hermite_normal_form(subgroup_lattice(ambient, generators)));
  if (h.cols() != k)
    throw ConsistencyError("subgroup lattice is not full rank");
  // ambient relations expressed in the lattice basis
  IntMatrix x = solve_lower_triangular(h, IntMatrix::diagonal(ambient.factors()));
  SnfResult snf = smith_normal_form(x);

  std::vector<mpz_class> factors;
  std::vector<GroupElement> basis;
  for (int i = 0; i < k; ++i) {
    const mpz_class &d = snf.s.at(i, i);
    if (d == 0)
      throw ConsistencyError("subgroup inclusion with zero elementary divisor");
    if (d == 1) continue;
    factors.push_back(d);
    // new basis vector e_i in lattice coords is column i of Uinv; map to
    // ambient coordinates through H
    std::vector<mpz_class> z(k);
    for (int r = 0; r < k; ++r) z[r] = snf.uinv.at(r, i);
    std::vector<mpz_class> amb = h.mul_vec(z);
    basis.push_back(reduce(ambient, std::move(amb)));
  }
  FiniteAbelianGroup grp(factors);
  mpz_class order = grp.order();
  return SubgroupStructure{std::move(grp), std::move(basis), order};
}

std::string subgroup_key(const FiniteAbelianGroup &ambient,
                         const std::vector<GroupElement> &generators) {
  IntMatrix h = hermite_normal_form(subgroup_lattice(ambient, generators));
  return nonzero_columns(h).str();
}

Presentation from_presentation(const IntMatrix &relations) {
  // relation lattice = column span of relations^T
  SnfResult snf = smith_normal_form(relations.transposed());
  int g = relations.cols();
  std::vector<mpz_class> factors;
  std::vector<int> kept;
  int n = std::min(snf.s.rows(), snf.s.cols());
  for (int i = 0; i < g; ++i) {
    mpz_class d = i < n ? snf.s.at(i, i) : mpz_class(0);
    if (d == 0)
      throw InputError(
          "presentation has a free summand; the groups handled here are finite");
    if (d == 1) continue;
    factors.push_back(d);
    kept.push_back(i);
  }
  FiniteAbelianGroup group(factors);

  int r = group.rank();
  IntMatrix new_in_old(g, r), old_to_new(r, g);
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < g; ++i) new_in_old.at(i, j) = snf.uinv.at(i, kept[j]);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < g; ++j) old_to_new.at(i, j) = snf.u.at(kept[i], j);
  return Presentation{std::move(group), std::move(new_in_old), std::move(old_to_new)};
}

std::vector<PrimaryComponent> primary_decomposition(const FiniteAbelianGroup &g) {
  // collect the primes of the order
  std::vector<mpz_class> primes;
  for (const auto &d : g.factors())
    for (const auto &pp : factorize(d)) {
      if (std::find(primes.begin(), primes.end(), pp.p) == primes.end())
        primes.push_back(pp.p);
    }
  std::sort(primes.begin(), primes.end());

  std::vector<PrimaryComponent> out;
  for (const auto &p : primes) {
    PrimaryComponent comp;
    comp.prime = p;
    std::vector<mpz_class> factors;
    for (int i = 0; i < g.rank(); ++i) {
      mpz_class q = 1;
      mpz_class d = g.factors()[i];
      while (d % p == 0) {
        d /= p;
        q *= p;
      }
      if (q == 1) continue;
      factors.push_back(q);
      comp.ambient_index.push_back(i);
    }
    comp.group = FiniteAbelianGroup(factors);
    out.push_back(std::move(comp));
  }
  // CRT lifts: generator j of the p-component maps to the ambient element
  // congruent to 1 mod p^e and 0 mod the coprime part in coordinate i
  for (auto &comp : out) {
    for (int j = 0; j < comp.group.rank(); ++j) {
      int i = comp.ambient_index[j];
      const mpz_class &d = g.factors()[i];
      const mpz_class &q = comp.group.factors()[j];
      mpz_class m = d / q; // coprime to q
      mpz_class minv;
      if (mpz_invert(minv.get_mpz_t(), m.get_mpz_t(), q.get_mpz_t()) == 0)
        throw ConsistencyError("CRT lift: cofactor not invertible");
      std::vector<mpz_class> coords(g.rank(), 0);
      coords[i] = m * minv; // = 1 mod q, 0 mod m
      comp.embedded_basis.push_back(reduce(g, std::move(coords)));
    }
  }
  return out;
}

GroupElement project_to_component(const FiniteAbelianGroup &ambient,
                                  const PrimaryComponent &comp,
                                  const GroupElement &a) {
  if (static_cast<int>(a.coords.size()) != ambient.rank())
    throw InputError("project_to_component: wrong coordinate count");
  std::vector<mpz_class> c(comp.group.rank());
  for (int j = 0; j < comp.group.rank(); ++j)
    c[j] = a.coords[comp.ambient_index[j]];
  return reduce(comp.group, std::move(c));
}

GroupElement embed_from_component(const FiniteAbelianGroup &ambient,
                                  const PrimaryComponent &comp,
                                  const GroupElement &a) {
  if (static_cast<int>(a.coords.size()) != comp.group.rank())
    throw InputError("embed_from_component: wrong coordinate count");
  GroupElement out = zero_element(ambient);
  for (int j = 0; j < comp.group.rank(); ++j)
    out = add(ambient, out, scale(ambient, a.coords[j], comp.embedded_basis[j]));
  return out;
}

} // namespace bandforms
