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

#include "witt.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "errors.hpp"
#include "number_theory.hpp"

namespace bandforms {

namespace {

std::vector<GroupElement> isotropic_elements(const LinkingForm &f,
                                             const Limits &lim) {
  std::vector<GroupElement> out;
  ElementStream stream(f.group(), lim);
  while (auto e = stream.next()) {
    if (is_zero(*e)) continue;
    if (f.evaluate(*e, *e).is_zero()) out.push_back(*e);
  }
  return out;
}

bool orthogonal_to_all(const LinkingForm &f, const GroupElement &g,
                       const std::vector<GroupElement> &basis) {
  for (const auto &b : basis)
    if (!f.evaluate(g, b).is_zero()) return false;
  return true;
}

// Depth-first search for a totally isotropic subgroup of order `target`.
// Extending a totally isotropic subgroup by an isotropic element that is
// orthogonal to it keeps it totally isotropic, so only the generators need
// checking.
bool metabolizer_dfs(const LinkingForm &f,
                     const std::vector<GroupElement> &pool,
                     std::vector<GroupElement> &gens, const mpz_class &order,
                     const mpz_class &target, size_t next,
                     std::set<std::string> &seen, Metabolizer &out) {
  if (order == target) {
    out = gens;
    return true;
  }
  for (size_t i = next; i < pool.size(); ++i) {
    const GroupElement &cand = pool[i];
    if (!orthogonal_to_all(f, cand, gens)) continue;
    gens.push_back(cand);
    SubgroupStructure s = subgroup_structure(f.group(), gens);
    bool viable = s.order > order && s.order <= target && target % s.order == 0;
    if (viable) {
      std::string key = subgroup_key(f.group(), gens);
      if (seen.insert(key).second) {
        if (metabolizer_dfs(f, pool, gens, s.order, target, i + 1, seen, out))
          return true;
      }
    }
    gens.pop_back();
  }
  return false;
}

} // namespace

std::optional<Metabolizer> find_metabolizer(const LinkingForm &f,
                                            const Limits &lim) {
  mpz_class order = f.order();
  mpz_class root;
  if (!is_perfect_square(order, &root)) return std::nullopt;
  if (order == 1) return Metabolizer{};
  std::vector<GroupElement> pool = isotropic_elements(f, lim);
  std::vector<GroupElement> gens;
  std::set<std::string> seen;
  Metabolizer out;
  if (metabolizer_dfs(f, pool, gens, 1, root, 0, seen, out)) return out;
  return std::nullopt;
}

bool is_metabolic(const LinkingForm &f, const Limits &lim) {
  return find_metabolizer(f, lim).has_value();
}

namespace {

struct Candidate {
  mpz_class order;
  std::vector<GroupElement> gens;
};

std::optional<MetabolicSplit> try_candidate(const LinkingForm &f,
                                            const std::vector<GroupElement> &gens,
                                            const Limits &lim) {
  SubgroupStructure s = subgroup_structure(f.group(), gens);
  if (s.order == 1) return std::nullopt;
  if (!is_perfect_square(s.order)) return std::nullopt;
  LinkingForm rf = restrict_to(f, s);
  if (!is_nonsingular(rf)) return std::nullopt;
  auto metab = find_metabolizer(rf, lim);
  if (!metab) return std::nullopt;
  return MetabolicSplit{std::move(s), std::move(rf), std::move(*metab)};
}

} // namespace

std::optional<MetabolicSplit> split_metabolic_summand(const LinkingForm &f,
                                                      const Limits &lim,
                                                      const IsotropicPicker &picker) {
  std::vector<GroupElement> iso = isotropic_elements(f, lim);
  if (iso.empty()) return std::nullopt;

  // one-generator candidates, by increasing subgroup order then generator;
  // only square cyclic orders can carry a metabolizer, so everything else
  // is filtered before the (costlier) canonical-key dedup
  std::vector<Candidate> cyclic;
  {
    std::set<std::string> seen;
    ElementStream stream(f.group(), lim);
    while (auto e = stream.next()) {
      if (is_zero(*e)) continue;
      mpz_class ord = element_order(f.group(), *e);
      if (!is_perfect_square(ord)) continue;
      std::vector<GroupElement> gens{*e};
      std::string key = subgroup_key(f.group(), gens);
      if (!seen.insert(key).second) continue;
      cyclic.push_back({ord, std::move(gens)});
    }
    std::stable_sort(cyclic.begin(), cyclic.end(),
                     [](const Candidate &a, const Candidate &b) {
                       return a.order < b.order;
                     });
  }
  for (const auto &c : cyclic)
    if (auto hit = try_candidate(f, c.gens, lim)) return hit;

  // two-generator candidates: first generator isotropic (a metabolizer
  // element can always serve), second arbitrary
  std::vector<GroupElement> firsts = iso;
  if (picker) picker(firsts);
  for (const auto &x : firsts) {
    ElementStream stream(f.group(), lim);
    while (auto y = stream.next()) {
      if (is_zero(*y)) continue;
      std::vector<GroupElement> gens{x, *y};
      if (auto hit = try_candidate(f, gens, lim)) return hit;
    }
  }

  throw ConsistencyError(
      "form has isotropic elements but no nonsingular metabolic summand "
      "generated by at most two elements; no orthogonal anisotropic + "
      "metabolic decomposition of this form exists (a cyclic component of "
      "odd prime-power order p^(2j+1) behaves this way)");
}

WittResult witt_decompose(const LinkingForm &f, const Limits &lim,
                          const WittOptions &opts) {
  if (!is_nonsingular(f))
    throw InputError("witt_decompose requires a nonsingular form");

  std::vector<PrimaryComponent> comps = primary_decomposition(f.group());
  std::vector<int> order(comps.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  if (!opts.component_order.empty()) {
    if (opts.component_order.size() != comps.size())
      throw InputError("component_order length mismatch");
    order = opts.component_order;
  }

  WittResult result;
  std::vector<std::pair<mpz_class, LinkingForm>> aniso_parts;
  for (int idx : order) {
    const PrimaryComponent &comp = comps[idx];
    SubgroupStructure s = subgroup_structure(f.group(), comp.embedded_basis);
    LinkingForm part = restrict_to(f, s);
    if (!is_nonsingular(part))
      throw ConsistencyError("primary component of a nonsingular form is "
                             "singular");
    for (;;) {
      auto split = split_metabolic_summand(part, lim, opts.picker);
      if (!split) break;
      result.split_log.push_back(
          {comp.prime, split->summand_form, split->metabolizer});
      SubgroupStructure comp_s =
          orthogonal_complement(part, split->summand.basis);
      if (comp_s.order * split->summand.order != part.order())
        throw ConsistencyError("metabolic summand does not split the form");
      part = restrict_to(part, comp_s);
      if (!is_nonsingular(part))
        throw ConsistencyError("orthogonal complement of a nonsingular "
                               "summand is singular");
    }
    aniso_parts.push_back({comp.prime, std::move(part)});
  }

  // deterministic assembly in ascending prime order
  std::sort(aniso_parts.begin(), aniso_parts.end(),
            [](const auto &a, const auto &b) { return a.first < b.first; });
  LinkingForm aniso;
  for (const auto &[p, part] : aniso_parts) aniso = direct_sum(aniso, part);
  result.anisotropic = std::move(aniso);
  return result;
}

int mu_an(const LinkingForm &f, const Limits &lim) {
  return min_generators(witt_decompose(f, lim).anisotropic.group());
}

namespace {

bool isometric_cyclic(const LinkingForm &a, const LinkingForm &b,
                      const Limits &lim) {
  // both cyclic with the same order d; isometry <=> gram_b = u^2 * gram_a
  // for a unit u
  const mpz_class d = a.order();
  if (d == 1) return true;
  if (d > cap_as_mpz(lim.enumeration_cap))
    throw CapExceeded("cyclic isometry scan on order " + d.get_str() +
                      " exceeds the enumeration cap " +
                      std::to_string(lim.enumeration_cap));
  const RationalModOne &qa = a.gram()[0][0];
  const RationalModOne &qb = b.gram()[0][0];
  for (mpz_class u = 1; u < d; ++u) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), u.get_mpz_t(), d.get_mpz_t());
    if (g != 1) continue;
    if (qa.scaled(u * u) == qb) return true;
  }
  return false;
}

bool isometry_dfs(const LinkingForm &a, const LinkingForm &b,
                  const std::vector<GroupElement> &elems,
                  std::vector<GroupElement> &images, int i) {
  const int k = a.group().rank();
  if (i == k) {
    // images must generate all of b's group
    return subgroup_structure(b.group(), images).order == b.order();
  }
  const mpz_class &di = a.group().factors()[i];
  for (const auto &cand : elems) {
    if (element_order(b.group(), cand) != di) continue;
    bool ok = b.evaluate(cand, cand) == a.gram()[i][i];
    for (int j = 0; ok && j < i; ++j)
      ok = b.evaluate(images[j], cand) == a.gram()[j][i];
    if (!ok) continue;
    images.push_back(cand);
    if (isometry_dfs(a, b, elems, images, i + 1)) return true;
    images.pop_back();
  }
  return false;
}

} // namespace

bool are_isometric(const LinkingForm &a, const LinkingForm &b,
                   const Limits &lim) {
  if (!(a.group() == b.group())) return false;
  if (a.group().is_trivial()) return true;
  if (a.group().rank() == 1) return isometric_cyclic(a, b, lim);
  if (a.order() > cap_as_mpz(lim.isometry_cap))
    throw CapExceeded("isometry search on order " + a.order().get_str() +
                      " exceeds the isometry cap " +
                      std::to_string(lim.isometry_cap));
  Limits inner = lim;
  std::vector<GroupElement> elems = enumerate_elements(b.group(), inner);
  std::vector<GroupElement> images;
  return isometry_dfs(a, b, elems, images, 0);
}

} // namespace bandforms
