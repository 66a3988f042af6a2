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

#include "linking_form.hpp"

#include <sstream>

#include "errors.hpp"

namespace bandforms {

namespace {

void check_gram(const FiniteAbelianGroup &g,
                const std::vector<std::vector<RationalModOne>> &gram) {
  size_t k = static_cast<size_t>(g.rank());
  if (gram.size() != k)
    throw InputError("gram matrix size does not match group rank");
  for (size_t i = 0; i < k; ++i) {
    if (gram[i].size() != k)
      throw InputError("gram matrix is not square");
    for (size_t j = 0; j < k; ++j) {
      if (gram[i][j] != gram[j][i])
        throw InputError("gram matrix is not symmetric");
      if (!gram[i][j].scaled(g.factors()[i]).is_zero())
        throw InputError("pairing is not well defined: d_i * gram[i][j] "
                         "is not integral");
    }
  }
}

} // namespace

LinkingForm::LinkingForm() = default;

LinkingForm::LinkingForm(FiniteAbelianGroup group,
                         std::vector<std::vector<RationalModOne>> gram)
    : group_(std::move(group)), gram_(std::move(gram)) {
  check_gram(group_, gram_);
}

LinkingForm LinkingForm::cyclic(const mpz_class &q, const mpz_class &p) {
  if (p < 1) throw InputError("cyclic form needs a positive order");
  if (p % 2 == 0)
    throw InputError("cyclic form of even order " + p.get_str() +
                     " rejected: knot determinants are odd");
  if (p == 1) return LinkingForm();
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  if (g != 1)
    throw InputError("cyclic form <" + q.get_str() + "/" + p.get_str() +
                     "> would be singular: gcd > 1");
  return LinkingForm(FiniteAbelianGroup({p}), {{RationalModOne(q, p)}});
}

LinkingForm LinkingForm::from_presentation_gram(
    const IntMatrix &relations,
    const std::vector<std::vector<RationalModOne>> &gram) {
  Presentation pres = from_presentation(relations);
  int g = relations.cols();
  if (static_cast<int>(gram.size()) != g)
    throw InputError("presentation gram size mismatch");
  int r = pres.group.rank();
  std::vector<std::vector<RationalModOne>> out(
      r, std::vector<RationalModOne>(r));
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j) {
      RationalModOne v;
      for (int s = 0; s < g; ++s) {
        if (pres.new_basis_in_old.at(s, i) == 0) continue;
        for (int t = 0; t < g; ++t) {
          if (pres.new_basis_in_old.at(t, j) == 0) continue;
          v = v + gram[s][t].scaled(pres.new_basis_in_old.at(s, i) *
                                    pres.new_basis_in_old.at(t, j));
        }
      }
      out[i][j] = v;
      out[j][i] = v;
    }
  return LinkingForm(std::move(pres.group), std::move(out));
}

RationalModOne LinkingForm::evaluate(const GroupElement &a,
                                     const GroupElement &b) const {
  int k = group_.rank();
  if (static_cast<int>(a.coords.size()) != k ||
      static_cast<int>(b.coords.size()) != k)
    throw InputError("evaluate: element dimension mismatch");
  RationalModOne v;
  for (int i = 0; i < k; ++i) {
    if (a.coords[i] == 0) continue;
    for (int j = 0; j < k; ++j) {
      if (b.coords[j] == 0) continue;
      v = v + gram_[i][j].scaled(a.coords[i] * b.coords[j]);
    }
  }
  return v;
}

LinkingForm LinkingForm::negated() const {
  auto gram = gram_;
  for (auto &row : gram)
    for (auto &x : row) x = -x;
  return LinkingForm(group_, std::move(gram));
}

std::string LinkingForm::str() const {
  std::ostringstream os;
  os << group_.str() << " with gram [";
  for (int i = 0; i < group_.rank(); ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < group_.rank(); ++j)
      os << (j ? "," : "") << gram_[i][j].str();
    os << "]";
  }
  os << "]";
  return os.str();
}

LinkingForm direct_sum(const LinkingForm &a, const LinkingForm &b) {
  int ka = a.group().rank(), kb = b.group().rank();
  std::vector<mpz_class> diag;
  diag.reserve(ka + kb);
  for (const auto &d : a.group().factors()) diag.push_back(d);
  for (const auto &d : b.group().factors()) diag.push_back(d);
  std::vector<std::vector<RationalModOne>> gram(
      ka + kb, std::vector<RationalModOne>(ka + kb));
  for (int i = 0; i < ka; ++i)
    for (int j = 0; j < ka; ++j) gram[i][j] = a.gram()[i][j];
  for (int i = 0; i < kb; ++i)
    for (int j = 0; j < kb; ++j) gram[ka + i][ka + j] = b.gram()[i][j];
  return LinkingForm::from_presentation_gram(IntMatrix::diagonal(diag), gram);
}

LinkingForm hyperbolic_plane(const mpz_class &n) {
  if (n < 2) throw InputError("hyperbolic plane needs n >= 2");
  std::vector<std::vector<RationalModOne>> gram(2, std::vector<RationalModOne>(2));
  gram[0][1] = RationalModOne(1, n);
  gram[1][0] = RationalModOne(1, n);
  return LinkingForm(FiniteAbelianGroup({n, n}), std::move(gram));
}

namespace {

// Lattice of coordinate vectors orthogonal to every element of `gens`:
// solutions of A g = 0 mod D where row t of A is D * lambda(e_i, gens[t]).
SubgroupStructure annihilator(const LinkingForm &f,
                              const std::vector<GroupElement> &gens) {
  const FiniteAbelianGroup &g = f.group();
  int k = g.rank();
  if (k == 0) return SubgroupStructure{FiniteAbelianGroup{}, {}, 1};
  int t = static_cast<int>(gens.size());
  if (t == 0) {
    // whole group
    std::vector<GroupElement> basis;
    for (int i = 0; i < k; ++i) {
      GroupElement e = zero_element(g);
      e.coords[i] = 1;
      basis.push_back(e);
    }
    return SubgroupStructure{g, basis, g.order()};
  }

  // common denominator D of all pairings involved
  mpz_class d = 1;
  std::vector<std::vector<RationalModOne>> pair(t, std::vector<RationalModOne>(k));
  for (int r = 0; r < t; ++r)
    for (int i = 0; i < k; ++i) {
      GroupElement e = zero_element(g);
      e.coords[i] = 1;
      pair[r][i] = f.evaluate(e, gens[r]);
      mpz_class l;
      mpz_lcm(l.get_mpz_t(), d.get_mpz_t(), pair[r][i].den().get_mpz_t());
      d = l;
    }
  IntMatrix a(t, k);
  for (int r = 0; r < t; ++r)
    for (int i = 0; i < k; ++i)
      a.at(r, i) = pair[r][i].num() * (d / pair[r][i].den());

  // A g = 0 (mod D)  <=>  S y = 0 (mod D) with y = Vinv g
  SnfResult snf = smith_normal_form(a);
  std::vector<mpz_class> step(k);
  int n = std::min(snf.s.rows(), snf.s.cols());
  for (int i = 0; i < k; ++i) {
    mpz_class s = i < n ? snf.s.at(i, i) : mpz_class(0);
    if (s == 0) {
      step[i] = 1;
    } else {
      mpz_class gg;
      mpz_gcd(gg.get_mpz_t(), s.get_mpz_t(), d.get_mpz_t());
      step[i] = d / gg;
    }
  }
  // kernel lattice generated by V * diag(step)
  std::vector<GroupElement> kergens;
  for (int i = 0; i < k; ++i) {
    std::vector<mpz_class> col(k);
    for (int r = 0; r < k; ++r) col[r] = snf.v.at(r, i) * step[i];
    kergens.push_back(reduce(g, std::move(col)));
  }
  return subgroup_structure(g, kergens);
}

} // namespace

SubgroupStructure radical(const LinkingForm &f) {
  std::vector<GroupElement> gens;
  for (int i = 0; i < f.group().rank(); ++i) {
    GroupElement e = zero_element(f.group());
    e.coords[i] = 1;
    gens.push_back(e);
  }
  return annihilator(f, gens);
}

bool is_nonsingular(const LinkingForm &f) { return radical(f).order == 1; }

SubgroupStructure orthogonal_complement(const LinkingForm &f,
                                        const std::vector<GroupElement> &gens) {
  return annihilator(f, gens);
}

LinkingForm restrict_to(const LinkingForm &f, const SubgroupStructure &s) {
  int r = s.group.rank();
  std::vector<std::vector<RationalModOne>> gram(r, std::vector<RationalModOne>(r));
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j) {
      RationalModOne v = f.evaluate(s.basis[i], s.basis[j]);
      gram[i][j] = v;
      gram[j][i] = v;
    }
  return LinkingForm(s.group, std::move(gram));
}

std::optional<GroupElement> find_isotropic(const LinkingForm &f,
                                           const Limits &lim) {
  ElementStream stream(f.group(), lim);
  while (auto e = stream.next()) {
    if (is_zero(*e)) continue;
    if (f.evaluate(*e, *e).is_zero()) return e;
  }
  return std::nullopt;
}

bool is_anisotropic(const LinkingForm &f, const Limits &lim) {
  return !find_isotropic(f, lim).has_value();
}

} // namespace bandforms
