#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "errors.hpp"
#include "linking_form.hpp"
#include "pd_diagram.hpp"

using namespace bandforms;

namespace {

GroupElement el(std::vector<long> v) {
  GroupElement e;
  for (long x : v) e.coords.push_back(x);
  return e;
}

} // namespace

TEST_CASE("cyclic form constructor") {
  LinkingForm f = LinkingForm::cyclic(2, 7);
  CHECK(f.group() == FiniteAbelianGroup({7}));
  CHECK(f.gram()[0][0] == RationalModOne(2, 7));
  CHECK(LinkingForm::cyclic(1, 1).group().is_trivial());
  CHECK_THROWS_AS(LinkingForm::cyclic(3, 9), InputError);  // gcd > 1
  CHECK_THROWS_AS(LinkingForm::cyclic(1, 4), InputError);  // even order
}

TEST_CASE("well-definedness enforced at construction") {
  // 1/4 on Z_2 has 2 * 1/4 = 1/2 != 0
  std::vector<std::vector<RationalModOne>> bad{{RationalModOne(1, 4)}};
  CHECK_THROWS_AS(LinkingForm(FiniteAbelianGroup({2}), bad), InputError);
  // asymmetric gram
  std::vector<std::vector<RationalModOne>> asym{
      {RationalModOne(), RationalModOne(1, 3)},
      {RationalModOne(2, 3), RationalModOne()}};
  CHECK_THROWS_AS(LinkingForm(FiniteAbelianGroup({3, 3}), asym), InputError);
}

TEST_CASE("evaluation is bilinear and symmetric") {
  LinkingForm f = LinkingForm::cyclic(8, 63);
  CHECK(f.evaluate(el({1}), el({1})) == RationalModOne(8, 63));
  CHECK(f.evaluate(el({21}), el({21})) == RationalModOne());
  CHECK(f.evaluate(el({0}), el({5})) == RationalModOne());
  CHECK_THROWS_AS(f.evaluate(el({1, 2}), el({1})), InputError);

  LinkingForm h = hyperbolic_plane(4);
  for (long a = 0; a < 4; ++a)
    for (long b = 0; b < 4; ++b) {
      auto x = el({a, b}), y = el({b, a});
      CHECK(h.evaluate(x, y) == h.evaluate(y, x));
      // additivity in the first slot
      auto x2 = el({(a + 1) % 4, b});
      auto lhs = h.evaluate(x2, y);
      auto rhs = h.evaluate(x, y) + h.evaluate(el({1, 0}), y);
      CHECK(lhs == rhs);
    }
}

TEST_CASE("nonsingularity") {
  CHECK(is_nonsingular(LinkingForm::cyclic(2, 7)));
  std::vector<std::vector<RationalModOne>> zero{{RationalModOne()}};
  CHECK_FALSE(is_nonsingular(LinkingForm(FiniteAbelianGroup({3}), zero)));
  CHECK(is_nonsingular(
      direct_sum(LinkingForm::cyclic(2, 9), LinkingForm::cyclic(2, 7))));
  CHECK(is_nonsingular(hyperbolic_plane(5)));
  CHECK(is_nonsingular(LinkingForm())); // trivial form
}

TEST_CASE("direct sum") {
  LinkingForm s = direct_sum(LinkingForm::cyclic(2, 7), LinkingForm::cyclic(2, 9));
  CHECK(s.group() == FiniteAbelianGroup({63}));

  LinkingForm f = LinkingForm::cyclic(3, 5);
  LinkingForm ft = direct_sum(f, LinkingForm());
  CHECK(ft.group() == f.group());
  CHECK(ft.gram()[0][0] == f.gram()[0][0]);

  LinkingForm slice = direct_sum(LinkingForm::cyclic(1, 3),
                                 LinkingForm::cyclic(1, 3).negated());
  CHECK(slice.group() == FiniteAbelianGroup({3, 3}));
  CHECK(slice.evaluate(el({1, 0}), el({1, 0})) == RationalModOne(1, 3));
  CHECK(slice.evaluate(el({0, 1}), el({0, 1})) == RationalModOne(2, 3));
  CHECK(slice.evaluate(el({1, 0}), el({0, 1})) == RationalModOne());
}

TEST_CASE("negation") {
  CHECK(LinkingForm::cyclic(1, 3).negated().gram()[0][0] == RationalModOne(2, 3));
  CHECK(LinkingForm().negated().group().is_trivial());
  CHECK(LinkingForm::cyclic(2, 7).negated().gram()[0][0] == RationalModOne(5, 7));
}

TEST_CASE("orthogonal complement examples") {
  LinkingForm f = LinkingForm::cyclic(2, 9);
  auto oc = orthogonal_complement(f, {el({3})});
  CHECK(oc.group == FiniteAbelianGroup({3}));
  REQUIRE(oc.basis.size() == 1);
  CHECK(oc.basis[0].coords[0] == 3); // self-orthogonal

  // complement of the whole group in a nonsingular form is trivial
  auto oc2 = orthogonal_complement(f, {el({1})});
  CHECK(oc2.order == 1);

  // complement of the trivial subgroup is everything
  auto oc3 = orthogonal_complement(f, {});
  CHECK(oc3.order == 9);
}

TEST_CASE("orthogonal complement agrees with enumeration") {
  std::vector<LinkingForm> forms = {
      LinkingForm::cyclic(2, 9), LinkingForm::cyclic(8, 63),
      direct_sum(LinkingForm::cyclic(1, 3), LinkingForm::cyclic(2, 3)),
      hyperbolic_plane(4),
      direct_sum(LinkingForm::cyclic(2, 5), LinkingForm::cyclic(3, 25))};
  for (const auto &f : forms) {
    auto elems = enumerate_elements(f.group());
    for (size_t pick = 0; pick < elems.size(); pick += 3) {
      std::vector<GroupElement> gens{elems[pick]};
      auto oc = orthogonal_complement(f, gens);
      // brute-force reference
      long count = 0;
      for (const auto &g : elems)
        if (f.evaluate(g, gens[0]).is_zero()) ++count;
      CHECK(oc.order == count);
      // each basis element really is orthogonal
      for (const auto &b : oc.basis)
        CHECK(f.evaluate(b, gens[0]).is_zero());
    }
  }
}

TEST_CASE("find_isotropic examples") {
  CHECK_FALSE(find_isotropic(LinkingForm::cyclic(2, 7)).has_value());
  auto g9 = find_isotropic(LinkingForm::cyclic(2, 9));
  REQUIRE(g9.has_value());
  CHECK(g9->coords[0] == 3);
  auto g63 = find_isotropic(LinkingForm::cyclic(8, 63));
  REQUIRE(g63.has_value());
  CHECK(g63->coords[0] == 21);
}

TEST_CASE("restriction to a subgroup") {
  LinkingForm f = LinkingForm::cyclic(8, 63);
  auto s = subgroup_structure(f.group(), {el({7})}); // Z_9 part
  LinkingForm r = restrict_to(f, s);
  CHECK(r.group() == FiniteAbelianGroup({9}));
  CHECK(r.gram()[0][0] == RationalModOne(2, 9)); // 49 * 8 / 63 = 2/9 mod 1
}

TEST_CASE("goeritz form transport") {
  // [3] -> Z_3 with <1/3> up to global sign
  IntMatrix g1(1, 1);
  g1.at(0, 0) = 3;
  LinkingForm f1 = linking_form_from_goeritz(g1);
  CHECK(f1.group() == FiniteAbelianGroup({3}));
  CHECK((f1.gram()[0][0] == RationalModOne(1, 3) ||
         f1.gram()[0][0] == RationalModOne(2, 3)));

  // diag(7,9) -> <1/7> + <1/9> up to sign
  LinkingForm f2 = linking_form_from_goeritz(IntMatrix::diagonal({7, 9}));
  CHECK(f2.group() == FiniteAbelianGroup({63}));
  CHECK(is_nonsingular(f2));

  // [[2,1],[1,2]] -> Z_3 with lambda(g,g) = +-2/3
  IntMatrix g3(2, 2);
  g3.at(0, 0) = 2; g3.at(0, 1) = 1; g3.at(1, 0) = 1; g3.at(1, 1) = 2;
  LinkingForm f3 = linking_form_from_goeritz(g3);
  CHECK(f3.group() == FiniteAbelianGroup({3}));
  CHECK((f3.gram()[0][0] == RationalModOne(2, 3) ||
         f3.gram()[0][0] == RationalModOne(1, 3)));

  // order equals |det| and the result is nonsingular
  CHECK(f3.order() == 3);
  CHECK(is_nonsingular(f3));

  CHECK_THROWS_AS(linking_form_from_goeritz(IntMatrix(2, 2)), InputError);
}
