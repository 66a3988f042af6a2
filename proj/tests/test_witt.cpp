#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "errors.hpp"
#include "witt.hpp"

using namespace bandforms;

namespace {

GroupElement el(std::vector<long> v) {
  GroupElement e;
  for (long x : v) e.coords.push_back(x);
  return e;
}

// random nonsingular odd form built from cyclic pieces <u/p^k>, k <= 2
LinkingForm random_odd_form(std::mt19937 &rng, long max_order) {
  static const long primes[] = {3, 5, 7, 11, 13};
  std::uniform_int_distribution<int> npieces(1, 3), pidx(0, 4), kdist(1, 2);
  for (;;) {
    LinkingForm f;
    int pieces = npieces(rng);
    for (int i = 0; i < pieces; ++i) {
      long p = primes[pidx(rng)];
      long pk = kdist(rng) == 1 ? p : p * p;
      std::uniform_int_distribution<long> udist(1, pk - 1);
      long u = udist(rng);
      while (u % p == 0) u = udist(rng);
      f = direct_sum(f, LinkingForm::cyclic(u, pk));
    }
    if (f.order() <= max_order) return f;
  }
}

} // namespace

TEST_CASE("metabolic examples") {
  CHECK(is_metabolic(LinkingForm::cyclic(2, 9)));
  CHECK_FALSE(is_metabolic(LinkingForm::cyclic(2, 7)));
  CHECK(is_metabolic(direct_sum(LinkingForm::cyclic(1, 3),
                                LinkingForm::cyclic(2, 3))));
  CHECK(is_metabolic(hyperbolic_plane(4)));
  CHECK(is_metabolic(LinkingForm())); // trivial form, empty metabolizer
  // <1/3> + <1/3>: order 9 but no metabolizer (x^2 + y^2 = 0 mod 3 forces 0)
  CHECK_FALSE(is_metabolic(direct_sum(LinkingForm::cyclic(1, 3),
                                      LinkingForm::cyclic(1, 3))));
}

TEST_CASE("metabolizer witnesses re-verify") {
  std::vector<LinkingForm> forms = {
      LinkingForm::cyclic(2, 9),
      direct_sum(LinkingForm::cyclic(1, 3), LinkingForm::cyclic(2, 3)),
      hyperbolic_plane(5), LinkingForm::cyclic(8, 81)};
  for (const auto &f : forms) {
    auto k = find_metabolizer(f);
    REQUIRE(k.has_value());
    auto s = subgroup_structure(f.group(), *k);
    CHECK(s.order * s.order == f.order());
    for (const auto &a : *k)
      for (const auto &b : *k) CHECK(f.evaluate(a, b).is_zero());
  }
}

TEST_CASE("split_metabolic_summand examples") {
  // <2/9>: the whole group splits off with metabolizer <3>
  auto s1 = split_metabolic_summand(LinkingForm::cyclic(2, 9));
  REQUIRE(s1.has_value());
  CHECK(s1->summand_form.order() == 9);
  auto comp1 = orthogonal_complement(LinkingForm::cyclic(2, 9), s1->summand.basis);
  CHECK(comp1.order == 1);

  // <8/63>: the 3-primary part <2/9> splits, complement is <2/7>
  LinkingForm f63 = LinkingForm::cyclic(8, 63);
  auto s2 = split_metabolic_summand(f63);
  REQUIRE(s2.has_value());
  CHECK(s2->summand_form.order() == 9);
  CHECK(are_isometric(s2->summand_form, LinkingForm::cyclic(2, 9)));
  auto comp2 = restrict_to(f63, orthogonal_complement(f63, s2->summand.basis));
  CHECK(are_isometric(comp2, LinkingForm::cyclic(2, 7)));

  // <1/3> + <2/3>: whole group with diagonal metabolizer
  LinkingForm slice =
      direct_sum(LinkingForm::cyclic(1, 3), LinkingForm::cyclic(2, 3));
  auto s3 = split_metabolic_summand(slice);
  REQUIRE(s3.has_value());
  CHECK(s3->summand_form.order() == 9);

  // anisotropic form: no split
  CHECK_FALSE(split_metabolic_summand(LinkingForm::cyclic(2, 7)).has_value());
}

TEST_CASE("split failure on odd prime-power exponents >= 3") {
  // <1/27> is isotropic yet admits no nonsingular metabolic summand, so no
  // anisotropic + metabolic orthogonal decomposition exists; the engine
  // must refuse rather than emit a wrong answer
  CHECK_THROWS_AS(split_metabolic_summand(LinkingForm::cyclic(1, 27)),
                  ConsistencyError);
  CHECK_THROWS_AS(mu_an(LinkingForm::cyclic(1, 27)), ConsistencyError);
}

TEST_CASE("witt decomposition examples") {
  auto w1 = witt_decompose(LinkingForm::cyclic(2, 7));
  CHECK(w1.split_log.empty());
  CHECK(are_isometric(w1.anisotropic, LinkingForm::cyclic(2, 7)));

  auto w2 = witt_decompose(direct_sum(LinkingForm::cyclic(1, 3),
                                      LinkingForm::cyclic(2, 3)));
  CHECK(w2.anisotropic.group().is_trivial());

  auto w3 = witt_decompose(LinkingForm::cyclic(8, 63));
  CHECK(are_isometric(w3.anisotropic, LinkingForm::cyclic(2, 7)));

  CHECK_THROWS_AS(
      witt_decompose(LinkingForm(FiniteAbelianGroup({3}),
                                 {{RationalModOne()}})),
      InputError); // singular input
}

TEST_CASE("mu_an examples") {
  CHECK(mu_an(LinkingForm::cyclic(1, 3)) == 1);
  CHECK(mu_an(direct_sum(LinkingForm::cyclic(1, 3),
                         LinkingForm::cyclic(2, 3))) == 0);
  CHECK(mu_an(LinkingForm::cyclic(1, 9)) == 0);
  CHECK(mu_an(LinkingForm()) == 0);
  // distinct primes: generator counts take the maximum
  LinkingForm f = direct_sum(LinkingForm::cyclic(1, 3), LinkingForm::cyclic(2, 5));
  CHECK(mu_an(f) == 1);
}

TEST_CASE("split log multiplies back to the original order") {
  std::mt19937 rng(11);
  for (int iter = 0; iter < 40; ++iter) {
    LinkingForm f = random_odd_form(rng, 2000);
    WittResult w = witt_decompose(f);
    mpz_class prod = w.anisotropic.order();
    for (const auto &s : w.split_log) prod *= s.summand_form.order();
    CHECK(prod == f.order());
    // logged summands re-verify: nonsingular and metabolic
    for (const auto &s : w.split_log) {
      CHECK(is_nonsingular(s.summand_form));
      auto sub = subgroup_structure(s.summand_form.group(), s.metabolizer);
      CHECK(sub.order * sub.order == s.summand_form.order());
      for (const auto &a : s.metabolizer)
        for (const auto &b : s.metabolizer)
          CHECK(s.summand_form.evaluate(a, b).is_zero());
    }
  }
}

TEST_CASE("anisotropic outputs have no isotropic elements") {
  std::mt19937 rng(13);
  for (int iter = 0; iter < 60; ++iter) {
    LinkingForm f = random_odd_form(rng, 2000);
    WittResult w = witt_decompose(f);
    CHECK(is_anisotropic(w.anisotropic));
  }
}

TEST_CASE("witt stability under metabolic padding") {
  std::mt19937 rng(17);
  for (int iter = 0; iter < 25; ++iter) {
    LinkingForm f = random_odd_form(rng, 200);
    int base = mu_an(f);
    CHECK(mu_an(direct_sum(f, LinkingForm::cyclic(1, 9))) == base);
    for (long n = 2; n <= 5; ++n)
      CHECK(mu_an(direct_sum(f, hyperbolic_plane(n))) == base);
  }
}

TEST_CASE("slice principle: mu_an(F + -F) = 0") {
  std::mt19937 rng(19);
  for (int iter = 0; iter < 25; ++iter) {
    LinkingForm f = random_odd_form(rng, 200);
    CHECK(mu_an(direct_sum(f, f.negated())) == 0);
    CHECK(mu_an(f.negated()) == mu_an(f));
  }
}

TEST_CASE("mu_an bounded by ambient rank") {
  std::mt19937 rng(23);
  for (int iter = 0; iter < 40; ++iter) {
    LinkingForm f = random_odd_form(rng, 2000);
    CHECK(mu_an(f) <= min_generators(f.group()));
  }
}

TEST_CASE("split order independence up to isometry") {
  std::mt19937 rng(29);
  for (int iter = 0; iter < 20; ++iter) {
    LinkingForm f = random_odd_form(rng, 2000);
    WittResult base = witt_decompose(f);
    // reverse the primary component order and randomize isotropic choices
    int ncomp = static_cast<int>(primary_decomposition(f.group()).size());
    WittOptions opts;
    for (int i = ncomp - 1; i >= 0; --i) opts.component_order.push_back(i);
    unsigned seed = rng();
    opts.picker = [seed](std::vector<GroupElement> &cand) {
      std::mt19937 inner(seed);
      std::shuffle(cand.begin(), cand.end(), inner);
    };
    WittResult alt = witt_decompose(f, default_limits(), opts);
    CHECK(base.anisotropic.group() == alt.anisotropic.group());
    CHECK(are_isometric(base.anisotropic, alt.anisotropic));
  }
}

TEST_CASE("are_isometric examples") {
  CHECK(are_isometric(LinkingForm::cyclic(2, 7), LinkingForm::cyclic(2, 7)));
  CHECK(are_isometric(
      direct_sum(LinkingForm::cyclic(2, 7), LinkingForm::cyclic(2, 9)),
      LinkingForm::cyclic(8, 63)));
  CHECK_FALSE(are_isometric(LinkingForm::cyclic(1, 3), LinkingForm::cyclic(2, 3)));
  // different groups are never isometric
  CHECK_FALSE(are_isometric(LinkingForm::cyclic(1, 3), LinkingForm::cyclic(1, 5)));
  // rank 2: hyperbolic vs diagonal slice form over Z_3
  LinkingForm slice =
      direct_sum(LinkingForm::cyclic(1, 3), LinkingForm::cyclic(2, 3));
  CHECK(are_isometric(hyperbolic_plane(3), slice));
  CHECK_FALSE(are_isometric(
      direct_sum(LinkingForm::cyclic(1, 3), LinkingForm::cyclic(1, 3)), slice));
}

TEST_CASE("isometry respects the evaluation everywhere") {
  // pull one nontrivial isometric pair and compare full multiplication
  // tables through an explicit scan
  LinkingForm a = direct_sum(LinkingForm::cyclic(2, 7), LinkingForm::cyclic(2, 9));
  LinkingForm b = LinkingForm::cyclic(8, 63);
  // same multiset of self-linkings
  std::vector<std::string> va, vb;
  for (const auto &g : enumerate_elements(a.group()))
    va.push_back(a.evaluate(g, g).str());
  for (const auto &g : enumerate_elements(b.group()))
    vb.push_back(b.evaluate(g, g).str());
  std::sort(va.begin(), va.end());
  std::sort(vb.begin(), vb.end());
  CHECK(va == vb);
}

TEST_CASE("isometry cap") {
  Limits tight;
  tight.isometry_cap = 10;
  LinkingForm f = direct_sum(LinkingForm::cyclic(1, 5), LinkingForm::cyclic(1, 5));
  CHECK_THROWS_AS(are_isometric(f, f, tight), CapExceeded);
  // cyclic fast path ignores the isometry cap
  LinkingForm c = LinkingForm::cyclic(2, 63);
  CHECK(are_isometric(c, c, tight));
}
