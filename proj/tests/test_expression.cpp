#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "errors.hpp"
#include "knot_expression.hpp"
#include "witt.hpp"

using namespace bandforms;

namespace {
const RecordTable &tbl() { return RecordTable::builtin(); }
} // namespace

TEST_CASE("record table: builtin matches the shipped data file") {
#ifdef BANDFORMS_DATA_DIR
  RecordTable from_file =
      RecordTable::load_file(std::string(BANDFORMS_DATA_DIR) +
                             "/knot_records.txt");
  CHECK(from_file.records().size() == tbl().records().size());
  CHECK(from_file.version() == tbl().version());
  for (size_t i = 0; i < from_file.records().size(); ++i)
    CHECK(from_file.records()[i].name == tbl().records()[i].name);
#endif
}

TEST_CASE("record table parsing and validation") {
  RecordTable t = RecordTable::parse(
      "version 1\n"
      "# comment\n"
      "9_99 det=11 bridge=3 u=2 g4s=1 mu=3:2,5:4 src=\"unit test\"\n");
  const KnotRecord *r = t.find("9_99");
  REQUIRE(r != nullptr);
  CHECK(*r->det == 11);
  CHECK(*r->bridge == 3);
  CHECK(r->mu_r.at(3) == 2);
  CHECK(r->mu_r.at(5) == 4);
  CHECK(r->src == "unit test");
  CHECK(t.find("nope") == nullptr);

  CHECK_THROWS_AS(RecordTable::parse("x det=3 src=\"s\"\n"), InputError);
  CHECK_THROWS_AS(RecordTable::parse("version 1\nx det=4 src=\"s\"\n"),
                  InputError); // even det
  CHECK_THROWS_AS(RecordTable::parse("version 1\nx det=3\n"), InputError);
  CHECK_THROWS_AS(
      RecordTable::parse("version 1\nx det=3 fraction=5/2 src=\"s\"\n"),
      InputError); // det != p
  CHECK_THROWS_AS(RecordTable::parse("version 1\nx bad=3 src=\"s\"\n"),
                  InputError);
  CHECK_THROWS_AS(RecordTable::parse("version 1\nx src=\"s\"\nx src=\"s\"\n"),
                  InputError); // duplicate
}

TEST_CASE("fraction matching up to two-bridge equivalence and mirror") {
  // 5_2 ships fraction 7/5; K(7/2) is its mirror (5 = 7-2), K(7/3) its
  // inverse class
  CHECK(tbl().match_fraction(7, 5) == tbl().find("5_2"));
  CHECK(tbl().match_fraction(7, 2) == tbl().find("5_2"));
  CHECK(tbl().match_fraction(7, 3) == tbl().find("5_2"));
  CHECK(tbl().match_fraction(29, 12) == tbl().find("8_12"));
  CHECK(tbl().match_fraction(29, 8) == tbl().find("8_13"));
  // 8_12 and 8_13 share the determinant but not the class
  CHECK(tbl().match_fraction(29, 12) != tbl().find("8_13"));
  CHECK(tbl().match_fraction(11, 2) == nullptr);
}

TEST_CASE("expression parsing examples") {
  KnotExpression e = parse_expression("K(7/2) # m(r(K(9/2)))", tbl());
  REQUIRE(e.summands.size() == 2);
  CHECK(e.summands[0].p == 7);
  CHECK(e.summands[0].q == 2);
  CHECK_FALSE(e.summands[0].mirrored);
  CHECK(e.summands[1].p == 9);
  CHECK(e.summands[1].mirrored);
  CHECK(e.summands[1].reversed);

  CHECK_THROWS_AS(parse_expression("K(4/2)", tbl()), InputError);
  CHECK_THROWS_AS(parse_expression("K(9/3)", tbl()), InputError);
  CHECK_THROWS_AS(parse_expression("K(7/2) #", tbl()), InputError);
  CHECK_THROWS_AS(parse_expression("unknown_knot", tbl()), InputError);

  // double mirrors cancel
  KnotExpression m2 = parse_expression("m(m(K(3/1)))", tbl());
  REQUIRE(m2.summands.size() == 1);
  CHECK_FALSE(m2.summands[0].mirrored);

  // markers distribute over sums and parentheses group
  KnotExpression d = parse_expression("m(K(3/1) # (K(5/2) # K(7/2)))", tbl());
  REQUIRE(d.summands.size() == 3);
  for (const auto &leaf : d.summands) CHECK(leaf.mirrored);

  // named knots resolve through the table
  KnotExpression n = parse_expression("4_1 # m(r(4_1))", tbl());
  REQUIRE(n.summands.size() == 2);
  CHECK(n.summands[0].kind == LeafKind::two_bridge);
  CHECK(n.summands[0].p == 5);
  REQUIRE(n.summands[0].record != nullptr);
  CHECK(n.summands[0].record->name == "4_1");

  // pd literals
  KnotExpression pd = parse_expression("pd{X(1,4,2,5);X(3,6,4,1);X(5,2,6,3)}", tbl());
  REQUIRE(pd.summands.size() == 1);
  CHECK(pd.summands[0].kind == LeafKind::goeritz);
}

TEST_CASE("parse errors carry the offset") {
  try {
    parse_expression("K(7/2) $ K(9/2)", tbl());
    FAIL("expected InputError");
  } catch (const InputError &e) {
    CHECK(std::string(e.what()).find("offset") != std::string::npos);
  }
}

TEST_CASE("double twist constructor") {
  KnotLeaf c = two_bridge_of_double_twist(22, 62);
  CHECK(c.p == 1365);
  CHECK(c.q == 62);
  KnotLeaf f8 = two_bridge_of_double_twist(2, 2);
  CHECK(f8.p == 5);
  CHECK(f8.q == 2); // the figure-eight knot
  CHECK_THROWS_AS(two_bridge_of_double_twist(1, 1), InputError);
  // negative twists normalize through the sign of mn+1
  KnotLeaf neg = two_bridge_of_double_twist(2, -2);
  CHECK(neg.p == 3);
  CHECK(neg.q == 2); // -3/-2 ~ 3/(-2 mod 3)
  // C(0, n): unknot
  CHECK(two_bridge_of_double_twist(0, 4).p == 1);
}

TEST_CASE("double cover forms") {
  CHECK(are_isometric(double_cover_form(parse_expression("K(7/2)", tbl())),
                      LinkingForm::cyclic(2, 7)));
  CHECK(are_isometric(
      double_cover_form(parse_expression("K(7/2) # K(9/2)", tbl())),
      LinkingForm::cyclic(8, 63)));
  LinkingForm slice =
      double_cover_form(parse_expression("K(3/1) # m(r(K(3/1)))", tbl()));
  CHECK(slice.group() == FiniteAbelianGroup({3, 3}));
  CHECK(mu_an(slice) == 0);

  // mirror negates, reverse does nothing
  LinkingForm f = double_cover_form(parse_expression("K(7/2)", tbl()));
  LinkingForm fm = double_cover_form(parse_expression("m(K(7/2))", tbl()));
  LinkingForm fr = double_cover_form(parse_expression("r(K(7/2))", tbl()));
  CHECK(fm.gram()[0][0] == (-f.gram()[0][0]));
  CHECK(fr.gram()[0][0] == f.gram()[0][0]);

  // named leaf without aliases cannot be resolved
  RecordTable bare = RecordTable::parse("version 1\nmystery bridge=3 src=\"x\"\n");
  CHECK_THROWS_AS(double_cover_form(parse_expression("mystery", bare)),
                  InputError);
}

TEST_CASE("determinants") {
  CHECK(determinant(parse_expression("K(7/2)", tbl())) == 7);
  CHECK(determinant(parse_expression("K(7/2) # K(9/2)", tbl())) == 63);
  CHECK(determinant(parse_expression("m(K(5/2))", tbl())) == 5);
  // multiplicative over sums, invariant under markers
  CHECK(determinant(parse_expression("m(K(5/2)) # r(K(7/2)) # K(3/1)", tbl())) ==
        105);
  // PD alias and fraction alias agree on the corpus
  for (const char *name : {"3_1", "4_1", "5_2", "6_1"}) {
    const KnotRecord *rec = tbl().find(name);
    REQUIRE(rec != nullptr);
    REQUIRE(rec->pd.has_value());
    KnotExpression via_pd = parse_expression("pd{" + *rec->pd + "}", tbl());
    CHECK(determinant(via_pd) == rec->fraction->first);
  }
}

TEST_CASE("determinant is odd for every valid expression") {
  std::mt19937 rng(57);
  std::uniform_int_distribution<long> pdist(1, 40);
  for (int iter = 0; iter < 60; ++iter) {
    long p = 2 * pdist(rng) + 1;
    std::uniform_int_distribution<long> qdist(1, p - 1);
    long q = qdist(rng);
    mpz_class g;
    mpz_class pz(p), qz(q);
    mpz_gcd(g.get_mpz_t(), pz.get_mpz_t(), qz.get_mpz_t());
    if (g != 1) continue;
    std::string expr = "K(" + std::to_string(p) + "/" + std::to_string(q) + ")";
    if (iter % 2) expr += " # m(K(3/1))";
    CHECK(determinant(parse_expression(expr, tbl())) % 2 == 1);
  }
}

TEST_CASE("sum reordering: same determinant, isometric forms") {
  auto a = parse_expression("K(3/1) # K(5/2) # m(K(7/2))", tbl());
  auto b = parse_expression("m(K(7/2)) # K(3/1) # K(5/2)", tbl());
  CHECK(determinant(a) == determinant(b));
  CHECK(are_isometric(double_cover_form(a), double_cover_form(b)));
}

TEST_CASE("shape detection") {
  auto j1 = detect_k_minus_mirror(parse_expression("K(5/2) # m(r(K(5/2)))", tbl()));
  REQUIRE(j1.has_value());
  CHECK(j1->summands.size() == 1);
  CHECK(j1->summands[0].p == 5);

  CHECK_FALSE(detect_k_minus_mirror(parse_expression("K(5/2) # K(5/2)", tbl()))
                  .has_value());

  auto j2 = detect_k_minus_mirror(parse_expression("m(r(K(7/2))) # K(7/2)", tbl()));
  REQUIRE(j2.has_value());
  CHECK(j2->summands[0].p == 7);

  // two-pair shape
  auto j3 = detect_k_minus_mirror(parse_expression(
      "K(5/2) # K(7/2) # m(r(K(7/2))) # m(r(K(5/2)))", tbl()));
  REQUIRE(j3.has_value());
  CHECK(j3->summands.size() == 2);

  // r(m(...)) matches m(r(...)): the markers commute
  auto j4 = detect_k_minus_mirror(parse_expression("K(5/2) # r(m(K(5/2)))", tbl()));
  CHECK(j4.has_value());

  CHECK_FALSE(detect_k_minus_mirror(parse_expression("K(5/2)", tbl())).has_value());
  CHECK_FALSE(detect_k_minus_mirror(parse_expression("K(5/2) # m(K(5/2))", tbl()))
                  .has_value());
}

TEST_CASE("bridge index via Schubert additivity") {
  CHECK(bridge_index(parse_expression("K(7/2)", tbl())) == 2);
  CHECK(bridge_index(parse_expression("K(7/2) # K(9/2)", tbl())) == 3);
  CHECK(bridge_index(parse_expression("m(r(K(7/2))) # K(9/2) # 4_1", tbl())) == 4);
  // named knot with bridge data but no resolvable form still reports
  RecordTable extra = RecordTable::parse(
      "version 1\nbig3 bridge=3 src=\"unit test\"\n");
  CHECK(bridge_index(parse_expression("big3 # big3", extra)) == 5);
  // named knot without bridge data: absent
  RecordTable bare = RecordTable::parse("version 1\nraw det=3 src=\"x\"\n");
  CHECK_FALSE(bridge_index(parse_expression("raw", bare)).has_value());
}
