#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "errors.hpp"
#include "pd_diagram.hpp"
#include "witt.hpp"

using namespace bandforms;

namespace {

const char *kTrefoil = "X(1,4,2,5);X(3,6,4,1);X(5,2,6,3)";
const char *kFigureEight = "X(4,2,5,1);X(8,6,1,5);X(6,3,7,4);X(2,7,3,8)";
const char *kFiveTwo = "X(1,4,2,5);X(3,8,4,9);X(5,10,6,1);X(9,6,10,7);X(7,2,8,3)";
const char *kSixOne =
    "X(1,4,2,5);X(7,10,8,11);X(3,9,4,8);X(9,3,10,2);X(5,12,6,1);X(11,6,12,7)";

mpz_class det_of(const std::string &pd_text) {
  PdCode pd = parse_pd(pd_text);
  return goeritz_determinant(goeritz_matrix(pd, checkerboard(pd)));
}

} // namespace

TEST_CASE("pd parser accepts the grammar") {
  PdCode pd = parse_pd(kTrefoil);
  CHECK(pd.size() == 3);
  // whitespace separators work as well as semicolons
  PdCode pd2 = parse_pd("X(1,4,2,5)\nX(3,6,4,1)  X(5,2,6,3)");
  CHECK(pd2.size() == 3);
}

TEST_CASE("pd parser rejects bad input") {
  CHECK_THROWS_AS(parse_pd(""), InputError);
  CHECK_THROWS_AS(parse_pd("X(1,4,2)"), InputError);
  CHECK_THROWS_AS(parse_pd("Y(1,4,2,5)"), InputError);
  // label appearing once
  CHECK_THROWS_AS(parse_pd("X(1,4,2,5);X(3,6,4,1);X(5,2,6,7)"), InputError);
  // label out of range
  CHECK_THROWS_AS(parse_pd("X(1,4,2,9);X(3,6,4,1);X(5,2,6,3)"), InputError);
  // two-component link: 1..4 twice each but orientations clash
  CHECK_THROWS_AS(parse_pd("X(1,3,2,4);X(3,1,4,2)"), InputError);
}

TEST_CASE("face counts follow the Euler formula") {
  CHECK(trace_faces(parse_pd(kTrefoil)).face_corners.size() == 5);
  CHECK(trace_faces(parse_pd(kFigureEight)).face_corners.size() == 6);
  CHECK(trace_faces(parse_pd("X(1,2,2,1)")).face_corners.size() == 3); // kink
}

TEST_CASE("checkerboard coloring is proper") {
  for (const char *code : {kTrefoil, kFigureEight, kFiveTwo, kSixOne}) {
    PdCode pd = parse_pd(code);
    auto col = checkerboard(pd);
    int whites = 0;
    for (int c : col.color) whites += c;
    CHECK(whites == col.white_count);
    CHECK(col.white_count * 2 <= static_cast<int>(col.color.size()) + 1);
    // adjacent faces across each edge end get opposite colors
    for (int i = 0; i < pd.size(); ++i)
      for (int s = 0; s < 4; ++s) {
        int f1 = col.faces.face_of_corner[4 * i + s];
        int f2 = col.faces.face_of_corner[4 * i + (s + 1) % 4];
        CHECK(col.color[f1] != col.color[f2]);
      }
  }
  // trefoil: 2 white, 3 black
  CHECK(checkerboard(parse_pd(kTrefoil)).white_count == 2);
  // figure-eight: 3/3 split resolved by the tie rule
  CHECK(checkerboard(parse_pd(kFigureEight)).white_count == 3);
}

TEST_CASE("goeritz determinants match the two-bridge corpus") {
  CHECK(abs(det_of(kTrefoil)) == 3);
  CHECK(abs(det_of(kFigureEight)) == 5);
  CHECK(abs(det_of(kFiveTwo)) == 7);
  CHECK(abs(det_of(kSixOne)) == 9);
}

TEST_CASE("goeritz forms land in the right class up to global sign") {
  auto form_of = [](const char *code) {
    PdCode pd = parse_pd(code);
    return linking_form_from_goeritz(goeritz_matrix(pd, checkerboard(pd)));
  };
  auto in_class = [](const LinkingForm &f, const LinkingForm &target) {
    return are_isometric(f, target) || are_isometric(f, target.negated());
  };
  CHECK(in_class(form_of(kTrefoil), LinkingForm::cyclic(1, 3)));
  CHECK(in_class(form_of(kFigureEight), LinkingForm::cyclic(2, 5)));
  CHECK(in_class(form_of(kFiveTwo), LinkingForm::cyclic(5, 7)));
  CHECK(in_class(form_of(kSixOne), LinkingForm::cyclic(7, 9)));
}

TEST_CASE("determinant is invariant under edge relabeling") {
  // rotate all labels by a constant: e -> ((e - 1 + shift) mod 2n) + 1
  // preserves the diagram and the orientation conventions
  std::mt19937 rng(3);
  for (const char *code : {kTrefoil, kFigureEight, kFiveTwo, kSixOne}) {
    PdCode pd = parse_pd(code);
    mpz_class base = abs(det_of(code));
    long m = pd.edge_count();
    for (int iter = 0; iter < 6; ++iter) {
      long shift = std::uniform_int_distribution<long>(1, m - 1)(rng);
      std::string text;
      for (const auto &c : pd.crossings) {
        text += "X(";
        for (int s = 0; s < 4; ++s) {
          text += std::to_string((c.e[s] - 1 + shift) % m + 1);
          text += s < 3 ? "," : ")";
        }
        text += ";";
      }
      CHECK(abs(det_of(text)) == base);
    }
  }
}

TEST_CASE("goeritz zero determinant is rejected") {
  // a connected-sum style diagram cannot produce 0 here, so synthesize the
  // failure through the matrix API instead
  IntMatrix z(1, 1);
  CHECK_THROWS_AS(goeritz_determinant(z), InputError);
}

TEST_CASE("nugatory crossings do not break the pipeline") {
  CHECK(abs(det_of("X(1,2,2,1)")) == 1);
}
