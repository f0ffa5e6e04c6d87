#include "doctest.h"

#include <algorithm>
#include <utility>
#include <vector>

#include "adet/driver.hpp"
#include "fixtures.hpp"

using namespace adet;
using fixtures::code_of;

namespace {

using RowPair = std::pair<std::vector<Int>, std::vector<Int>>;

/* incidence/coordinate rows as an order-free multiset */
std::vector<RowPair> row_multiset(const Pattern& pat) {
  std::vector<RowPair> rows;
  for (int e = 0; e < pat.points(); ++e) rows.push_back({pat.I.row_vec(e), pat.P.row_vec(e)});
  std::sort(rows.begin(), rows.end());
  return rows;
}

/* the cleaned pattern after the first merging round of the cubic run,
 * worked out by hand: six directions, twelve crossings in three cells */
Pattern cubic_round1_golden() {
  IntMat b = fixtures::hexagon_rotated_ba();
  IntMat i = fixtures::incidence_from_pairs(
      6, {{2, 6}, {5, 6}, {2, 3}, {3, 5}, {1, 2}, {1, 5}, {2, 4}, {4, 5}, {1, 3}, {1, 6},
          {3, 4}, {4, 6}});
  std::vector<std::vector<long>> prows;
  for (int t = 0; t < 4; ++t) prows.push_back({0, 0, 0, 0, 1, 1});
  for (int t = 0; t < 4; ++t) prows.push_back({1, 0, -1, 0, 1, 1});
  for (int t = 0; t < 4; ++t) prows.push_back({1, -1, -1, 0, 1, 2});
  return Pattern{b, i, IntMat::from(prows)};
}

}  // namespace

TEST_SUITE("driver") {

TEST_CASE("initial pattern of the cubic relations is the two by two grid") {
  Pattern pat = initial_pattern(fixtures::cubic_ba());
  Pattern ref = fixtures::block22_pattern();
  CHECK(pat.B == ref.B);
  CHECK(pat.I == ref.I);
  CHECK(pat.P == ref.P);
}

TEST_CASE("initial pattern of the triangle relations is the unit grid") {
  Pattern pat = initial_pattern(fixtures::triangle_ba());
  CHECK(pat.B == IntMat::from({{1, 0, -1, 0}, {0, 1, 0, -1}}));
  CHECK(pat.I == fixtures::incidence_from_pairs(4, {{1, 2}, {1, 4}, {3, 2}, {3, 4}}));
  CHECK(pat.P == IntMat::from({{1, 0, 0, 1}, {1, 0, 0, 1}, {1, 0, 0, 1}, {1, 0, 0, 1}}));
  CHECK(validate(pat, Level::VeryGood).all_pass());
}

TEST_CASE("initial pattern rejections") {
  CHECK(code_of([] { initial_pattern(IntMat::from({{1, -1, 0}})); }) == Errc::BadInput);
  CHECK(code_of([] { initial_pattern(IntMat::from({{1, -1, 0}, {0, 0, 0}})); }) ==
        Errc::BadInput);
}

TEST_CASE("terminal detection") {
  CHECK(is_terminal(fixtures::hexagon_ba(), fixtures::hexagon_pattern()));
  CHECK(!is_terminal(fixtures::cubic_ba(), fixtures::block22_pattern()));
  /* a doubled relation column only needs the primitive direction present */
  CHECK(is_terminal(IntMat::from({{2, 0, -2}, {0, 2, -2}}), fixtures::hexagon_pattern()));
  /* a zero column can never be realized */
  CHECK(!is_terminal(IntMat::from({{1, 0, -1}, {0, 0, 0}}), fixtures::hexagon_pattern()));
}

TEST_CASE("merge plan of the first cubic round") {
  MergePlan plan = merge_plan(fixtures::cubic_ba(), fixtures::block22_pattern());

  CHECK(plan.S == IntMat::from({{0, 0, 1, 1, 0, 0, -1, -1},
                                {-1, -1, -2, -2, 1, 1, 2, 2},
                                {2, 2, 1, 1, -2, -2, -1, -1},
                                {-1, -1, 0, 0, 1, 1, 0, 0}}));

  IntMat r(4, 8);
  r.at(1, 3) = 1;
  r.at(2, 7) = 1;
  CHECK(plan.R == r);

  CHECK(plan.rho == std::vector<Int>{0, 0, 0, 1, 0, 0, 0, 1});
  CHECK(plan.lambda == std::vector<Int>{1, 0, 0, 0, 1, 0, 0, 0});
  CHECK(plan.q == 2);
  CHECK(plan.sigma == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7});
  CHECK(plan.phi == std::vector<int>{5, 0, 1, 2, 2, 3, 4, 5});

  REQUIRE(plan.M.rows() == 8);
  REQUIRE(plan.M.cols() == 6);
  Pattern merged = apply_merge(fixtures::block22_pattern(), plan.M);
  CHECK(merged.B == fixtures::hexagon_rotated_ba());
  CHECK(merged.points() == 14);

  Pattern cleaned = clean(merged);
  CHECK(cleaned.B == fixtures::hexagon_rotated_ba());
  CHECK(cleaned.points() == 12);
  CHECK(validate(cleaned, Level::VeryGood).all_pass());
  CHECK(row_multiset(cleaned) == row_multiset(cubic_round1_golden()));
}

TEST_CASE("merge plan rejections") {
  CHECK(code_of([] { merge_plan(fixtures::hexagon_ba(), fixtures::hexagon_pattern()); }) ==
        Errc::AlreadyTerminal);

  Pattern blk = fixtures::block22_pattern();
  std::vector<int> perm = {0, 1, 2, 3, 5, 4, 6, 7};
  Pattern swapped = make_pattern(blk.B.with_cols_permuted(perm), blk.I.with_cols_permuted(perm),
                                 blk.P.with_cols_permuted(perm));
  CHECK(code_of([&] { merge_plan(fixtures::cubic_ba(), swapped); }) == Errc::NotVeryGood);

  CHECK(code_of([&] { apply_merge(blk, IntMat(7, 6)); }) == Errc::BadInput);
}

TEST_CASE("cleaning is idle on a pattern that is already very good") {
  Pattern hex = fixtures::hexagon_pattern();
  Pattern out = clean(hex);
  CHECK(out.B == hex.B);
  CHECK(out.I == hex.I);
  CHECK(out.P == hex.P);
}

TEST_CASE("cleaning rejects an unrepairable crossing deficit") {
  /* losing one crossing between two transversal zigzags cannot be fixed */
  Pattern hex = fixtures::hexagon_pattern();
  hex.I = hex.I.without_rows({0});
  hex.P = hex.P.without_rows({0});
  CHECK(code_of([&] { clean(hex); }) == Errc::CleanFailed);
}

TEST_CASE("full run on the cubic relations") {
  RunResult rr = run(fixtures::cubic_ba());

  REQUIRE(rr.trace.size() == 5);
  CHECK(rr.trace[0].name == "step-000");
  CHECK(rr.trace[1].name == "step-001-merged");
  CHECK(rr.trace[2].name == "step-001-clean");
  CHECK(rr.trace[3].name == "step-002-merged");
  CHECK(rr.trace[4].name == "step-002-clean");

  CHECK(row_multiset(rr.trace[2].pat) == row_multiset(cubic_round1_golden()));

  CHECK(rr.final.B == IntMat::from({{1, 0, -2, 1}, {0, 1, 1, -2}}));
  CHECK(rr.final.points() == 10);
  CHECK(validate(rr.final, Level::VeryGood).all_pass());

  REQUIRE(rr.prov.size() == 4);
  const int expect[4][2] = {{0, 0}, {1, 3}, {2, 1}, {3, 2}};
  for (int t = 0; t < 4; ++t) {
    CHECK(rr.prov[t].bz_col == expect[t][0]);
    CHECK(rr.prov[t].ba_col == expect[t][1]);
    CHECK(rr.prov[t].multiplier == 1);
  }
}

TEST_CASE("full run on the hexagon relations lands on the frozen pattern") {
  RunResult rr = run(fixtures::hexagon_ba());
  REQUIRE(rr.trace.size() == 3);
  Pattern ref = fixtures::hexagon_pattern();
  CHECK(rr.final.B == ref.B);
  CHECK(rr.final.I == ref.I);
  CHECK(rr.final.P == ref.P);
  REQUIRE(rr.prov.size() == 6);
  for (int t = 0; t < 6; ++t) {
    CHECK(rr.prov[t].bz_col == t);
    CHECK(rr.prov[t].ba_col == t);
    CHECK(rr.prov[t].multiplier == 1);
  }
}

TEST_CASE("a rotated direction set reaches the same cleaned pattern") {
  RunResult rot = run(fixtures::hexagon_rotated_ba());
  RunResult cub = run(fixtures::cubic_ba());
  CHECK(rot.final.B == cub.trace[2].pat.B);
  CHECK(rot.final.I == cub.trace[2].pat.I);
  CHECK(rot.final.P == cub.trace[2].pat.P);
}

TEST_CASE("terminal input finishes without any iteration") {
  IntMat ba = IntMat::from({{1, 1, 0, 0, -1, -1, 0, 0}, {0, 0, 1, 1, 0, 0, -1, -1}});
  RunResult rr = run(ba);
  CHECK(rr.trace.size() == 1);
  Pattern ref = fixtures::block22_pattern();
  CHECK(rr.final.B == ref.B);
  CHECK(rr.final.I == ref.I);
  CHECK(rr.final.P == ref.P);
  REQUIRE(rr.prov.size() == 8);
  for (int t = 0; t < 8; ++t) {
    CHECK(rr.prov[t].bz_col == t);
    CHECK(rr.prov[t].ba_col == t);
    CHECK(rr.prov[t].multiplier == 1);
  }
}

TEST_CASE("run through the chain replacement") {
  RunResult rr = run(fixtures::n5_chain_ba());
  CHECK(rr.final.p() == 5);
  CHECK(rr.final.points() == 7);
  CHECK(rr.final.B == IntMat::from({{1, 1, -1, -1, 0}, {1, 1, 0, -1, -1}}));
  REQUIRE(rr.prov.size() == 5);
  const int expect[5][2] = {{0, 0}, {1, 1}, {2, 3}, {3, 2}, {4, 4}};
  for (int t = 0; t < 5; ++t) {
    CHECK(rr.prov[t].bz_col == expect[t][0]);
    CHECK(rr.prov[t].ba_col == expect[t][1]);
    CHECK(rr.prov[t].multiplier == 1);
  }
}

TEST_CASE("a doubled relation column claims two pattern columns") {
  RunResult rr = run(fixtures::n5_doubled_ba());
  CHECK(rr.final.p() == 6);
  CHECK(rr.final.points() == 12);
  CHECK(rr.final.B == IntMat::from({{1, 1, -1, -1, 0, 0}, {1, 1, 0, 0, -1, -1}}));
  REQUIRE(rr.prov.size() == 6);
  CHECK(rr.prov[4].bz_col == 4);
  CHECK(rr.prov[4].ba_col == 4);
  CHECK(rr.prov[4].multiplier == 2);
  CHECK(rr.prov[5].bz_col == 5);
  CHECK(rr.prov[5].ba_col == 4);
  CHECK(rr.prov[5].multiplier == 2);
}

}
