#include "doctest.h"

#include <algorithm>

#include "adet/kasteleyn.hpp"
#include "adet/newton.hpp"
#include "fixtures.hpp"

using namespace adet;

namespace {

Poly u(int i) { return Poly::variable(var_u(i)); }

std::vector<Int> sorted_lengths(const NewtonReport& rep) {
  std::vector<Int> v = rep.edge_lengths;
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_SUITE("newton") {

TEST_CASE("hexagon determinant spans a six-edge polygon of unit lengths") {
  ComputeResult res = principal_adet(fixtures::hexagon_ba());
  NewtonReport rep = newton_polygon_check(res.det_u, res.rr.final.B);
  CHECK(rep.pass);
  CHECK(!rep.degenerate);
  REQUIRE(rep.hull_edges.size() == 6);
  CHECK(sorted_lengths(rep) == std::vector<Int>{1, 1, 1, 1, 1, 1});
  CHECK(rep.note.find("hull matches the direction classes") != std::string::npos);
}

TEST_CASE("doubled grid directions give four edges of length two") {
  IntMat ba = IntMat::from({{1, 1, 0, 0, -1, -1, 0, 0}, {0, 0, 1, 1, 0, 0, -1, -1}});
  ComputeResult res = principal_adet(ba);
  NewtonReport rep = newton_polygon_check(res.det_u, res.rr.final.B);
  CHECK(rep.pass);
  REQUIRE(rep.hull_edges.size() == 4);
  CHECK(sorted_lengths(rep) == std::vector<Int>{2, 2, 2, 2});
}

TEST_CASE("cubic determinant matches its final pattern") {
  ComputeResult res = principal_adet(fixtures::cubic_ba());
  NewtonReport rep = newton_polygon_check(res.det_u, res.rr.final.B);
  CHECK(rep.pass);
  CHECK(rep.hull_edges.size() == 4);
}

TEST_CASE("single-term support is degenerate and passes vacuously") {
  Poly one_term = u(1) * u(2);
  NewtonReport rep = newton_polygon_check(one_term, fixtures::onebyone_pattern().B);
  CHECK(rep.pass);
  CHECK(rep.degenerate);
}

TEST_CASE("collinear support is degenerate") {
  Poly line = u(1) + u(1) * u(1) + u(1) * u(1) * u(1);
  NewtonReport rep = newton_polygon_check(line, fixtures::hexagon_pattern().B);
  CHECK(rep.pass);
  CHECK(rep.degenerate);
  CHECK(rep.note.find("rank 1") != std::string::npos);
}

TEST_CASE("failures are reported without throwing") {
  IntMat hexb = fixtures::hexagon_pattern().B;

  SUBCASE("zero polynomial") {
    NewtonReport rep = newton_polygon_check(Poly(), hexb);
    CHECK(!rep.pass);
    CHECK(rep.note == "the determinant is zero");
  }

  SUBCASE("foreign variable in the support") {
    Poly bad = u(1) * u(2) + Poly::variable(var_v(1)) * u(2);
    NewtonReport rep = newton_polygon_check(bad, hexb);
    CHECK(!rep.pass);
    CHECK(rep.note.find("not a monomial in u") != std::string::npos);
  }

  SUBCASE("support of too high a rank") {
    Poly cube = Poly(1) + u(1) + u(2) + u(3);
    NewtonReport rep = newton_polygon_check(cube, hexb);
    CHECK(!rep.pass);
    CHECK(rep.note.find("rank") != std::string::npos);
  }

  SUBCASE("edge count differs from the class count") {
    /* a triangle hull against six hexagon classes */
    Poly tri = Poly(1) + u(1) + u(2);
    NewtonReport rep = newton_polygon_check(tri, hexb);
    CHECK(!rep.pass);
    CHECK(rep.note.find("edges") != std::string::npos);
  }

  SUBCASE("matching edge count but wrong lengths") {
    /* a triangle with one doubled edge cannot match three unit classes;
     * the u1 term keeps the difference lattice full, so the doubling is
     * not absorbed by the change of plane coordinates */
    Poly stretched = Poly(1) + u(1) + u(1) * u(1) + u(2);
    NewtonReport rep = newton_polygon_check(stretched, fixtures::triangle_ba());
    CHECK(!rep.pass);
    CHECK(rep.note.find("no unimodular change") != std::string::npos);
  }
}

TEST_CASE("a reflected hull still passes, with a note") {
  /* support pentagon (2,0) (3,0) (3,3) (1,3) (0,2): its edge length
   * sequence read counterclockwise matches no rotation of the class
   * sizes below, but the reversed sequence does, so only the mirrored
   * comparison can succeed */
  Poly pent = u(1) * u(1) + u(1) * u(1) * u(1) + u(1) * u(1) * u(1) * u(2) * u(2) * u(2) +
              u(1) * u(2) * u(2) * u(2) + u(2) * u(2);
  IntMat bz = IntMat::from({{-1, -1, 1, 1, 1, 0, 0, 0, -1}, {1, 1, 1, 0, 0, -1, -1, -1, 0}});
  NewtonReport rep = newton_polygon_check(pent, bz);
  CHECK(rep.pass);
  CHECK(!rep.degenerate);
  REQUIRE(rep.hull_edges.size() == 5);
  CHECK(rep.note.find("after a reflection") != std::string::npos);
}

}
