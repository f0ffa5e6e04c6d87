#include "doctest.h"

#include "adet/poly.hpp"
#include "fixtures.hpp"

using namespace adet;
using fixtures::code_of;

namespace {

Poly v(int i) { return Poly::variable(var_v(i)); }
Poly u(int i) { return Poly::variable(var_u(i)); }
Poly z(int i) { return Poly::variable(var_z(i)); }

}  // namespace

TEST_SUITE("poly") {

TEST_CASE("variable ids and names") {
  CHECK(var_name(var_v(1)) == "v1");
  CHECK(var_name(var_u(12)) == "u12");
  CHECK(var_name(var_z(3)) == "z3");
  CHECK(var_family(var_u(5)) == Family::U);
  CHECK(var_index(var_u(5)) == 5);

  CHECK(parse_var_name("v7") == var_v(7));
  CHECK(parse_var_name("z10") == var_z(10));
  CHECK(!parse_var_name("w1").has_value());
  CHECK(!parse_var_name("v0").has_value());
  CHECK(!parse_var_name("v").has_value());
  CHECK(!parse_var_name("v1x").has_value());
  CHECK(!parse_var_name("").has_value());
}

TEST_CASE("monomial order is graded lexicographic") {
  Monomial a = Monomial::from_factors({{var_v(1), 3}, {var_v(4), 3}});
  Monomial b = Monomial::from_factors({{var_v(1), 2}, {var_v(2), 1}, {var_v(3), 1}, {var_v(4), 2}});
  CHECK(Monomial::compare(a, b) > 0);

  /* degree dominates the variable comparison */
  Monomial c = Monomial::variable(var_v(9), 2);
  Monomial d = Monomial::variable(var_v(1), 1);
  CHECK(Monomial::compare(c, d) > 0);

  /* v beats u beats z at equal degree */
  CHECK(Monomial::compare(Monomial::variable(var_v(1)), Monomial::variable(var_u(1))) > 0);
  CHECK(Monomial::compare(Monomial::variable(var_u(1)), Monomial::variable(var_z(1))) > 0);
  CHECK(Monomial::compare(a, a) == 0);
}

TEST_CASE("monomial products and quotients") {
  Monomial m = Monomial::variable(var_v(1), 2).times(Monomial::variable(var_v(2)));
  CHECK(m.degree() == 3);
  CHECK(m.exponent(var_v(1)) == 2);
  CHECK(m.exponent(var_v(3)) == 0);

  auto q = m.divided_by(Monomial::variable(var_v(1)));
  REQUIRE(q.has_value());
  CHECK(*q == Monomial::from_factors({{var_v(1), 1}, {var_v(2), 1}}));
  CHECK(!m.divided_by(Monomial::variable(var_v(3))).has_value());
  CHECK(!m.divided_by(Monomial::variable(var_v(2), 2)).has_value());
  CHECK(m.divided_by(m) == Monomial());
}

TEST_CASE("arithmetic") {
  Poly p = (v(1) + v(2)) * (v(1) - v(2));
  CHECK(p == v(1) * v(1) - v(2) * v(2));
  CHECK(p.total_degree() == 2);

  CHECK((v(1) - v(1)).is_zero());
  CHECK(Poly(0).is_zero());
  CHECK(Poly(3) + Poly(-3) == Poly());

  Poly q = v(1) * Poly(2) + u(1);
  q += q;
  CHECK(q == Poly(4) * v(1) + Poly(2) * u(1));
  CHECK(-q == Poly(-4) * v(1) + Poly(-2) * u(1));
}

TEST_CASE("string form") {
  CHECK(Poly().str() == "0");
  CHECK(Poly(-7).str() == "-7");
  CHECK(v(2).str() == "v2");
  CHECK((-v(1)).str() == "-v1");
  CHECK((v(1) * v(1) - v(2)).str() == "v1^2 - v2");
  CHECK((Poly(2) * v(1) * u(3) * z(2) + Poly(1)).str() == "2*v1*u3*z2 + 1");

  /* leading term first in the canonical order */
  Poly quintic = Poly(27) * v(1) * v(1) * v(1) * v(4) * v(4) * v(4) -
                 Poly(18) * v(1) * v(1) * v(2) * v(3) * v(4) * v(4) +
                 Poly(4) * v(1) * v(1) * v(3) * v(3) * v(3) * v(4) +
                 Poly(4) * v(1) * v(2) * v(2) * v(2) * v(4) * v(4) -
                 v(1) * v(2) * v(2) * v(3) * v(3) * v(4);
  CHECK(quintic.str() ==
        "27*v1^3*v4^3 - 18*v1^2*v2*v3*v4^2 + 4*v1^2*v3^3*v4 + 4*v1*v2^3*v4^2 - "
        "v1*v2^2*v3^2*v4");
}

TEST_CASE("leading term") {
  CHECK(Poly().leading() == nullptr);
  Poly p = v(2) - v(1) * v(1);
  const auto* lt = p.leading();
  REQUIRE(lt != nullptr);
  CHECK(lt->first == Monomial::variable(var_v(1), 2));
  CHECK(lt->second == -1);
}

TEST_CASE("exact division") {
  Poly num = v(1) * v(1) - v(2) * v(2);
  CHECK(exact_div(num, v(1) + v(2)) == v(1) - v(2));
  CHECK(exact_div(num, v(1) - v(2)) == v(1) + v(2));
  CHECK(exact_div(Poly(), v(1)) == Poly());
  CHECK(exact_div(Poly(6) * v(1) * v(2), Poly(3) * v(2)) == Poly(2) * v(1));
}

TEST_CASE("determinant") {
  CHECK(determinant({}) == Poly(1));
  CHECK(determinant({{v(5)}}) == v(5));
  CHECK(determinant({{v(1), v(2)}, {v(3), v(4)}}) == v(1) * v(4) - v(2) * v(3));

  /* permutation matrix, odd permutation */
  std::vector<std::vector<Poly>> perm = {
      {Poly(0), Poly(1), Poly(0)}, {Poly(1), Poly(0), Poly(0)}, {Poly(0), Poly(0), Poly(1)}};
  CHECK(determinant(perm) == Poly(-1));

  /* singular */
  CHECK(determinant({{v(1), v(1)}, {v(2), v(2)}}) == Poly());

  /* Vandermonde in three variables factors as expected */
  std::vector<std::vector<Poly>> vand = {{Poly(1), v(1), v(1) * v(1)},
                                         {Poly(1), v(2), v(2) * v(2)},
                                         {Poly(1), v(3), v(3) * v(3)}};
  CHECK(determinant(vand) == (v(2) - v(1)) * (v(3) - v(1)) * (v(3) - v(2)));

  CHECK(code_of([] { determinant({{Poly(1), Poly(2)}}); }) == Errc::NonSquare);

  /* 7 x 7 identity exercises the elimination path without the cross-check */
  std::vector<std::vector<Poly>> eye(7, std::vector<Poly>(7));
  for (int i = 0; i < 7; ++i) eye[i][i] = Poly(1);
  CHECK(determinant(eye) == Poly(1));
}

TEST_CASE("substitution") {
  Poly p = z(1) * u(1) * u(2) + Poly(2) * z(2) * u(3);
  std::map<VarId, Subst> s;
  s[var_z(1)] = Subst{Int(3), std::nullopt};
  s[var_z(2)] = Subst{Int(1), std::nullopt};
  s[var_u(1)] = Subst{Int(1), var_v(1)};
  s[var_u(2)] = Subst{Int(2), var_v(4)};
  s[var_u(3)] = Subst{Int(1), var_v(2)};
  CHECK(substitute(p, s) == Poly(6) * v(1) * v(4) + Poly(2) * v(2));

  /* a zero constant erases terms */
  std::map<VarId, Subst> kill;
  kill[var_z(1)] = Subst{Int(0), std::nullopt};
  CHECK(substitute(p, kill) == Poly(2) * z(2) * u(3));

  /* repeated factors pick up the coefficient power */
  Poly sq = u(1) * u(1);
  std::map<VarId, Subst> dbl;
  dbl[var_u(1)] = Subst{Int(2), var_v(1)};
  CHECK(substitute(sq, dbl) == Poly(4) * v(1) * v(1));

  CHECK(substitute(Poly(), s) == Poly());
}

TEST_CASE("sign normalization") {
  Poly p = v(2) - v(1) * v(1);
  CHECK(sign_normalized(p) == v(1) * v(1) - v(2));
  CHECK(sign_normalized(sign_normalized(p)) == sign_normalized(p));
  CHECK(sign_normalized(Poly()) == Poly());
  CHECK(sign_normalized(v(1) + v(2)) == v(1) + v(2));
}

}
