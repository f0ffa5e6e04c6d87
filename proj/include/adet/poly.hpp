#pragma once

/* Exact sparse multivariate polynomials over arbitrary-precision integers.
 *
 * Variables come in three families, v, u and z, each indexed from 1. The
 * canonical term order used everywhere (map iteration, serialization, sign
 * normalization) is graded lexicographic, descending: higher total degree
 * first, ties broken by the exponent of the earliest variable, where
 * variables are ordered v1 < v2 < ... < u1 < ... < z1 < ... and an earlier
 * variable with a larger exponent makes the monomial greater. */

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adet/error.hpp"

namespace adet {

using Int = mpz_class;
using VarId = int;

enum class Family { V = 0, U = 1, Z = 2 };

constexpr VarId kFamilyStride = 1 << 20;

VarId make_var(Family f, int index);
inline VarId var_v(int index) { return make_var(Family::V, index); }
inline VarId var_u(int index) { return make_var(Family::U, index); }
inline VarId var_z(int index) { return make_var(Family::Z, index); }
Family var_family(VarId v);
int var_index(VarId v);
std::string var_name(VarId v);
std::optional<VarId> parse_var_name(const std::string& name);

class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(VarId v, int exp = 1);
  static Monomial from_factors(std::vector<std::pair<VarId, int>> factors);

  bool empty() const { return f_.empty(); }
  int degree() const;
  int exponent(VarId v) const;
  const std::vector<std::pair<VarId, int>>& factors() const { return f_; }

  Monomial times(const Monomial& o) const;
  std::optional<Monomial> divided_by(const Monomial& o) const;

  /* canonical order; positive when a is the greater monomial */
  static int compare(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) = default;

  std::string str() const;

 private:
  /* ascending VarId, exponents strictly positive */
  std::vector<std::pair<VarId, int>> f_;
};

struct MonomialGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return Monomial::compare(a, b) > 0;
  }
};

class Poly {
 public:
  using TermMap = std::map<Monomial, Int, MonomialGreater>;

  Poly() = default;
  Poly(long c);
  explicit Poly(Int c);

  static Poly variable(VarId v);
  static Poly term(Int coeff, Monomial m);

  bool is_zero() const { return t_.empty(); }
  const TermMap& terms() const { return t_; }
  /* greatest term in the canonical order; null for the zero polynomial */
  const std::pair<const Monomial, Int>* leading() const;
  int total_degree() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly operator-() const;
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) = default;

  Poly times_term(const Int& coeff, const Monomial& m) const;

  std::string str() const;

 private:
  TermMap t_;
};

/* Exact quotient num/den; any nondivisibility is an internal logic error
 * because callers only divide where exactness is guaranteed. */
Poly exact_div(const Poly& num, const Poly& den);

/* Fraction-free elimination determinant with, for matrices up to 6 x 6, a
 * built-in cross-check against an independent cofactor expansion. */
Poly determinant(const std::vector<std::vector<Poly>>& m);

struct Subst {
  Int coeff;
  std::optional<VarId> var;  /* value is coeff * var, or the constant coeff */
};

Poly substitute(const Poly& p, const std::map<VarId, Subst>& s);

/* Negates the polynomial when its leading coefficient is negative, so the
 * greatest term in the canonical order has a positive coefficient. */
Poly sign_normalized(Poly p);

}  // namespace adet
