#include "adet/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace adet {

VarId make_var(Family f, int index) {
  if (index < 1 || index >= kFamilyStride) fail(Errc::Internal, "variable index out of range");
  return int(f) * kFamilyStride + index;
}

Family var_family(VarId v) { return Family(v / kFamilyStride); }

int var_index(VarId v) { return v % kFamilyStride; }

std::string var_name(VarId v) {
  static const char letters[3] = {'v', 'u', 'z'};
  return letters[int(var_family(v))] + std::to_string(var_index(v));
}

std::optional<VarId> parse_var_name(const std::string& name) {
  if (name.size() < 2) return std::nullopt;
  Family f;
  switch (name[0]) {
    case 'v': f = Family::V; break;
    case 'u': f = Family::U; break;
    case 'z': f = Family::Z; break;
    default: return std::nullopt;
  }
  int idx = 0;
  for (size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
    idx = idx * 10 + (name[i] - '0');
    if (idx >= kFamilyStride) return std::nullopt;
  }
  if (idx < 1) return std::nullopt;
  return make_var(f, idx);
}

Monomial Monomial::variable(VarId v, int exp) {
  Monomial m;
  if (exp < 0) fail(Errc::Internal, "negative exponent");
  if (exp > 0) m.f_.emplace_back(v, exp);
  return m;
}

Monomial Monomial::from_factors(std::vector<std::pair<VarId, int>> factors) {
  std::sort(factors.begin(), factors.end());
  Monomial m;
  for (auto& [v, e] : factors) {
    if (e < 0) fail(Errc::Internal, "negative exponent");
    if (e == 0) continue;
    if (!m.f_.empty() && m.f_.back().first == v)
      m.f_.back().second += e;
    else
      m.f_.emplace_back(v, e);
  }
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (auto& [v, e] : f_) d += e;
  return d;
}

int Monomial::exponent(VarId v) const {
  for (auto& [w, e] : f_)
    if (w == v) return e;
  return 0;
}

Monomial Monomial::times(const Monomial& o) const {
  Monomial m;
  size_t i = 0, j = 0;
  while (i < f_.size() || j < o.f_.size()) {
    if (j == o.f_.size() || (i < f_.size() && f_[i].first < o.f_[j].first)) {
      m.f_.push_back(f_[i++]);
    } else if (i == f_.size() || o.f_[j].first < f_[i].first) {
      m.f_.push_back(o.f_[j++]);
    } else {
      m.f_.emplace_back(f_[i].first, f_[i].second + o.f_[j].second);
      ++i;
      ++j;
    }
  }
  return m;
}

std::optional<Monomial> Monomial::divided_by(const Monomial& o) const {
  Monomial m;
  size_t i = 0;
  for (auto& [v, e] : o.f_) {
    while (i < f_.size() && f_[i].first < v) m.f_.push_back(f_[i++]);
    if (i == f_.size() || f_[i].first != v || f_[i].second < e) return std::nullopt;
    if (f_[i].second > e) m.f_.emplace_back(v, f_[i].second - e);
    ++i;
  }
  while (i < f_.size()) m.f_.push_back(f_[i++]);
  return m;
}

int Monomial::compare(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  /* walk variables in ascending order; the first difference decides, with
   * the larger exponent on the earlier variable winning */
  size_t i = 0, j = 0;
  while (i < a.f_.size() && j < b.f_.size()) {
    if (a.f_[i].first < b.f_[j].first) return 1;   /* a has the earlier variable */
    if (b.f_[j].first < a.f_[i].first) return -1;
    if (a.f_[i].second != b.f_[j].second) return a.f_[i].second > b.f_[j].second ? 1 : -1;
    ++i;
    ++j;
  }
  if (i < a.f_.size()) return 1;
  if (j < b.f_.size()) return -1;
  return 0;
}

std::string Monomial::str() const {
  if (f_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (auto& [v, e] : f_) {
    if (!first) os << "*";
    first = false;
    os << var_name(v);
    if (e > 1) os << "^" << e;
  }
  return os.str();
}

Poly::Poly(long c) {
  if (c != 0) t_.emplace(Monomial(), Int(c));
}

Poly::Poly(Int c) {
  if (c != 0) t_.emplace(Monomial(), std::move(c));
}

Poly Poly::variable(VarId v) { return term(1, Monomial::variable(v)); }

Poly Poly::term(Int coeff, Monomial m) {
  Poly p;
  if (coeff != 0) p.t_.emplace(std::move(m), std::move(coeff));
  return p;
}

const std::pair<const Monomial, Int>* Poly::leading() const {
  if (t_.empty()) return nullptr;
  return &*t_.begin();
}

int Poly::total_degree() const {
  int d = -1;
  for (auto& [m, c] : t_) d = std::max(d, m.degree());
  return d;
}

Poly& Poly::operator+=(const Poly& o) {
  for (auto& [m, c] : o.t_) {
    auto [it, fresh] = t_.try_emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) t_.erase(it);
    }
  }
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (auto& [m, c] : o.t_) {
    auto [it, fresh] = t_.try_emplace(m, -c);
    if (!fresh) {
      it->second -= c;
      if (it->second == 0) t_.erase(it);
    }
  }
  return *this;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& [m, c] : p.t_) c = -c;
  return p;
}

Poly Poly::times_term(const Int& coeff, const Monomial& m) const {
  Poly p;
  if (coeff == 0) return p;
  for (auto& [mm, cc] : t_) p.t_.emplace(mm.times(m), cc * coeff);
  return p;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly p;
  for (auto& [m, c] : a.t_) p += b.times_term(c, m);
  return p;
}

std::string Poly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : t_) {
    Int a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (m.empty())
      os << a.get_str();
    else if (a == 1)
      os << m.str();
    else
      os << a.get_str() << "*" << m.str();
  }
  return os.str();
}

Poly exact_div(const Poly& num, const Poly& den) {
  if (den.is_zero()) fail(Errc::Internal, "exact_div by zero polynomial");
  Poly q;
  Poly r = num;
  const auto* ld = den.leading();
  while (!r.is_zero()) {
    const auto* lr = r.leading();
    auto m = lr->first.divided_by(ld->first);
    if (!m) fail(Errc::Internal, "exact_div: leading monomial not divisible");
    if (!mpz_divisible_p(lr->second.get_mpz_t(), ld->second.get_mpz_t()))
      fail(Errc::Internal, "exact_div: leading coefficient not divisible");
    Int c = lr->second / ld->second;
    q += Poly::term(c, *m);
    r -= den.times_term(c, *m);
  }
  return q;
}

namespace {

/* Independent cofactor expansion used to cross-check the elimination
 * determinant on small matrices. Columns still in play are tracked with a
 * bitmask; rows are consumed top to bottom. */
Poly det_cofactor(const std::vector<std::vector<Poly>>& m, int row, unsigned colmask) {
  const int n = int(m.size());
  if (row == n) return Poly(1);
  Poly acc;
  int sign = 1;
  for (int j = 0; j < n; ++j) {
    if (!(colmask & (1u << j))) continue;
    if (!m[row][j].is_zero()) {
      Poly sub = det_cofactor(m, row + 1, colmask & ~(1u << j));
      Poly piece = m[row][j] * sub;
      acc += sign > 0 ? piece : -piece;
    }
    sign = -sign;
  }
  return acc;
}

}  // namespace

Poly determinant(const std::vector<std::vector<Poly>>& m) {
  const int n = int(m.size());
  for (auto& row : m)
    if (int(row.size()) != n) fail(Errc::NonSquare, "determinant of a non-square matrix");
  if (n == 0) return Poly(1);

  /* fraction-free elimination; each step divides exactly by the previous pivot */
  std::vector<std::vector<Poly>> w = m;
  int sign = 1;
  Poly prev(1);
  Poly det;
  bool vanished = false;
  for (int k = 0; k < n - 1 && !vanished; ++k) {
    if (w[k][k].is_zero()) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (!w[i][k].is_zero()) {
          piv = i;
          break;
        }
      if (piv < 0) {
        vanished = true;
        break;
      }
      std::swap(w[k], w[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        w[i][j] = exact_div(w[i][j] * w[k][k] - w[i][k] * w[k][j], prev);
      w[i][k] = Poly();
    }
    prev = w[k][k];
  }
  if (!vanished) det = sign > 0 ? w[n - 1][n - 1] : -w[n - 1][n - 1];

  if (n <= 6) {
    Poly check = det_cofactor(m, 0, (1u << n) - 1);
    if (!(check == det)) fail(Errc::Internal, "determinant strategies disagree");
  }
  return det;
}

Poly substitute(const Poly& p, const std::map<VarId, Subst>& s) {
  Poly out;
  for (auto& [m, c] : p.terms()) {
    Int coeff = c;
    std::vector<std::pair<VarId, int>> factors;
    for (auto& [v, e] : m.factors()) {
      auto it = s.find(v);
      if (it == s.end()) {
        factors.emplace_back(v, e);
        continue;
      }
      Int pw;
      mpz_pow_ui(pw.get_mpz_t(), it->second.coeff.get_mpz_t(), static_cast<unsigned long>(e));
      coeff *= pw;
      if (it->second.var) factors.emplace_back(*it->second.var, e);
    }
    if (coeff != 0) out += Poly::term(coeff, Monomial::from_factors(std::move(factors)));
  }
  return out;
}

Poly sign_normalized(Poly p) {
  const auto* lt = p.leading();
  if (lt && lt->second < 0) return -p;
  return p;
}

}  // namespace adet
