#include "adet/pattern.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "adet/lattice.hpp"

namespace adet {

IntMat Pattern::Q() const {
  IntMat q = P;
  for (int e = 0; e < I.rows(); ++e)
    for (int j = 0; j < I.cols(); ++j) q.at(e, j) -= I.at(e, j);
  return q;
}

std::array<Int, 2> Pattern::zeta(int j) const { return {B.at(0, j), B.at(1, j)}; }

std::pair<int, int> Pattern::point_cols(int e) const {
  int a = -1, b = -1;
  for (int j = 0; j < I.cols(); ++j) {
    if (I.at(e, j) == 0) continue;
    if (I.at(e, j) != 1) fail(Errc::BadInput, "incidence entries must be 0 or 1");
    if (a < 0)
      a = j;
    else if (b < 0)
      b = j;
    else
      fail(Errc::BadInput, "incidence row " + std::to_string(e + 1) + " has more than two ones");
  }
  if (b < 0)
    fail(Errc::BadInput, "incidence row " + std::to_string(e + 1) + " has fewer than two ones");
  return {a, b};
}

Pattern make_pattern(IntMat b, IntMat i, IntMat p) {
  if (b.rows() != 2) fail(Errc::BadInput, "direction matrix must have 2 rows");
  if (i.cols() != b.cols() || p.cols() != b.cols())
    fail(Errc::BadInput, "incidence and coordinate matrices must match the column count of B");
  if (i.rows() != p.rows())
    fail(Errc::BadInput, "incidence and coordinate matrices must have the same number of rows");
  return Pattern{std::move(b), std::move(i), std::move(p)};
}

std::vector<int> intersection_rows(const Pattern& pat, int i, int j) {
  if (i < 0 || j < 0 || i >= pat.p() || j >= pat.p() || i == j)
    fail(Errc::IndexOutOfRange, "column pair (" + std::to_string(i + 1) + "," +
                                    std::to_string(j + 1) + ") out of range");
  std::vector<int> rows;
  for (int e = 0; e < pat.points(); ++e)
    if (pat.I.at(e, i) == 1 && pat.I.at(e, j) == 1) rows.push_back(e);
  return rows;
}

PairType opposite_pair_type(const Pattern& pat, int j, int k) {
  return opposite_pair_type(pat, pat.Q(), j, k);
}

PairType opposite_pair_type(const Pattern& pat, const IntMat& q, int j, int k) {
  if (j < 0 || k < 0 || j >= pat.p() || k >= pat.p())
    fail(Errc::IndexOutOfRange, "column index out of range");
  auto zj = pat.zeta(j), zk = pat.zeta(k);
  if (zj[0] != -zk[0] || zj[1] != -zk[1])
    fail(Errc::NotOpposite, "columns " + std::to_string(j + 1) + " and " + std::to_string(k + 1) +
                                " do not have opposite directions");
  bool plus = true, minus = true;
  for (int e = 0; e < pat.points(); ++e) {
    if (q.at(e, j) != -q.at(e, k)) plus = false;
    if (pat.P.at(e, j) != -pat.P.at(e, k)) minus = false;
    if (!plus && !minus) break;
  }
  if (plus && minus) return PairType::Both;
  if (plus) return PairType::Plus;
  if (minus) return PairType::Minus;
  return PairType::None;
}

std::vector<HomologyClass> homology_classes(const IntMat& b) {
  std::vector<HomologyClass> runs;
  for (int j = 0; j < b.cols(); ++j) {
    std::array<Int, 2> z = {b.at(0, j), b.at(1, j)};
    if (!runs.empty() && runs.back().vec == z) {
      ++runs.back().size;
    } else {
      runs.push_back({j, 1, z});
    }
  }
  for (size_t a = 0; a < runs.size(); ++a)
    for (size_t b = a + 1; b < runs.size(); ++b)
      if (runs[a].vec == runs[b].vec)
        fail(Errc::NotGood, "equal columns are not contiguous: columns " +
                                std::to_string(runs[a].start + 1) + " and " +
                                std::to_string(runs[b].start + 1) + " share a direction");
  return runs;
}

std::vector<HomologyClass> homology_classes(const Pattern& pat) { return homology_classes(pat.B); }

const char* level_name(Level l) {
  switch (l) {
    case Level::Basic: return "basic";
    case Level::Good: return "good";
    case Level::VeryGood: return "verygood";
  }
  return "?";
}

bool Report::all_pass() const {
  for (auto& c : conditions)
    if (!c.pass) return false;
  return true;
}

std::string Report::first_failure() const {
  for (auto& c : conditions)
    if (!c.pass) return c.name + ": " + c.detail;
  return "";
}

namespace {

std::string col_pair(int i, int j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

/* distinct rows of m, as lexicographically sorted vectors */
std::set<std::vector<Int>> distinct_rows(const IntMat& m) {
  std::set<std::vector<Int>> s;
  for (int i = 0; i < m.rows(); ++i) s.insert(m.row_vec(i));
  return s;
}

}  // namespace

bool band_pair_ok(const Pattern& pat, const HomologyClass& a, const HomologyClass& b) {
  IntMat q = pat.Q();
  const int mrs = std::min(a.size, b.size) - 1;
  for (int t = 0; t <= mrs; ++t)
    if (!pair_is_plus(opposite_pair_type(pat, q, a.start + t, b.start + t))) return false;
  if (mrs == 0) return true;
  bool left = true, right = true;
  for (int t = 0; t < mrs; ++t) {
    if (!pair_is_minus(opposite_pair_type(pat, q, a.start + t + 1, b.start + t))) left = false;
    if (!pair_is_minus(opposite_pair_type(pat, q, a.start + t, b.start + t + 1))) right = false;
    if (!left && !right) return false;
  }
  return left || right;
}

Report validate(const Pattern& pat, Level level) {
  Report rep;
  auto add = [&](const std::string& name, bool pass, const std::string& detail) {
    rep.conditions.push_back({name, pass, pass ? "" : detail});
  };
  const int p = pat.p();
  const int r = pat.points();

  /* rank and column sums */
  {
    bool pass = rank_of(pat.B) == 2;
    std::string detail = pass ? "" : "direction matrix does not have rank 2";
    Int s0 = 0, s1 = 0;
    for (int j = 0; j < p; ++j) {
      s0 += pat.B.at(0, j);
      s1 += pat.B.at(1, j);
    }
    if (s0 != 0 || s1 != 0) {
      pass = false;
      detail = "columns of the direction matrix do not sum to zero";
    }
    add("rank-and-colsum", pass, detail);
  }

  /* primitive columns */
  {
    bool pass = true;
    std::string detail;
    for (int j = 0; j < p && pass; ++j) {
      Int g = gcd(abs(pat.B.at(0, j)), abs(pat.B.at(1, j)));
      if (g != 1) {
        pass = false;
        detail = "column " + std::to_string(j + 1) + " has entry gcd " + g.get_str();
      }
    }
    add("primitive-columns", pass, detail);
  }

  /* two ones per incidence row, all entries 0/1 */
  {
    bool pass = true;
    std::string detail;
    for (int e = 0; e < r && pass; ++e) {
      int ones = 0;
      for (int j = 0; j < p; ++j) {
        const Int& v = pat.I.at(e, j);
        if (v == 1)
          ++ones;
        else if (v != 0) {
          pass = false;
          detail = "incidence row " + std::to_string(e + 1) + " has an entry other than 0/1";
          break;
        }
      }
      if (pass && ones != 2) {
        pass = false;
        detail = "incidence row " + std::to_string(e + 1) + " has " + std::to_string(ones) +
                 " ones, expected 2";
      }
    }
    add("two-ones-per-row", pass, detail);
  }

  /* P and Q rows of each point differ by 1 exactly in its two columns */
  {
    bool pass = true;
    std::string detail;
    IntMat q = pat.Q();
    for (int e = 0; e < r && pass; ++e) {
      for (int j = 0; j < p; ++j) {
        Int d = pat.P.at(e, j) - q.at(e, j);
        if (d != pat.I.at(e, j)) {
          pass = false;
          detail = "coordinate rows of point " + std::to_string(e + 1) + " are inconsistent";
          break;
        }
      }
    }
    add("cell-consistency", pass, detail);
  }

  /* equal counts of distinct node labels on both sides */
  {
    bool pass = true;
    std::string detail;
    try {
      IntMat a = integer_kernel(pat.B).transposed();
      size_t nb = distinct_rows(pat.P * a).size();
      size_t nw = distinct_rows(pat.Q() * a).size();
      if (nb != nw) {
        pass = false;
        detail = std::to_string(nb) + " black labels vs " + std::to_string(nw) + " white labels";
      }
    } catch (const Error& e) {
      pass = false;
      detail = e.what();
    }
    add("balanced-node-count", pass, detail);
  }

  if (level == Level::Basic) return rep;

  /* cyclic order: nonnegative consecutive determinants, no adjacent
   * opposite directions, and no direction shared or opposed across the
   * wrap-around */
  {
    bool pass = true;
    std::string detail;
    for (int j = 0; j + 1 < p && pass; ++j) {
      if (det2_cols(pat.B, j, j + 1) < 0) {
        pass = false;
        detail = "columns " + col_pair(j, j + 1) + " turn clockwise";
      } else {
        auto za = pat.zeta(j), zb = pat.zeta(j + 1);
        if (za[0] == -zb[0] && za[1] == -zb[1]) {
          pass = false;
          detail = "columns " + col_pair(j, j + 1) + " are adjacent opposites";
        }
      }
    }
    if (pass && p >= 2) {
      if (det2_cols(pat.B, p - 1, 0) < 0) {
        pass = false;
        detail = "columns " + col_pair(p - 1, 0) + " turn clockwise";
      } else {
        auto za = pat.zeta(p - 1), zb = pat.zeta(0);
        if ((za[0] == zb[0] && za[1] == zb[1]) || (za[0] == -zb[0] && za[1] == -zb[1])) {
          pass = false;
          detail = "first and last columns share a direction or its opposite";
        }
      }
    }
    add("cyclic-order", pass, detail);
  }

  /* intersection counts match pairwise determinants */
  {
    bool pass = true;
    std::string detail;
    for (int i = 0; i < p && pass; ++i)
      for (int j = i + 1; j < p; ++j) {
        Int want = abs(det2_cols(pat.B, i, j));
        size_t got = intersection_rows(pat, i, j).size();
        if (want != int(got)) {
          pass = false;
          detail = "columns " + col_pair(i, j) + " cross " + std::to_string(got) +
                   " times, determinant demands " + want.get_str();
          break;
        }
      }
    add("transversal-count", pass, detail);
  }

  if (level == Level::Good) return rep;

  /* opposite-pair ladder between each pair of mutually opposite classes */
  {
    bool pass = true;
    std::string detail;
    try {
      auto classes = homology_classes(pat);
      for (size_t a = 0; a < classes.size() && pass; ++a)
        for (size_t b = a + 1; b < classes.size(); ++b) {
          if (classes[a].vec[0] != -classes[b].vec[0] || classes[a].vec[1] != -classes[b].vec[1])
            continue;
          if (!band_pair_ok(pat, classes[a], classes[b])) {
            pass = false;
            detail = "classes at columns " + std::to_string(classes[a].start + 1) + " and " +
                     std::to_string(classes[b].start + 1) + " violate the opposite-pair ladder";
          }
          break;
        }
    } catch (const Error& e) {
      pass = false;
      detail = e.what();
    }
    add("opposite-ladder", pass, detail);
  }

  return rep;
}

}  // namespace adet
