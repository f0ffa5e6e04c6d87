#include "adet/moves.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace adet {

namespace {

std::string col_pair(int i, int j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

}  // namespace

Pattern merge(const Pattern& pat, int i, int j) {
  std::vector<int> rows = intersection_rows(pat, i, j);
  if (rows.size() != 1)
    fail(Errc::NotSingleIntersection, "columns " + col_pair(i, j) + " cross " +
                                          std::to_string(rows.size()) + " times, expected 1");
  IntMat b = pat.B, in = pat.I, pm = pat.P;
  b.add_col(i, j);
  in.add_col(i, j);
  pm.add_col(i, j);
  return Pattern{b.without_col(j), in.without_col(j).without_rows(rows),
                 pm.without_col(j).without_rows(rows)};
}

Pattern repair1(const Pattern& pat, int i, int j) {
  auto zi = pat.zeta(i), zj = pat.zeta(j);
  if (zi[0] != -zj[0] || zi[1] != -zj[1])
    fail(Errc::PreconditionFailed, "columns " + col_pair(i, j) + " are not opposite");
  std::vector<int> rows = intersection_rows(pat, i, j);
  if (rows.size() < 2)
    fail(Errc::PreconditionFailed, "columns " + col_pair(i, j) + " cross " +
                                       std::to_string(rows.size()) + " times, expected at least 2");
  /* The deletion is legal when the two crossings bound a common cell. The
   * crossing rows all carry the same incidence entries, so a shared cell
   * shows up as a repeated coordinate row; delete the first such pair. */
  auto same_row = [&](int a, int b) {
    for (int c = 0; c < pat.p(); ++c)
      if (pat.P.at(a, c) != pat.P.at(b, c)) return false;
    return true;
  };
  for (size_t a = 0; a + 1 < rows.size(); ++a)
    for (size_t b = a + 1; b < rows.size(); ++b)
      if (same_row(rows[a], rows[b])) {
        std::vector<int> dead = {rows[a], rows[b]};
        return Pattern{pat.B, pat.I.without_rows(dead), pat.P.without_rows(dead)};
      }
  fail(Errc::PreconditionFailed,
       "no two crossings of columns " + col_pair(i, j) + " bound a common cell");
}

Pattern repair2(const Pattern& pat, int i, int j) {
  auto zi = pat.zeta(i), zj = pat.zeta(j);
  if (zi != zj || i == j)
    fail(Errc::PreconditionFailed, "columns " + col_pair(i, j) + " are not parallel equals");
  std::vector<int> rows = intersection_rows(pat, i, j);
  if (rows.size() != 2)
    fail(Errc::PreconditionFailed, "columns " + col_pair(i, j) + " cross " +
                                       std::to_string(rows.size()) + " times, expected 2");

  /* height profile between the two parallel zigzags */
  const int r = pat.points();
  std::vector<Int> h(r);
  Int m = pat.P.at(0, i) - pat.P.at(0, j);
  for (int e = 0; e < r; ++e) {
    h[e] = pat.P.at(e, i) - pat.P.at(e, j);
    if (h[e] > m) m = h[e];
  }
  for (int e = 0; e < r; ++e)
    if (m - h[e] > 2)
      fail(Errc::PreconditionFailed,
           "height profile between columns " + col_pair(i, j) + " spreads over more than 3 values");

  IntMat pm = pat.P, in = pat.I;
  for (int e = 0; e < r; ++e) {
    if (h[e] == m) {
      pm.at(e, i) -= 1;
      pm.at(e, j) += 1;
    }
    if ((h[e] == m && pat.I.at(e, i) == 1) || (h[e] == m - 1 && pat.I.at(e, j) == 1))
      std::swap(in.at(e, i), in.at(e, j));
  }
  return Pattern{pat.B, in.without_rows(rows), pm.without_rows(rows)};
}

Pattern repair3(const Pattern& pat, int z0, std::vector<int> seq) {
  const int p = pat.p();
  if (z0 < 0 || z0 >= p) fail(Errc::IndexOutOfRange, "anchor column out of range");
  if (seq.size() < 2 || seq.size() % 2 != 0)
    fail(Errc::PreconditionFailed, "sequence must have positive even length");
  {
    std::set<int> s(seq.begin(), seq.end());
    s.insert(z0);
    if (s.size() != seq.size() + 1)
      fail(Errc::PreconditionFailed, "anchor and sequence columns must be distinct");
  }
  for (int c : seq)
    if (c < 0 || c >= p) fail(Errc::IndexOutOfRange, "sequence column out of range");

  auto z = pat.zeta(z0);
  auto first = pat.zeta(seq.front());
  bool same = (first == z);
  std::array<Int, 2> neg = {-z[0], -z[1]};
  if (!same && first != neg)
    fail(Errc::PreconditionFailed, "sequence must start in the class of the anchor or its opposite");
  /* normalize so that odd positions carry the opposite direction */
  if (same) std::reverse(seq.begin(), seq.end());

  const int len = int(seq.size());
  for (int t = 0; t < len; ++t) {
    bool odd = (t % 2 == 0); /* seq[t] is the (t+1)-th zigzag of the chain */
    auto zc = pat.zeta(seq[t]);
    if (zc != (odd ? neg : z))
      fail(Errc::PreconditionFailed, "sequence directions do not alternate with the anchor class");
    if (intersection_rows(pat, z0, seq[t]).size() != 2)
      fail(Errc::PreconditionFailed, "anchor must cross every sequence member exactly twice");
  }
  for (int a = 0; a < len; ++a)
    for (int b = a + 1; b < len; ++b)
      if (!intersection_rows(pat, seq[a], seq[b]).empty())
        fail(Errc::PreconditionFailed, "sequence members must be pairwise non-crossing");
  for (int t = 1; t < len; ++t) {
    /* chain position t+1 wants a (-1)^(t+1)-opposite pair with its predecessor */
    PairType ty = opposite_pair_type(pat, seq[t - 1], seq[t]);
    bool ok = (t % 2 == 1) ? pair_is_plus(ty) : pair_is_minus(ty);
    if (!ok)
      fail(Errc::PreconditionFailed, "sequence members " + col_pair(seq[t - 1], seq[t]) +
                                         " do not form the required opposite pair");
  }

  /* coordinate columns of the sequence become signed copies of the anchor */
  IntMat pw = pat.P;
  for (int t = 0; t < len; ++t) {
    int sign = (t % 2 == 0) ? -1 : 1;
    for (int e = 0; e < pat.points(); ++e) pw.at(e, seq[t]) = sign * pat.P.at(e, z0);
  }

  std::vector<bool> in_seq(p, false);
  for (int c : seq) in_seq[c] = true;

  std::vector<std::vector<Int>> new_i, new_p;
  auto chain_col = [&](int t) { return t == 0 ? z0 : seq[t - 1]; };
  for (int e = 0; e < pat.points(); ++e) {
    bool drop = false;
    for (int c = 0; c < p && !drop; ++c)
      if (in_seq[c] && pat.I.at(e, c) == 1) drop = true;
    if (drop) continue;
    if (pat.I.at(e, z0) == 1) {
      auto [a, b] = pat.point_cols(e);
      int other = (a == z0) ? b : a;
      /* expand into a chain of 1 + len crossings against the same partner */
      std::vector<Int> prow = pw.row_vec(e);
      for (int t = 0; t <= len; ++t) {
        if (t > 0 && t % 2 == 1) {
          prow[chain_col(t - 1)] -= 1;
          prow[chain_col(t)] += 1;
        }
        std::vector<Int> irow(p, 0);
        irow[other] = 1;
        irow[chain_col(t)] = 1;
        new_i.push_back(irow);
        new_p.push_back(prow);
      }
    } else {
      new_i.push_back(pat.I.row_vec(e));
      new_p.push_back(pw.row_vec(e));
    }
  }

  IntMat im(int(new_i.size()), p), pm(int(new_p.size()), p);
  for (size_t e = 0; e < new_i.size(); ++e)
    for (int c = 0; c < p; ++c) {
      im.at(int(e), c) = new_i[e][c];
      pm.at(int(e), c) = new_p[e][c];
    }
  return Pattern{pat.B, im, pm};
}

}  // namespace adet
