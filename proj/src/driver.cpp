#include "adet/driver.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <set>

#include "adet/lattice.hpp"
#include "adet/moves.hpp"

namespace adet {

namespace {

int to_int(const Int& v) {
  if (!v.fits_sint_p()) fail(Errc::Internal, "value out of machine range");
  return int(v.get_si());
}

std::string step_name(int iter, const char* suffix) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "step-%03d%s", iter, suffix);
  return buf;
}

}  // namespace

Pattern initial_pattern(const IntMat& ba) {
  if (ba.rows() != 2) fail(Errc::BadInput, "relation matrix must have 2 rows");
  Int n1z = 0, n2z = 0;
  for (int j = 0; j < ba.cols(); ++j) {
    if (ba.at(0, j) > 0) n1z += ba.at(0, j);
    if (ba.at(1, j) > 0) n2z += ba.at(1, j);
  }
  const int n1 = to_int(n1z), n2 = to_int(n2z);
  if (n1 < 1 || n2 < 1)
    fail(Errc::BadInput, "each row of the relation matrix needs a positive entry");

  const int p = 2 * (n1 + n2);
  IntMat b(2, p);
  for (int a = 0; a < n1; ++a) {
    b.at(0, a) = 1;
    b.at(0, n1 + n2 + a) = -1;
  }
  for (int c = 0; c < n2; ++c) {
    b.at(1, n1 + c) = 1;
    b.at(1, 2 * n1 + n2 + c) = -1;
  }

  IntMat im(4 * n1 * n2, p), pm(4 * n1 * n2, p);
  int e = 0;
  for (int a = 1; a <= n1; ++a)
    for (int c = 1; c <= n2; ++c) {
      const int right = a - 1;               /* a-th column (1,0)  */
      const int up = n1 + c - 1;             /* c-th column (0,1)  */
      const int left = n1 + n2 + a - 1;      /* a-th column (-1,0) */
      const int down = 2 * n1 + n2 + c - 1;  /* c-th column (0,-1) */
      const int pairs[4][2] = {{right, up}, {right, down}, {left, up}, {left, down}};
      for (int t = 0; t < 4; ++t) {
        im.at(e + t, pairs[t][0]) = 1;
        im.at(e + t, pairs[t][1]) = 1;
        for (int j = 1; j <= a; ++j) pm.at(e + t, j - 1) = 1;
        for (int j = 1; j <= c; ++j) pm.at(e + t, 2 * n1 + n2 + j - 1) = 1;
        for (int j = 1; j <= a - 1; ++j) pm.at(e + t, n1 + n2 + j - 1) = -1;
        for (int j = 1; j <= c - 1; ++j) pm.at(e + t, n1 + j - 1) = -1;
      }
      e += 4;
    }
  return Pattern{b, im, pm};
}

bool is_terminal(const IntMat& ba, const Pattern& pat) {
  for (int k = 0; k < ba.cols(); ++k) {
    Int g = gcd(abs(ba.at(0, k)), abs(ba.at(1, k)));
    if (g == 0) return false;
    Int p0 = ba.at(0, k) / g, p1 = ba.at(1, k) / g;
    bool found = false;
    for (int j = 0; j < pat.p() && !found; ++j)
      if (pat.B.at(0, j) == p0 && pat.B.at(1, j) == p1) found = true;
    if (!found) return false;
  }
  return true;
}

MergePlan merge_plan(const IntMat& ba, const Pattern& pat) {
  {
    Report rep = validate(pat, Level::VeryGood);
    if (!rep.all_pass()) fail(Errc::NotVeryGood, rep.first_failure());
  }
  if (is_terminal(ba, pat))
    fail(Errc::AlreadyTerminal, "every relation column is already a positive multiple of a pattern column");

  const int n = ba.cols();
  const int p = pat.p();
  MergePlan plan;

  plan.S = IntMat(n, p);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < p; ++j)
      plan.S.at(i, j) = det2(ba.at(0, i), ba.at(1, i), pat.B.at(0, j), pat.B.at(1, j));

  plan.R = IntMat(n, p);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < p; ++j) {
      const Int& s = plan.S.at(i, j);
      if (s >= 0) continue;
      const Int& sc = plan.S.at(i, (j + 1) % p);
      plan.R.at(i, j) = (abs(s) + abs(sc) - abs(s + sc)) / 2;
    }

  plan.rho.assign(p, 0);
  plan.lambda.assign(p, 0);
  plan.q = 0;
  for (int j = 0; j < p; ++j) {
    for (int i = 0; i < n; ++i) plan.rho[j] += plan.R.at(i, j);
    plan.q += plan.rho[j];
  }
  for (int j = 0; j < p; ++j) plan.lambda[j] = plan.rho[(j + p - 1) % p];
  if (plan.q <= 0)
    fail(Errc::MergePlanInconsistent, "no merges demanded although the pattern is not terminal");

  /* per-class demand summary and the shuffle that lines merges up */
  auto classes = homology_classes(pat);
  const int nc = int(classes.size());
  std::map<std::array<Int, 2>, int> by_vec;
  for (int c = 0; c < nc; ++c) by_vec[classes[c].vec] = c;

  std::vector<Int> rho_t(nc, 0), lam_t(nc, 0), mu_t(nc, 0);
  for (int c = 0; c < nc; ++c) {
    for (int t = 0; t < classes[c].size; ++t) {
      int j = classes[c].start + t;
      rho_t[c] = std::max(rho_t[c], plan.rho[j]);
      lam_t[c] = std::max(lam_t[c], plan.lambda[j]);
    }
    mu_t[c] = classes[c].size - rho_t[c] - lam_t[c];
    if (mu_t[c] < 0)
      fail(Errc::MergePlanInconsistent,
           "class at column " + std::to_string(classes[c].start + 1) + " demands more merges than it has columns");
  }

  plan.sigma.assign(p, 0);
  for (int c = 0; c < nc; ++c) {
    Int rho_h = 0, lam_h = 0, mu_h = 0;
    auto it = by_vec.find({-classes[c].vec[0], -classes[c].vec[1]});
    if (it != by_vec.end()) {
      int o = it->second;
      rho_h = std::min(rho_t[c], rho_t[o]);
      lam_h = std::min(lam_t[c], lam_t[o]);
      mu_h = std::min(mu_t[c], mu_t[o]);
    }
    const Int lam_b = lam_t[c] - lam_h, mu_b = mu_t[c] - mu_h, rho_b = rho_t[c] - rho_h;
    /* source blocks in pattern order -> where each lands after the shuffle */
    const std::pair<Int, Int> blocks[6] = {
        {lam_h, 0},
        {mu_h, lam_t[c]},
        {rho_h, lam_t[c] + mu_t[c]},
        {lam_b, lam_h},
        {mu_b, lam_t[c] + mu_h},
        {rho_b, lam_t[c] + mu_t[c] + rho_h},
    };
    int src = 0;
    for (auto& [sz, tstart] : blocks) {
      for (int t = 0; t < to_int(sz); ++t)
        plan.sigma[classes[c].start + src++] = classes[c].start + to_int(tstart) + t;
    }
  }

  /* target positions: consecutive columns that merge share a value */
  plan.phi.assign(p, 0);
  const Int pq = p - plan.q;
  Int lsum = 0;
  for (int j1 = 1; j1 <= p; ++j1) {
    lsum += plan.lambda[j1 - 1];
    Int target = j1 - lsum;
    if (j1 <= plan.lambda[0]) target += pq;
    if (target < 1 || target > pq)
      fail(Errc::MergePlanInconsistent, "merge target out of range at column " + std::to_string(j1));
    plan.phi[j1 - 1] = to_int(target) - 1;
  }

  plan.M = IntMat(p, to_int(pq));
  for (int i = 0; i < p; ++i) plan.M.at(i, plan.phi[plan.sigma[i]]) = 1;

  Int twos = 0;
  for (int j = 0; j < plan.M.cols(); ++j) {
    Int s = 0;
    for (int i = 0; i < p; ++i) s += plan.M.at(i, j);
    if (s == 2)
      ++twos;
    else if (s != 1)
      fail(Errc::MergePlanInconsistent, "merging matrix column " + std::to_string(j + 1) +
                                            " has sum " + s.get_str());
  }
  if (twos != plan.q)
    fail(Errc::MergePlanInconsistent, "merging matrix pairs " + twos.get_str() +
                                          " columns, plan demands " + plan.q.get_str());
  return plan;
}

Pattern apply_merge(const Pattern& pat, const IntMat& m) {
  if (m.rows() != pat.p())
    fail(Errc::BadInput, "merging matrix must have one row per pattern column");
  IntMat b = pat.B * m;
  IntMat in = pat.I * m;
  IntMat pm = pat.P * m;
  std::vector<int> drop;
  for (int e = 0; e < in.rows(); ++e) {
    int nonzero = 0;
    bool two = false;
    for (int j = 0; j < in.cols(); ++j) {
      if (in.at(e, j) == 0) continue;
      ++nonzero;
      two = (in.at(e, j) == 2);
    }
    if (nonzero == 1 && two) drop.push_back(e);
  }
  return Pattern{b, in.without_rows(drop), pm.without_rows(drop)};
}

namespace {

bool belongs_to_plus_pair(const Pattern& pat, const IntMat& q, int col) {
  auto z = pat.zeta(col);
  for (int k = 0; k < pat.p(); ++k) {
    if (k == col) continue;
    auto zk = pat.zeta(k);
    if (zk[0] != -z[0] || zk[1] != -z[1]) continue;
    if (pair_is_plus(opposite_pair_type(pat, q, col, k))) return true;
  }
  return false;
}

/* Depth-first search for orderings of two opposite classes that satisfy
 * the ladder; minus links sit on the `left` side (next x with previous y)
 * or on the right side (previous x with next y). Choices are explored in
 * ascending column order, so the first solution is the smallest. */
bool band_order_dfs(const Pattern& pat, const IntMat& q, const std::vector<int>& xs,
                    const std::vector<int>& ys, int k, bool left, std::vector<int>& xseq,
                    std::vector<int>& yseq, std::vector<bool>& xused, std::vector<bool>& yused) {
  const int t = int(xseq.size());
  if (t == k) return true;
  for (size_t a = 0; a < xs.size(); ++a) {
    if (xused[a]) continue;
    if (t > 0 && left && !pair_is_minus(opposite_pair_type(pat, q, xs[a], yseq[t - 1]))) continue;
    for (size_t b = 0; b < ys.size(); ++b) {
      if (yused[b]) continue;
      if (t > 0 && !left && !pair_is_minus(opposite_pair_type(pat, q, xseq[t - 1], ys[b]))) continue;
      if (!pair_is_plus(opposite_pair_type(pat, q, xs[a], ys[b]))) continue;
      xused[a] = yused[b] = true;
      xseq.push_back(xs[a]);
      yseq.push_back(ys[b]);
      if (band_order_dfs(pat, q, xs, ys, k, left, xseq, yseq, xused, yused)) return true;
      xseq.pop_back();
      yseq.pop_back();
      xused[a] = yused[b] = false;
    }
  }
  return false;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> band_order(
    const Pattern& pat, const HomologyClass& ca, const HomologyClass& cb) {
  IntMat q = pat.Q();
  std::vector<int> xs, ys;
  for (int t = 0; t < ca.size; ++t) xs.push_back(ca.start + t);
  for (int t = 0; t < cb.size; ++t) ys.push_back(cb.start + t);
  const int k = std::min(ca.size, cb.size);
  for (bool left : {true, false}) {
    std::vector<int> xseq, yseq;
    std::vector<bool> xused(xs.size(), false), yused(ys.size(), false);
    if (band_order_dfs(pat, q, xs, ys, k, left, xseq, yseq, xused, yused)) {
      for (size_t a = 0; a < xs.size(); ++a)
        if (!xused[a]) xseq.push_back(xs[a]);
      for (size_t b = 0; b < ys.size(); ++b)
        if (!yused[b]) yseq.push_back(ys[b]);
      return std::make_pair(xseq, yseq);
    }
  }
  return std::nullopt;
}

/* second phase of the schedule: delete crossings of opposite pairs
 * wherever two of them bound a common cell, until none are left */
void opposite_repairs(Pattern& pat) {
  for (bool progress = true; progress;) {
    progress = false;
    for (int i = 0; i < pat.p() && !progress; ++i)
      for (int j = i + 1; j < pat.p() && !progress; ++j) {
        auto zi = pat.zeta(i), zj = pat.zeta(j);
        if (zi[0] != -zj[0] || zi[1] != -zj[1]) continue;
        if (intersection_rows(pat, i, j).size() < 2) continue;
        Pattern cand;
        try {
          cand = repair1(pat, i, j);
        } catch (const Error&) {
          continue;
        }
        pat = cand;
        progress = true;
      }
  }
}

/* phases one and two of the schedule: parallel repairs on equal directions
 * crossing twice, where both or neither zigzag currently sits in a Plus
 * pair, then opposite repairs wherever the deletion leaves an opposite pair */
void linear_repairs(Pattern& pat) {
  for (bool progress = true; progress;) {
    progress = false;
    IntMat q = pat.Q();
    for (int i = 0; i < pat.p() && !progress; ++i)
      for (int j = i + 1; j < pat.p() && !progress; ++j) {
        if (pat.zeta(i) != pat.zeta(j)) continue;
        auto rows = intersection_rows(pat, i, j);
        if (rows.empty()) continue;
        if (rows.size() != 2)
          fail(Errc::CleanFailed, "parallel columns (" + std::to_string(i + 1) + "," +
                                      std::to_string(j + 1) + ") cross " +
                                      std::to_string(rows.size()) + " times");
        if (belongs_to_plus_pair(pat, q, i) != belongs_to_plus_pair(pat, q, j)) continue;
        try {
          pat = repair2(pat, i, j);
        } catch (const Error& e) {
          fail(Errc::CleanFailed, e.what());
        }
        progress = true;
      }
  }

  opposite_repairs(pat);
}

/* phases three and four: reorder columns inside classes wherever the
 * ladder broke, then chain replacements for the remaining crossings, and
 * finally the full validation */
Pattern settle(Pattern pat) {
  {
    std::vector<HomologyClass> classes;
    try {
      classes = homology_classes(pat);
    } catch (const Error& e) {
      fail(Errc::CleanFailed, e.what());
    }
    for (size_t a = 0; a < classes.size(); ++a)
      for (size_t b = a + 1; b < classes.size(); ++b) {
        if (classes[a].vec[0] != -classes[b].vec[0] || classes[a].vec[1] != -classes[b].vec[1])
          continue;
        if (band_pair_ok(pat, classes[a], classes[b])) break;
        auto order = band_order(pat, classes[a], classes[b]);
        if (!order)
          fail(Errc::CleanFailed, "no ordering of the classes at columns " +
                                      std::to_string(classes[a].start + 1) + " and " +
                                      std::to_string(classes[b].start + 1) +
                                      " satisfies the opposite-pair ladder");
        std::vector<int> perm(pat.p());
        for (int t = 0; t < pat.p(); ++t) perm[t] = t;
        for (int t = 0; t < classes[a].size; ++t) perm[classes[a].start + t] = order->first[t];
        for (int t = 0; t < classes[b].size; ++t) perm[classes[b].start + t] = order->second[t];
        pat = Pattern{pat.B.with_cols_permuted(perm), pat.I.with_cols_permuted(perm),
                      pat.P.with_cols_permuted(perm)};
        break;
      }
  }

  /* chain replacements for the remaining crossings, class pair by class pair */
  for (int guard = 0; guard <= pat.p(); ++guard) {
    std::pair<int, int> bad{-1, -1};
    for (int i = 0; i < pat.p() && bad.first < 0; ++i)
      for (int j = i + 1; j < pat.p(); ++j) {
        Int want = abs(det2_cols(pat.B, i, j));
        if (want != int(intersection_rows(pat, i, j).size())) {
          bad = {i, j};
          break;
        }
      }
    if (bad.first < 0) break;
    if (guard == pat.p()) fail(Errc::CleanFailed, "chain replacements do not settle");
    if (det2_cols(pat.B, bad.first, bad.second) != 0)
      fail(Errc::CleanFailed, "crossing count mismatch on a transversal pair (" +
                                  std::to_string(bad.first + 1) + "," +
                                  std::to_string(bad.second + 1) + ")");

    auto classes = homology_classes(pat);
    auto class_of = [&](int col) {
      for (size_t c = 0; c < classes.size(); ++c)
        if (col >= classes[c].start && col < classes[c].start + classes[c].size) return int(c);
      fail(Errc::Internal, "column without class");
    };
    int ca = class_of(bad.first);
    auto va = classes[ca].vec;
    int cb = -1;
    for (size_t c = 0; c < classes.size(); ++c)
      if (classes[c].vec[0] == -va[0] && classes[c].vec[1] == -va[1]) cb = int(c);
    if (cb < 0)
      fail(Errc::CleanFailed, "leftover crossings in a class without an opposite class");
    const HomologyClass& big = classes[ca].size >= classes[cb].size ? classes[ca] : classes[cb];
    const HomologyClass& small = classes[ca].size >= classes[cb].size ? classes[cb] : classes[ca];
    if (big.size == small.size)
      fail(Errc::CleanFailed, "leftover crossings between classes of equal size");

    const int s = small.size;
    const int z0 = big.start + big.size - 1;
    std::vector<int> fwd, rev;
    for (int t = 0; t < s; ++t) {
      fwd.push_back(small.start + t);
      fwd.push_back(big.start + t);
    }
    for (int t = s - 1; t >= 0; --t) {
      rev.push_back(small.start + t);
      rev.push_back(big.start + t);
    }
    try {
      pat = repair3(pat, z0, fwd);
    } catch (const Error&) {
      try {
        pat = repair3(pat, z0, rev);
      } catch (const Error& e) {
        fail(Errc::CleanFailed, e.what());
      }
    }
  }

  Report rep = validate(pat, Level::VeryGood);
  if (!rep.all_pass()) fail(Errc::CleanFailed, rep.first_failure());
  return pat;
}

}  // namespace

Pattern clean(const Pattern& input) {
  /* The fixed schedule handles most merges and keeps the output stable, so
   * try it first. */
  std::string first_failure;
  try {
    Pattern pat = input;
    linear_repairs(pat);
    return settle(std::move(pat));
  } catch (const Error& e) {
    first_failure = e.what();
  }

  /* The fixed schedule can paint itself into a corner: parallel repairs
   * come in two versions per pair (the swapped arcs lie on one side of the
   * crossings or the other), and which version works depends on crossings
   * with third zigzags. Keep the phase order but walk the whole tree of
   * version and order choices for the parallel phase; from every state
   * where no parallel repair applies any more, try to finish with the
   * opposite deletions and the settling steps. */
  {
    std::hash<std::string> hasher;
    std::set<size_t> walked;
    long visited = 0, finishes = 0;
    std::optional<Pattern> done;
    std::function<void(const Pattern&)> walk = [&](const Pattern& cur) {
      if (done || visited > 80000 || finishes > 4000) return;
      if (!walked.insert(hasher(cur.I.str() + "#" + cur.P.str())).second) return;
      ++visited;
      IntMat q = cur.Q();
      bool any = false;
      for (int i = 0; i < cur.p() && !done; ++i)
        for (int j = i + 1; j < cur.p() && !done; ++j) {
          if (cur.zeta(i) != cur.zeta(j)) continue;
          if (intersection_rows(cur, i, j).size() != 2) continue;
          if (belongs_to_plus_pair(cur, q, i) != belongs_to_plus_pair(cur, q, j)) continue;
          for (int v = 0; v < 2 && !done; ++v) {
            try {
              Pattern nxt = v == 0 ? repair2(cur, i, j) : repair2(cur, j, i);
              any = true;
              walk(nxt);
            } catch (const Error&) {
            }
          }
        }
      if (any || done) return;
      ++finishes;
      Pattern work = cur;
      opposite_repairs(work);
      try {
        done = settle(std::move(work));
      } catch (const Error&) {
      }
    };
    walk(input);
    if (done) return *done;
  }

  /* Fall back to a search over arbitrary interleavings of the repairs,
   * explored best-first by how far the crossing counts sit from their
   * targets.
   *
   * Repairs at distinct pairs largely commute, so expanding every pair at
   * every state mostly enumerates interleavings of one solution. The first
   * pass therefore expands only one unsettled pair per state (the first one
   * that yields a new state), which keeps the per-pair choices in the tree
   * and drops the orderings. If that focused pass fails, a second pass
   * expands every pair, in case an unusual order is the only way through.
   *
   * Crossings between a zigzag that sits in an aligned opposite pair and
   * one that does not are the raw material for the chain replacement in
   * settle, so the first two passes never repair such mixed pairs. An
   * ungated last pass remains as a safety net. */
  auto excess_of = [](const Pattern& pat) {
    long total = 0;
    for (int i = 0; i < pat.p(); ++i)
      for (int j = i + 1; j < pat.p(); ++j) {
        auto zi = pat.zeta(i), zj = pat.zeta(j);
        Int want = zi[0] * zj[1] - zi[1] * zj[0];
        long got = 0;
        for (int r = 0; r < pat.points(); ++r)
          if (pat.I.at(r, i) == 1 && pat.I.at(r, j) == 1) ++got;
        Int diff = abs(got - abs(want));
        total += diff.get_si();
      }
    return total;
  };
  struct Entry {
    long excess;
    long order;
    Pattern pat;
  };
  struct Later {
    bool operator()(const Entry& a, const Entry& b) const {
      return a.excess != b.excess ? a.excess > b.excess : a.order > b.order;
    }
  };
  struct Pass {
    bool focused;
    bool gated;
  };
  for (Pass pass : {Pass{true, true}, Pass{false, true}, Pass{false, false}}) {
    std::priority_queue<Entry, std::vector<Entry>, Later> frontier;
    std::set<std::string> seen;
    long order = 0;
    bool capped = false;
    auto push = [&](Pattern pat) {
      std::string k = pat.B.str() + "#" + pat.I.str() + "#" + pat.P.str();
      if (!seen.insert(std::move(k)).second) return false;
      if (seen.size() > 25000) {
        capped = true;
        return false;
      }
      frontier.push({excess_of(pat), ++order, std::move(pat)});
      return true;
    };
    push(input);
    for (int budget = 20000; !frontier.empty() && !capped; --budget) {
      if (budget <= 0) {
        capped = true;
        break;
      }
      Pattern cur = frontier.top().pat;
      frontier.pop();
      try {
        return settle(cur);
      } catch (const Error&) {
      }
      const IntMat q = cur.Q();
      bool produced = false;
      for (int i = 0; i < cur.p() && !(pass.focused && produced); ++i)
        for (int j = 0; j < cur.p() && !(pass.focused && produced); ++j) {
          if (i == j) continue;
          auto zi = cur.zeta(i), zj = cur.zeta(j);
          bool opposite = (zi[0] == -zj[0] && zi[1] == -zj[1]);
          if (!opposite && zi != zj) continue;
          if (i > j) continue;
          if (pass.gated &&
              belongs_to_plus_pair(cur, q, i) != belongs_to_plus_pair(cur, q, j))
            continue;
          if (!opposite) {
            /* Both versions of the parallel repair belong to one decision,
             * so add them together before moving to the next pair. */
            try {
              produced |= push(repair2(cur, i, j));
            } catch (const Error&) {
            }
            try {
              produced |= push(repair2(cur, j, i));
            } catch (const Error&) {
            }
            continue;
          }
          /* Every application of the opposite repair deletes two crossings
           * with equal coordinate rows, so the candidates are exactly the
           * repeated-row groups. */
          std::map<std::string, std::vector<int>> alike;
          for (int r = 0; r < cur.points(); ++r) {
            if (!(cur.I.at(r, i) == 1 && cur.I.at(r, j) == 1)) continue;
            std::string key;
            for (int c = 0; c < cur.p(); ++c) key += cur.P.at(r, c).get_str() + ",";
            alike[key].push_back(r);
          }
          for (const auto& [key, rows] : alike)
            if (rows.size() >= 2) {
              std::vector<int> dead = {rows[0], rows[1]};
              produced |=
                  push(Pattern{cur.B, cur.I.without_rows(dead), cur.P.without_rows(dead)});
            }
        }
    }
    if (capped && !pass.focused && !pass.gated)
      fail(Errc::CleanFailed,
           "repair search exhausted its budget; last schedule error: " + first_failure);
  }
  fail(Errc::CleanFailed,
       "no sequence of repairing moves reaches a very good pattern; " + first_failure);
}

RunResult run(const IntMat& ba) {
  RunResult res;
  Pattern pat = initial_pattern(ba);
  res.trace.push_back({"step-000", pat});
  {
    Report rep = validate(pat, Level::VeryGood);
    if (!rep.all_pass()) fail(Errc::Internal, "initial pattern invalid: " + rep.first_failure());
  }

  const int limit = pat.p();
  int iter = 0;
  while (!is_terminal(ba, pat)) {
    if (iter >= limit)
      fail(Errc::IterationLimitExceeded,
           "not terminal after " + std::to_string(limit) + " iterations");
    ++iter;
    MergePlan plan = merge_plan(ba, pat);
    Pattern merged = apply_merge(pat, plan.M);
    if (merged.p() >= pat.p()) fail(Errc::Internal, "merge did not shrink the pattern");
    res.trace.push_back({step_name(iter, "-merged"), merged});
    pat = clean(merged);
    res.trace.push_back({step_name(iter, "-clean"), pat});
  }

  /* assign every final column to the relation column it realizes */
  std::map<std::array<Int, 2>, std::vector<int>> cols_by_dir;
  for (int j = 0; j < pat.p(); ++j) cols_by_dir[pat.zeta(j)].push_back(j);
  for (int k = 0; k < ba.cols(); ++k) {
    Int g = gcd(abs(ba.at(0, k)), abs(ba.at(1, k)));
    if (g == 0) fail(Errc::Internal, "zero relation column survived validation");
    std::array<Int, 2> prim = {ba.at(0, k) / g, ba.at(1, k) / g};
    auto it = cols_by_dir.find(prim);
    int d = to_int(g);
    if (it == cols_by_dir.end() || int(it->second.size()) < d)
      fail(Errc::Internal, "final pattern misses columns for a relation column");
    for (int t = 0; t < d; ++t) {
      res.prov.push_back({it->second.front(), k, g});
      it->second.erase(it->second.begin());
    }
  }
  for (auto& [dir, rest] : cols_by_dir)
    if (!rest.empty()) fail(Errc::Internal, "final pattern has unassigned columns");
  std::sort(res.prov.begin(), res.prov.end(),
            [](const ProvenanceEntry& a, const ProvenanceEntry& b) { return a.bz_col < b.bz_col; });

  res.final = pat;
  return res;
}

}  // namespace adet
