#include "adet/newton.hpp"

#include <algorithm>

#include "adet/lattice.hpp"
#include "adet/pattern.hpp"

namespace adet {

namespace {

struct Pt {
  Int x, y;
  friend bool operator==(const Pt& a, const Pt& b) = default;
};

bool pt_less(const Pt& a, const Pt& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }

Int cross(const Pt& o, const Pt& a, const Pt& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

/* counterclockwise convex hull, collinear points dropped */
std::vector<Pt> convex_hull(std::vector<Pt> pts) {
  std::sort(pts.begin(), pts.end(), pt_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const int n = int(pts.size());
  if (n <= 2) return pts;
  std::vector<Pt> hull(2 * n + 1);
  int k = 0;
  for (int i = 0; i < n; ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (int i = n - 2, lower = k + 1; i >= 0; --i) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

bool divides(const Int& den, const Int& num) {
  return mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) != 0;
}

}  // namespace

NewtonReport newton_polygon_check(const Poly& det_u, const IntMat& bz) {
  NewtonReport rep;
  const int p = bz.cols();

  if (det_u.is_zero()) {
    rep.note = "the determinant is zero";
    return rep;
  }

  std::vector<std::vector<Int>> exps;
  for (const auto& [mono, coeff] : det_u.terms()) {
    std::vector<Int> e(p, 0);
    for (const auto& [v, k] : mono.factors()) {
      if (var_family(v) != Family::U || var_index(v) < 1 || var_index(v) > p) {
        rep.note = "term " + mono.str() + " is not a monomial in u1..u" + std::to_string(p);
        return rep;
      }
      e[var_index(v) - 1] = k;
    }
    exps.push_back(std::move(e));
  }

  const int nterms = int(exps.size());
  IntMat diffs(nterms, p);
  for (int t = 0; t < nterms; ++t)
    for (int j = 0; j < p; ++j) diffs.at(t, j) = exps[t][j] - exps[0][j];
  IntMat h = hnf_rows(diffs);
  int rank = 0;
  for (int i = 0; i < h.rows(); ++i) {
    bool zero = true;
    for (int j = 0; j < p && zero; ++j) zero = (h.at(i, j) == 0);
    if (!zero) ++rank;
  }
  if (rank < 2) {
    rep.pass = true;
    rep.degenerate = true;
    rep.note = "exponent differences span rank " + std::to_string(rank) +
               ", too flat for a polygon; nothing to compare";
    return rep;
  }
  if (rank > 2) {
    rep.note = "exponent differences span rank " + std::to_string(rank) + ", expected 2";
    return rep;
  }

  int c1 = -1, c2 = -1;
  for (int j = 0; j < p && c1 < 0; ++j)
    if (h.at(0, j) != 0) c1 = j;
  for (int j = 0; j < p && c2 < 0; ++j)
    if (h.at(1, j) != 0) c2 = j;

  std::vector<Pt> pts;
  for (int t = 0; t < nterms; ++t) {
    if (!divides(h.at(0, c1), diffs.at(t, c1))) {
      rep.note = "exponent difference outside the planar lattice";
      return rep;
    }
    Int x = diffs.at(t, c1) / h.at(0, c1);
    Int rest = diffs.at(t, c2) - x * h.at(0, c2);
    if (!divides(h.at(1, c2), rest)) {
      rep.note = "exponent difference outside the planar lattice";
      return rep;
    }
    Int y = rest / h.at(1, c2);
    for (int j = 0; j < p; ++j)
      if (diffs.at(t, j) != x * h.at(0, j) + y * h.at(1, j)) {
        rep.note = "exponent difference outside the planar lattice";
        return rep;
      }
    pts.push_back({x, y});
  }

  std::vector<Pt> hull = convex_hull(std::move(pts));
  const int m = int(hull.size());
  if (m < 3) {
    rep.note = "support hull is not two-dimensional";
    return rep;
  }
  for (int t = 0; t < m; ++t) {
    const Pt& a = hull[t];
    const Pt& b = hull[(t + 1) % m];
    Int ex = b.x - a.x, ey = b.y - a.y;
    Int g = gcd(abs(ex), abs(ey));
    rep.hull_edges.push_back({ex / g, ey / g});
    rep.edge_lengths.push_back(g);
  }

  std::vector<HomologyClass> classes;
  try {
    classes = homology_classes(bz);
  } catch (const Error& e) {
    rep.note = e.what();
    return rep;
  }
  if (int(classes.size()) != m) {
    rep.note = "hull has " + std::to_string(m) + " edges but the pattern has " +
               std::to_string(classes.size()) + " direction classes";
    return rep;
  }

  for (int flip = 0; flip < 2; ++flip) {
    std::vector<std::array<Int, 2>> dirs(m);
    std::vector<Int> lens(m);
    for (int t = 0; t < m; ++t) {
      if (flip) {
        dirs[t] = {-rep.hull_edges[m - 1 - t][0], -rep.hull_edges[m - 1 - t][1]};
        lens[t] = rep.edge_lengths[m - 1 - t];
      } else {
        dirs[t] = rep.hull_edges[t];
        lens[t] = rep.edge_lengths[t];
      }
    }
    Int det = dirs[0][0] * dirs[1][1] - dirs[1][0] * dirs[0][1];
    if (det == 0) continue;
    for (int r = 0; r < m; ++r) {
      auto w0 = classes[r % m].vec;
      auto w1 = classes[(r + 1) % m].vec;
      /* unimodular U with U * dirs[0] = w0 and U * dirs[1] = w1 */
      Int n00 = w0[0] * dirs[1][1] - w1[0] * dirs[0][1];
      Int n01 = w1[0] * dirs[0][0] - w0[0] * dirs[1][0];
      Int n10 = w0[1] * dirs[1][1] - w1[1] * dirs[0][1];
      Int n11 = w1[1] * dirs[0][0] - w0[1] * dirs[1][0];
      if (!divides(det, n00) || !divides(det, n01) || !divides(det, n10) || !divides(det, n11))
        continue;
      Int u00 = n00 / det, u01 = n01 / det, u10 = n10 / det, u11 = n11 / det;
      Int udet = u00 * u11 - u01 * u10;
      if (udet != 1 && udet != -1) continue;
      bool ok = true;
      for (int t = 0; t < m && ok; ++t) {
        auto want = classes[(t + r) % m];
        ok = (u00 * dirs[t][0] + u01 * dirs[t][1] == want.vec[0]) &&
             (u10 * dirs[t][0] + u11 * dirs[t][1] == want.vec[1]) && (lens[t] == want.size);
      }
      if (ok) {
        rep.pass = true;
        rep.note = std::string("hull matches the direction classes") +
                   (flip ? " after a reflection" : "");
        return rep;
      }
    }
  }
  rep.note = "no unimodular change of plane coordinates carries the hull onto the direction classes";
  return rep;
}

}  // namespace adet
