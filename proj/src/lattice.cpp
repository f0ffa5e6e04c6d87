#include "adet/lattice.hpp"

#include <algorithm>
#include <cstdlib>

namespace adet {

namespace {

/* floor-division quotient, matching the reduction used for Hermite form */
Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

IntMat hnf_rows(IntMat a, IntMat* u) {
  const int m = a.rows();
  const int n = a.cols();
  IntMat ut = IntMat::identity(m);
  auto apply = [&](auto&& op) {
    op(a);
    op(ut);
  };

  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    /* clear column c below row r with gcd steps */
    for (;;) {
      int best = -1;
      for (int i = r; i < m; ++i) {
        if (a.at(i, c) == 0) continue;
        if (best < 0 || cmp(abs(a.at(i, c)), abs(a.at(best, c))) < 0) best = i;
      }
      if (best < 0) break;
      if (best != r) apply([&](IntMat& t) { t.swap_rows(r, best); });
      bool more = false;
      for (int i = r + 1; i < m; ++i) {
        if (a.at(i, c) == 0) continue;
        Int q = fdiv(a.at(i, c), a.at(r, c));
        apply([&](IntMat& t) { t.addmul_row(i, r, -q); });
        if (a.at(i, c) != 0) more = true;
      }
      if (!more) break;
    }
    if (a.at(r, c) == 0) continue;
    if (a.at(r, c) < 0) apply([&](IntMat& t) { t.negate_row(r); });
    for (int i = 0; i < r; ++i) {
      Int q = fdiv(a.at(i, c), a.at(r, c));
      if (q != 0) apply([&](IntMat& t) { t.addmul_row(i, r, -q); });
    }
    ++r;
  }
  if (u) *u = ut;
  return a;
}

int rank_of(const IntMat& a) {
  IntMat h = hnf_rows(a);
  int r = 0;
  for (int i = 0; i < h.rows(); ++i) {
    bool zero = true;
    for (int j = 0; j < h.cols(); ++j)
      if (h.at(i, j) != 0) {
        zero = false;
        break;
      }
    if (!zero) ++r;
  }
  return r;
}

IntMat integer_kernel(const IntMat& m) {
  const int n = m.cols();
  IntMat u;
  IntMat h = hnf_rows(m.transposed(), &u);
  /* rows of u whose image under m^T vanished form a kernel basis */
  int rank = 0;
  for (int i = 0; i < h.rows(); ++i) {
    bool zero = true;
    for (int j = 0; j < h.cols(); ++j)
      if (h.at(i, j) != 0) {
        zero = false;
        break;
      }
    if (!zero) ++rank;
  }
  IntMat k(n - rank, n);
  for (int i = rank; i < n; ++i)
    for (int j = 0; j < n; ++j) k.at(i - rank, j) = u.at(i, j);
  return hnf_rows(k);
}

std::vector<Int> smith_invariants(IntMat a) {
  const int m = a.rows();
  const int n = a.cols();
  std::vector<Int> inv;
  int t = 0;
  while (t < m && t < n) {
    /* locate a nonzero entry of smallest magnitude in the trailing block */
    int pi = -1, pj = -1;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j) {
        if (a.at(i, j) == 0) continue;
        if (pi < 0 || cmp(abs(a.at(i, j)), abs(a.at(pi, pj))) < 0) {
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    a.swap_rows(t, pi);
    a.swap_cols(t, pj);

    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (int i = t + 1; i < m; ++i) {
        if (a.at(i, t) == 0) continue;
        Int q = fdiv(a.at(i, t), a.at(t, t));
        a.addmul_row(i, t, -q);
        if (a.at(i, t) != 0) {
          a.swap_rows(t, i);
          dirty = true;
        }
      }
      for (int j = t + 1; j < n; ++j) {
        if (a.at(t, j) == 0) continue;
        Int q = fdiv(a.at(t, j), a.at(t, t));
        for (int k = 0; k < m; ++k) a.at(k, j) -= q * a.at(k, t);
        if (a.at(t, j) != 0) {
          a.swap_cols(t, j);
          dirty = true;
        }
      }
    }
    /* enforce divisibility of the remaining block by the pivot */
    bool redo = false;
    for (int i = t + 1; i < m && !redo; ++i)
      for (int j = t + 1; j < n && !redo; ++j)
        if (a.at(i, j) % a.at(t, t) != 0) {
          a.addmul_row(t, i, 1);
          redo = true;
        }
    if (redo) continue;
    inv.push_back(abs(a.at(t, t)));
    ++t;
  }
  return inv;
}

IntMat validate_relation_matrix(const IntMat& b) {
  if (b.rows() != 2) fail(Errc::BadInput, "relation matrix must have exactly 2 rows");
  if (b.cols() < 3) fail(Errc::BadInput, "relation matrix must have at least 3 columns");
  for (int j = 0; j < b.cols(); ++j)
    if (b.is_zero_col(j))
      fail(Errc::ZeroColumn, "column " + std::to_string(j + 1) + " of the relation matrix is zero");
  if (rank_of(b) != 2) fail(Errc::WrongRank, "relation matrix must have rank 2");
  for (int i = 0; i < 2; ++i) {
    Int s = 0;
    for (int j = 0; j < b.cols(); ++j) s += b.at(i, j);
    if (s != 0)
      fail(Errc::NotOnAffineHyperplane,
           "row " + std::to_string(i + 1) + " of the relation matrix sums to " + s.get_str() +
               ", expected 0");
  }
  std::vector<Int> inv = smith_invariants(b);
  if (inv.size() != 2 || inv[0] != 1 || inv[1] != 1)
    fail(Errc::NotSaturated, "relation rows do not span a saturated rank-2 lattice");
  return b;
}

IntMat relation_matrix_from_points(const IntMat& a) {
  const int d = a.rows();
  const int n = a.cols();
  if (d < 1 || n != d + 2)
    fail(Errc::WrongRank, "point matrix must have 2 fewer rows than columns");
  std::vector<Int> inv = smith_invariants(a);
  bool spanning = int(inv.size()) == d;
  for (const Int& v : inv)
    if (v != 1) spanning = false;
  if (!spanning) fail(Errc::NotSpanning, "point columns do not span the full integer lattice");

  /* affine hyperplane test: some rational w satisfies w.a_j = 1 for all j.
   * Gaussian elimination on the n x d system (a^T) w = 1. */
  std::vector<std::vector<mpq_class>> t(n, std::vector<mpq_class>(d + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < d; ++j) t[i][j] = mpq_class(a.at(j, i));
    t[i][d] = 1;
  }
  int row = 0;
  for (int col = 0; col < d && row < n; ++col) {
    int piv = -1;
    for (int i = row; i < n; ++i)
      if (t[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(t[row], t[piv]);
    for (int i = 0; i < n; ++i) {
      if (i == row || t[i][col] == 0) continue;
      mpq_class f = t[i][col] / t[row][col];
      for (int j = col; j <= d; ++j) t[i][j] -= f * t[row][j];
    }
    ++row;
  }
  for (int i = 0; i < n; ++i) {
    bool allzero = true;
    for (int j = 0; j < d; ++j)
      if (t[i][j] != 0) allzero = false;
    if (allzero && t[i][d] != 0)
      fail(Errc::NotOnAffineHyperplane, "points do not lie on a common affine hyperplane");
  }

  IntMat k = integer_kernel(a);
  if (k.rows() != 2) fail(Errc::WrongRank, "relation lattice of the points does not have rank 2");
  return validate_relation_matrix(k);
}

}  // namespace adet
