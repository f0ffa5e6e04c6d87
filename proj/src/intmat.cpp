#include "adet/intmat.hpp"

#include <algorithm>
#include <sstream>

namespace adet {

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::from(const std::vector<std::vector<long>>& rows) {
  int r = int(rows.size());
  int c = r == 0 ? 0 : int(rows[0].size());
  IntMat m(r, c);
  for (int i = 0; i < r; ++i) {
    if (int(rows[i].size()) != c) fail(Errc::BadInput, "ragged matrix literal");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntMat IntMat::transposed() const {
  IntMat t(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
  return t;
}

void IntMat::swap_rows(int i, int j) {
  if (i == j) return;
  for (int k = 0; k < c_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMat::negate_row(int i) {
  for (int k = 0; k < c_; ++k) at(i, k) = -at(i, k);
}

void IntMat::addmul_row(int i, int j, const Int& c) {
  for (int k = 0; k < c_; ++k) at(i, k) += c * at(j, k);
}

void IntMat::swap_cols(int i, int j) {
  if (i == j) return;
  for (int k = 0; k < r_; ++k) std::swap(at(k, i), at(k, j));
}

void IntMat::add_col(int i, int j) {
  for (int k = 0; k < r_; ++k) at(k, i) += at(k, j);
}

IntMat IntMat::without_col(int j) const {
  IntMat m(r_, c_ - 1);
  for (int i = 0; i < r_; ++i) {
    int t = 0;
    for (int k = 0; k < c_; ++k) {
      if (k == j) continue;
      m.at(i, t++) = at(i, k);
    }
  }
  return m;
}

IntMat IntMat::without_rows(const std::vector<int>& sorted_rows) const {
  IntMat m(r_ - int(sorted_rows.size()), c_);
  int t = 0;
  size_t s = 0;
  for (int i = 0; i < r_; ++i) {
    if (s < sorted_rows.size() && sorted_rows[s] == i) {
      ++s;
      continue;
    }
    for (int k = 0; k < c_; ++k) m.at(t, k) = at(i, k);
    ++t;
  }
  return m;
}

IntMat IntMat::with_cols_permuted(const std::vector<int>& new_from_old) const {
  /* new_from_old[t] = old column index placed at position t */
  IntMat m(r_, c_);
  for (int t = 0; t < c_; ++t)
    for (int i = 0; i < r_; ++i) m.at(i, t) = at(i, new_from_old[t]);
  return m;
}

std::vector<Int> IntMat::row_vec(int i) const {
  std::vector<Int> v(c_);
  for (int k = 0; k < c_; ++k) v[k] = at(i, k);
  return v;
}

std::vector<Int> IntMat::col_vec(int j) const {
  std::vector<Int> v(r_);
  for (int k = 0; k < r_; ++k) v[k] = at(k, j);
  return v;
}

bool IntMat::is_zero_col(int j) const {
  for (int k = 0; k < r_; ++k)
    if (at(k, j) != 0) return false;
  return true;
}

IntMat operator*(const IntMat& a, const IntMat& b) {
  if (a.cols() != b.rows()) fail(Errc::Internal, "matrix product shape mismatch");
  IntMat m(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) m.at(i, j) += aik * b.at(k, j);
    }
  return m;
}

std::string IntMat::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < r_; ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < c_; ++j) os << (j ? "," : "") << at(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

Int det2(const Int& v1, const Int& v2, const Int& w1, const Int& w2) {
  return v1 * w2 - v2 * w1;
}

Int det2_cols(const IntMat& m, int j, int k) {
  if (m.rows() != 2) fail(Errc::Internal, "det2_cols expects a 2-row matrix");
  return det2(m.at(0, j), m.at(1, j), m.at(0, k), m.at(1, k));
}

}  // namespace adet
