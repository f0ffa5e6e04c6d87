#pragma once

/* Dense matrices of arbitrary-precision integers, sized for desk-scale
 * lattice work. The whole pipeline deals with matrices of at most a few
 * hundred entries, so the representation favors clarity over tuning. */

#include <gmpxx.h>

#include <string>
#include <vector>

#include "adet/error.hpp"

namespace adet {

using Int = mpz_class;

class IntMat {
 public:
  IntMat() = default;
  IntMat(int rows, int cols) : r_(rows), c_(cols), e_(size_t(rows) * size_t(cols)) {}

  static IntMat identity(int n);
  /* Convenience for literals in tests and fixtures. */
  static IntMat from(const std::vector<std::vector<long>>& rows);

  int rows() const { return r_; }
  int cols() const { return c_; }

  Int& at(int i, int j) { return e_[size_t(i) * c_ + j]; }
  const Int& at(int i, int j) const { return e_[size_t(i) * c_ + j]; }

  IntMat transposed() const;

  void swap_rows(int i, int j);
  void negate_row(int i);
  /* row i += c * row j */
  void addmul_row(int i, int j, const Int& c);
  void swap_cols(int i, int j);
  /* col i += col j */
  void add_col(int i, int j);

  IntMat without_col(int j) const;
  IntMat without_rows(const std::vector<int>& sorted_rows) const;
  IntMat with_cols_permuted(const std::vector<int>& new_from_old) const;

  std::vector<Int> row_vec(int i) const;
  std::vector<Int> col_vec(int j) const;

  bool is_zero_col(int j) const;

  friend IntMat operator*(const IntMat& a, const IntMat& b);
  friend bool operator==(const IntMat& a, const IntMat& b) = default;

  std::string str() const;

 private:
  int r_ = 0;
  int c_ = 0;
  std::vector<Int> e_;
};

/* Oriented area of the pair of plane vectors (v1,v2), (w1,w2). */
Int det2(const Int& v1, const Int& v2, const Int& w1, const Int& w2);

/* det2 of columns j and k of a matrix with two rows. */
Int det2_cols(const IntMat& m, int j, int k);

}  // namespace adet
