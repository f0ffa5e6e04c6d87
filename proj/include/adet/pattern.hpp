#pragma once

/* Zigzag patterns: a 2 x p direction matrix B together with an incidence
 * matrix I (one row per intersection point, exactly two ones) and a
 * coordinate matrix P over the same rows. Q = P - I is derived. The
 * validator grades a pattern at three levels:
 *
 *   basic:     rank/column sums, primitive columns, incidence shape,
 *              P/Q consistency, balanced node counts;
 *   good:      basic plus cyclic ordering of the columns and intersection
 *              counts matching the pairwise determinants;
 *   verygood:  good plus the opposite-pair ladder between each pair of
 *              mutually opposite column classes.
 */

#include <array>
#include <string>
#include <vector>

#include "adet/intmat.hpp"

namespace adet {

struct Pattern {
  IntMat B;  /* 2 x p directions */
  IntMat I;  /* r x p incidence, two ones per row */
  IntMat P;  /* r x p coordinates */

  int p() const { return B.cols(); }
  int points() const { return I.rows(); }

  IntMat Q() const;
  std::array<Int, 2> zeta(int j) const;
  /* the two columns where row e of I is 1, ascending */
  std::pair<int, int> point_cols(int e) const;
};

/* Dimension and entry checks; throws BadInput. */
Pattern make_pattern(IntMat b, IntMat i, IntMat p);

/* Rows of I incident to both columns, in row order. */
std::vector<int> intersection_rows(const Pattern& pat, int i, int j);

enum class PairType { None, Plus, Minus, Both };

/* Classifies a pair of columns with opposite directions: Plus when the Q
 * columns are negatives of each other, Minus when the P columns are,
 * Both/None accordingly. Requires zeta(j) == -zeta(k). */
PairType opposite_pair_type(const Pattern& pat, int j, int k);

/* Same, with a precomputed q = pat.Q() for callers in tight loops. */
PairType opposite_pair_type(const Pattern& pat, const IntMat& q, int j, int k);

inline bool pair_is_plus(PairType t) { return t == PairType::Plus || t == PairType::Both; }
inline bool pair_is_minus(PairType t) { return t == PairType::Minus || t == PairType::Both; }

struct HomologyClass {
  int start;  /* first column of the run */
  int size;
  std::array<Int, 2> vec;
};

/* Maximal runs of equal columns of B, leftmost run first. Requires every
 * pair of equal columns to be contiguous without wrapping around. */
std::vector<HomologyClass> homology_classes(const IntMat& b);
std::vector<HomologyClass> homology_classes(const Pattern& pat);

enum class Level { Basic, Good, VeryGood };

const char* level_name(Level l);

struct ConditionResult {
  std::string name;
  bool pass;
  std::string detail;
};

struct Report {
  std::vector<ConditionResult> conditions;
  bool all_pass() const;
  std::string first_failure() const;
};

Report validate(const Pattern& pat, Level level);

/* The opposite-pair ladder between one pair of mutually opposite classes:
 * aligned Plus pairs along both classes and, on one side or the other,
 * aligned Minus pairs between offset neighbors. */
bool band_pair_ok(const Pattern& pat, const HomologyClass& a, const HomologyClass& b);

}  // namespace adet
