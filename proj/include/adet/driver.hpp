#pragma once

/* The main iteration: starting from a validated 2 x n relation matrix,
 * build the initial zigzag pattern, then alternate a global merging step
 * (computed from a merge plan) with a cleaning step (local repairs plus a
 * possible reordering inside classes) until every relation column is a
 * positive multiple of some pattern column. */

#include <string>
#include <utility>
#include <vector>

#include "adet/pattern.hpp"

namespace adet {

/* Pattern of alternating axis directions whose crossings form a grid:
 * n1 columns (1,0) and n2 columns (0,1) with their opposites, one crossing
 * quadruple per grid cell. n1 and n2 are the positive entry sums of the
 * two rows of the relation matrix. */
Pattern initial_pattern(const IntMat& ba);

/* True when every relation column is a positive integer multiple of some
 * pattern direction. */
bool is_terminal(const IntMat& ba, const Pattern& pat);

struct MergePlan {
  IntMat S;                 /* n x p pairwise determinants with the directions */
  IntMat R;                 /* n x p merge demands */
  std::vector<Int> rho;     /* per-column demand, column sums of R */
  std::vector<Int> lambda;  /* rho shifted one step */
  Int q;                    /* number of merges this round */
  std::vector<int> sigma;   /* 0-based: shuffled position of each column */
  std::vector<int> phi;     /* 0-based: target column after merging */
  IntMat M;                 /* p x (p-q) merging matrix */
};

MergePlan merge_plan(const IntMat& ba, const Pattern& pat);

/* Applies the merging matrix: multiplies B, I, P by M on the right and
 * deletes the rows whose incidence collapsed onto a single column. */
Pattern apply_merge(const Pattern& pat, const IntMat& m);

/* Restores the very good property after a merge: parallel repairs, then
 * opposite repairs, then a reordering inside classes where the ladder
 * broke, then chain replacements for class pairs of unequal size. */
Pattern clean(const Pattern& pat);

struct ProvenanceEntry {
  int bz_col;      /* 0-based column of the final pattern */
  int ba_col;      /* 0-based column of the relation matrix it came from */
  Int multiplier;  /* relation column = multiplier * pattern column */
};
using Provenance = std::vector<ProvenanceEntry>;

struct TraceStep {
  std::string name;
  Pattern pat;
};

struct RunResult {
  Pattern final;
  Provenance prov;
  std::vector<TraceStep> trace;
};

RunResult run(const IntMat& ba);

}  // namespace adet
