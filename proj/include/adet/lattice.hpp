#pragma once

/* Exact integer linear algebra: row-style Hermite normal form, integer
 * kernels, Smith invariants, and validation of the relation matrix that
 * drives the rest of the pipeline. */

#include <vector>

#include "adet/intmat.hpp"

namespace adet {

/* Row Hermite normal form: pivots positive, entries above each pivot
 * reduced into [0, pivot), zero rows at the bottom. If u is non-null it
 * receives a unimodular matrix with (*u) * a == result. */
IntMat hnf_rows(IntMat a, IntMat* u = nullptr);

int rank_of(const IntMat& a);

/* Basis of { x : m.x = 0 } as rows, canonicalized by row Hermite form.
 * The result spans the full (saturated) kernel lattice. */
IntMat integer_kernel(const IntMat& m);

/* Nonzero diagonal entries of the Smith normal form, in divisibility
 * order. Their count equals the rank. */
std::vector<Int> smith_invariants(IntMat a);

/* Checks a 2-row relation matrix: rank 2, zero row sums, no zero column,
 * rows spanning a saturated lattice. Returns the matrix unchanged. */
IntMat validate_relation_matrix(const IntMat& b);

/* Derives the relation matrix from a point configuration given as the
 * columns of a (n-2) x n matrix: checks that the columns span the full
 * lattice and lie on an affine hyperplane, then returns the canonical
 * kernel basis as a validated 2 x n relation matrix. */
IntMat relation_matrix_from_points(const IntMat& a);

}  // namespace adet
