#pragma once

/* Independent reference computations for cross-checking the pipeline.
 * Nothing here reuses the elimination determinant or the substitution
 * machinery of the main code path: determinants come from a permutation
 * expansion and the degree three reference expands a resultant. */

#include <vector>

#include "adet/poly.hpp"

namespace adet {

/* Sum over all permutations with the inversion-count sign. Only meant for
 * small matrices; throws TooLarge above 6 x 6. */
Poly permutation_determinant(const std::vector<std::vector<Poly>>& m);

/* Resultant of f and g, given as ascending coefficient lists, via the
 * classic (deg f + deg g) square matrix of shifted coefficient rows. Both
 * formal degrees must be at least one. */
Poly sylvester_resultant(const std::vector<Poly>& f, const std::vector<Poly>& g);

/* Reference value for the one-dimensional configuration of the given
 * degree: for degree three, the normalized product of the constant-term
 * variable with the resultant of v1 + v2 x + v3 x^2 + v4 x^3 and its
 * derivative. Other degrees are not supported. */
Poly univariate_adet_oracle(int degree);

}  // namespace adet
