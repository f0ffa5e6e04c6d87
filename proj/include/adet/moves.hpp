#pragma once

/* The local surgery moves on zigzag patterns. Columns are 0-based. Every
 * move returns a new pattern and leaves its argument untouched.
 *
 *  - merge(i, j): adds column j onto column i in B, I and P, deletes
 *    column j and the single row where the two columns cross.
 *  - repair1(i, j): for opposite directions crossing at least twice,
 *    deletes two crossing rows that agree entry for entry, which is the
 *    shape of two crossings bounding a common cell.
 *  - repair2(i, j): for equal directions crossing exactly twice, shifts
 *    the coordinate profile between the two columns, swaps the incidence
 *    entries on the boundary rows of the shifted region, then deletes the
 *    two crossing rows.
 *  - repair3(z0, seq): replaces the zigzags listed in seq (alternating
 *    between the two opposite classes of z0) by parallel translates of
 *    z0, deleting every crossing on them and expanding each remaining
 *    crossing of z0 into a chain of 1 + |seq| crossings. */

#include <vector>

#include "adet/pattern.hpp"

namespace adet {

Pattern merge(const Pattern& pat, int i, int j);
Pattern repair1(const Pattern& pat, int i, int j);
Pattern repair2(const Pattern& pat, int i, int j);
Pattern repair3(const Pattern& pat, int z0, std::vector<int> seq);

}  // namespace adet
