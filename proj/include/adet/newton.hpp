#pragma once

/* Self-check on the exponent geometry of a determinant in the u
 * variables. The differences of the u exponent vectors span a planar
 * lattice; expressed in a basis of that lattice they form a convex
 * polygon, and some unimodular change of plane coordinates must carry its
 * edges onto the direction classes of the pattern, in cyclic order, with
 * the lattice length of each edge equal to the class size. */

#include <array>
#include <string>
#include <vector>

#include "adet/intmat.hpp"
#include "adet/poly.hpp"

namespace adet {

struct NewtonReport {
  bool pass = false;
  bool degenerate = false;  /* support too flat to define a polygon */
  std::string note;
  /* hull data in the internal plane basis, counterclockwise */
  std::vector<std::array<Int, 2>> hull_edges;  /* primitive edge directions */
  std::vector<Int> edge_lengths;               /* lattice lengths */
};

/* Never throws; a failed comparison comes back with pass == false. */
NewtonReport newton_polygon_check(const Poly& det_u, const IntMat& bz);

}  // namespace adet
