#pragma once

/* The weighted bipartite matrix of a zigzag pattern. Crossing points fall
 * into black and white node sets according to their P and Q rows read in
 * kernel coordinates of the direction matrix; the matrix entry for a
 * black and a white node sums z_e * u_i * u_j over the crossings e they
 * share, where i and j are the two zigzags meeting at e. The principal
 * determinant comes from the complement matrix: resolve the z variables
 * into crossing multiplicities, take the determinant, and rewrite the u
 * variables as multiples of the v variable of the relation column each
 * final zigzag came from. */

#include <map>
#include <string>
#include <vector>

#include "adet/driver.hpp"
#include "adet/pattern.hpp"
#include "adet/poly.hpp"

namespace adet {

struct NodeSets {
  IntMat A;  /* p x k matrix whose columns span the kernel of B */
  /* distinct rows of P*A and Q*A, each list in ascending lex order */
  std::vector<std::vector<Int>> blacks;
  std::vector<std::vector<Int>> whites;
  /* crossing point e sits between blacks[black_of[e]] and whites[white_of[e]] */
  std::vector<int> black_of;
  std::vector<int> white_of;
};

NodeSets node_sets(const Pattern& pat);

struct Kasteleyn {
  int p = 0;  /* number of u variables, one per pattern column */
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  std::vector<std::vector<Poly>> K;
};

/* Throws NotSquare when the node sets differ in size. */
Kasteleyn build_K(const Pattern& pat);

/* Rewrites every term z * u_i * u_j as z times the product of all the
 * other u variables. Applying it twice gives back the original matrix. */
Kasteleyn complement_K(const Kasteleyn& k);

/* z_e resolves to the absolute determinant of the two directions that
 * cross at point e. The value does not depend on the kernel basis. */
std::map<VarId, Subst> iota_map(const Pattern& pat);
Poly apply_iota(const Pattern& pat, const Poly& q);

struct DimerEdge {
  int black;
  int white;
  int point;  /* row of I, also the z index minus one */
};

struct DimerGraph {
  int black_count = 0;
  int white_count = 0;
  std::vector<DimerEdge> edges;  /* one per crossing point, in row order */
};

DimerGraph to_dimer_graph(const Pattern& pat);

/* Black nodes filled on an inner circle, white nodes hollow on an outer
 * circle, one line per crossing point. */
std::string render_svg(const Pattern& pat);

struct ComputeResult {
  IntMat ba;
  RunResult rr;
  Kasteleyn K;
  Kasteleyn Kc;
  Poly det_u;   /* determinant of the complement matrix, z resolved */
  Poly detK_u;  /* determinant of the matrix itself, z resolved */
  Poly adet;    /* principal determinant in the v variables, normalized */
};

/* The full pipeline: validate, iterate to a terminal pattern, build the
 * matrix, take the complement determinant, resolve z, substitute each u
 * by its relation column times multiplicity, normalize the sign. */
ComputeResult principal_adet(const IntMat& ba);

}  // namespace adet
