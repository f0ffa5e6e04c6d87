#pragma once

/* JSON forms of the core objects. Matrices are arrays of row arrays,
 * patterns are {"B", "I", "P"}, polynomials are {"terms": [{"coeff",
 * "monomial"}, ...]} with coefficients as decimal strings and terms in
 * the canonical order. The compute input accepts either a relation
 * matrix {"B": ...} or a point configuration {"A": ...}. */

#include <string>

#include "json.hpp"

#include "adet/driver.hpp"
#include "adet/intmat.hpp"
#include "adet/kasteleyn.hpp"
#include "adet/pattern.hpp"
#include "adet/poly.hpp"

namespace adet {

using Json = nlohmann::ordered_json;

Json matrix_to_json(const IntMat& m);
IntMat matrix_from_json(const Json& j, const std::string& what);

Json pattern_to_json(const Pattern& pat);
Pattern pattern_from_json(const Json& j);

Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j);

Json kasteleyn_to_json(const Kasteleyn& k);

Json provenance_to_json(const Provenance& prov);

struct ComputeInput {
  IntMat ba;
};

/* Exactly one of "B" (used as given) or "A" (columns of a point
 * configuration, converted to its relation matrix). */
ComputeInput compute_input_from_json(const Json& j);

Json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace adet
