#include "adet/jsonio.hpp"

#include <fstream>
#include <sstream>

#include "adet/lattice.hpp"

namespace adet {

namespace {

Json int_to_json(const Int& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Int int_from_json(const Json& j, const std::string& what) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      fail(Errc::BadInput, what + ": \"" + j.get<std::string>() + "\" is not an integer");
    }
  }
  fail(Errc::BadInput, what + ": expected an integer, got " + j.dump());
}

}  // namespace

Json matrix_to_json(const IntMat& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMat matrix_from_json(const Json& j, const std::string& what) {
  if (!j.is_array() || j.empty())
    fail(Errc::BadInput, what + " must be a non-empty array of rows");
  const int rows = int(j.size());
  if (!j[0].is_array() || j[0].empty())
    fail(Errc::BadInput, what + " rows must be non-empty arrays");
  const int cols = int(j[0].size());
  IntMat m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (!j[i].is_array() || int(j[i].size()) != cols)
      fail(Errc::BadInput, what + " row " + std::to_string(i + 1) + " has the wrong length");
    for (int c = 0; c < cols; ++c)
      m.at(i, c) = int_from_json(j[i][c], what + " entry (" + std::to_string(i + 1) + "," +
                                              std::to_string(c + 1) + ")");
  }
  return m;
}

Json pattern_to_json(const Pattern& pat) {
  return Json{{"B", matrix_to_json(pat.B)}, {"I", matrix_to_json(pat.I)},
              {"P", matrix_to_json(pat.P)}};
}

Pattern pattern_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("B") || !j.contains("I") || !j.contains("P"))
    fail(Errc::BadInput, "a pattern needs the keys \"B\", \"I\" and \"P\"");
  return make_pattern(matrix_from_json(j["B"], "B"), matrix_from_json(j["I"], "I"),
                      matrix_from_json(j["P"], "P"));
}

Json poly_to_json(const Poly& p) {
  Json terms = Json::array();
  for (const auto& [mono, coeff] : p.terms()) {
    Json jm = Json::object();
    for (const auto& [v, e] : mono.factors()) jm[var_name(v)] = e;
    terms.push_back(Json{{"coeff", coeff.get_str()}, {"monomial", std::move(jm)}});
  }
  return Json{{"terms", std::move(terms)}};
}

Poly poly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    fail(Errc::BadInput, "a polynomial needs a \"terms\" array");
  Poly p;
  for (const Json& t : j["terms"]) {
    if (!t.is_object() || !t.contains("coeff") || !t.contains("monomial") ||
        !t["monomial"].is_object())
      fail(Errc::BadInput, "each term needs \"coeff\" and a \"monomial\" object");
    Int coeff = int_from_json(t["coeff"], "coeff");
    std::vector<std::pair<VarId, int>> factors;
    for (const auto& [name, exp] : t["monomial"].items()) {
      auto v = parse_var_name(name);
      if (!v) fail(Errc::BadInput, "unknown variable \"" + name + "\"");
      if (!exp.is_number_integer() || exp.get<long long>() <= 0)
        fail(Errc::BadInput, "exponent of " + name + " must be a positive integer");
      factors.emplace_back(*v, int(exp.get<long long>()));
    }
    p += Poly::term(std::move(coeff), Monomial::from_factors(std::move(factors)));
  }
  return p;
}

Json kasteleyn_to_json(const Kasteleyn& k) {
  Json rows = Json::array();
  for (const auto& row : k.K) {
    Json jr = Json::array();
    for (const Poly& entry : row) jr.push_back(poly_to_json(entry));
    rows.push_back(std::move(jr));
  }
  return Json{{"p", k.p},
              {"row_labels", k.row_labels},
              {"col_labels", k.col_labels},
              {"K", std::move(rows)}};
}

Json provenance_to_json(const Provenance& prov) {
  Json out = Json::array();
  for (const ProvenanceEntry& e : prov)
    out.push_back(Json{{"u", e.bz_col + 1},
                       {"relation_column", e.ba_col + 1},
                       {"multiplier", int_to_json(e.multiplier)}});
  return out;
}

ComputeInput compute_input_from_json(const Json& j) {
  if (!j.is_object()) fail(Errc::BadInput, "the input must be a JSON object");
  const bool has_b = j.contains("B"), has_a = j.contains("A");
  if (has_b == has_a) fail(Errc::BadInput, "give exactly one of \"B\" and \"A\"");
  if (has_b) return ComputeInput{matrix_from_json(j["B"], "B")};
  return ComputeInput{relation_matrix_from_points(matrix_from_json(j["A"], "A"))};
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::BadInput, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    fail(Errc::BadInput, "cannot parse " + path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) fail(Errc::BadInput, "cannot open " + path + " for writing");
  out << content;
  if (!out) fail(Errc::BadInput, "cannot write " + path);
}

}  // namespace adet
