#include "adet/kasteleyn.hpp"

#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "adet/lattice.hpp"

namespace adet {

NodeSets node_sets(const Pattern& pat) {
  NodeSets ns;
  ns.A = integer_kernel(pat.B).transposed();
  IntMat pa = pat.P * ns.A;
  IntMat qa = pat.Q() * ns.A;

  auto classify = [&](const IntMat& rows, std::vector<std::vector<Int>>& labels,
                      std::vector<int>& of) {
    std::map<std::vector<Int>, int> index;
    for (int e = 0; e < rows.rows(); ++e) index.emplace(rows.row_vec(e), 0);
    for (auto& [label, idx] : index) {
      idx = int(labels.size());
      labels.push_back(label);
    }
    of.resize(rows.rows());
    for (int e = 0; e < rows.rows(); ++e) of[e] = index.at(rows.row_vec(e));
  };
  classify(pa, ns.blacks, ns.black_of);
  classify(qa, ns.whites, ns.white_of);
  return ns;
}

Kasteleyn build_K(const Pattern& pat) {
  NodeSets ns = node_sets(pat);
  if (ns.blacks.size() != ns.whites.size())
    fail(Errc::NotSquare, std::to_string(ns.blacks.size()) + " black nodes but " +
                              std::to_string(ns.whites.size()) + " white nodes");
  Kasteleyn k;
  k.p = pat.p();
  const int m = int(ns.blacks.size());
  for (int t = 0; t < m; ++t) {
    k.row_labels.push_back("b" + std::to_string(t + 1));
    k.col_labels.push_back("w" + std::to_string(t + 1));
  }
  k.K.assign(m, std::vector<Poly>(m));
  for (int e = 0; e < pat.points(); ++e) {
    auto [i, j] = pat.point_cols(e);
    Monomial mono = Monomial::from_factors(
        {{var_z(e + 1), 1}, {var_u(i + 1), 1}, {var_u(j + 1), 1}});
    k.K[ns.black_of[e]][ns.white_of[e]] += Poly::term(1, mono);
  }
  return k;
}

namespace {

Poly complement_poly(const Poly& q, int p) {
  Poly out;
  for (const auto& [mono, coeff] : q.terms()) {
    std::vector<std::pair<VarId, int>> keep;
    std::set<int> used;
    for (const auto& [v, exp] : mono.factors()) {
      if (var_family(v) == Family::U) {
        if (exp != 1)
          fail(Errc::BadInput, "complement needs squarefree u factors, got " + mono.str());
        used.insert(var_index(v));
      } else {
        keep.emplace_back(v, exp);
      }
    }
    for (int i = 1; i <= p; ++i)
      if (!used.count(i)) keep.emplace_back(var_u(i), 1);
    out += Poly::term(coeff, Monomial::from_factors(std::move(keep)));
  }
  return out;
}

}  // namespace

Kasteleyn complement_K(const Kasteleyn& k) {
  Kasteleyn c = k;
  for (auto& row : c.K)
    for (auto& entry : row) entry = complement_poly(entry, k.p);
  return c;
}

std::map<VarId, Subst> iota_map(const Pattern& pat) {
  std::map<VarId, Subst> s;
  for (int e = 0; e < pat.points(); ++e) {
    auto [i, j] = pat.point_cols(e);
    s[var_z(e + 1)] = Subst{abs(det2_cols(pat.B, i, j)), std::nullopt};
  }
  return s;
}

Poly apply_iota(const Pattern& pat, const Poly& q) { return substitute(q, iota_map(pat)); }

DimerGraph to_dimer_graph(const Pattern& pat) {
  NodeSets ns = node_sets(pat);
  DimerGraph g;
  g.black_count = int(ns.blacks.size());
  g.white_count = int(ns.whites.size());
  for (int e = 0; e < pat.points(); ++e)
    g.edges.push_back({ns.black_of[e], ns.white_of[e], e});
  return g;
}

namespace {

struct Xy {
  double x, y;
};

Xy on_circle(int k, int n, double radius) {
  const double pi = 3.14159265358979323846;
  double ang = 2.0 * pi * k / n - pi / 2.0;
  return {240.0 + radius * std::cos(ang), 240.0 + radius * std::sin(ang)};
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string render_svg(const Pattern& pat) {
  DimerGraph g = to_dimer_graph(pat);
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"480\" height=\"480\" "
         "viewBox=\"0 0 480 480\">\n";
  out << "<rect width=\"480\" height=\"480\" fill=\"#ffffff\"/>\n";
  auto black_pos = [&](int k) { return on_circle(k, g.black_count, 100.0); };
  auto white_pos = [&](int k) { return on_circle(k, g.white_count, 180.0); };
  for (const DimerEdge& e : g.edges) {
    Xy a = black_pos(e.black), b = white_pos(e.white);
    out << "<line x1=\"" << fmt(a.x) << "\" y1=\"" << fmt(a.y) << "\" x2=\"" << fmt(b.x)
        << "\" y2=\"" << fmt(b.y) << "\" stroke=\"#888888\" stroke-width=\"1\">"
        << "<title>z" << e.point + 1 << "</title></line>\n";
  }
  for (int k = 0; k < g.black_count; ++k) {
    Xy c = black_pos(k);
    out << "<circle cx=\"" << fmt(c.x) << "\" cy=\"" << fmt(c.y)
        << "\" r=\"7\" fill=\"#000000\"/>\n";
    out << "<text x=\"" << fmt(c.x + 10) << "\" y=\"" << fmt(c.y - 10)
        << "\" font-size=\"12\" font-family=\"sans-serif\">b" << k + 1 << "</text>\n";
  }
  for (int k = 0; k < g.white_count; ++k) {
    Xy c = white_pos(k);
    out << "<circle cx=\"" << fmt(c.x) << "\" cy=\"" << fmt(c.y)
        << "\" r=\"7\" fill=\"#ffffff\" stroke=\"#000000\" stroke-width=\"1.5\"/>\n";
    out << "<text x=\"" << fmt(c.x + 10) << "\" y=\"" << fmt(c.y - 10)
        << "\" font-size=\"12\" font-family=\"sans-serif\">w" << k + 1 << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

ComputeResult principal_adet(const IntMat& ba) {
  ComputeResult res;
  res.ba = validate_relation_matrix(ba);
  res.rr = run(res.ba);
  res.K = build_K(res.rr.final);
  res.Kc = complement_K(res.K);
  res.det_u = apply_iota(res.rr.final, determinant(res.Kc.K));
  res.detK_u = apply_iota(res.rr.final, determinant(res.K.K));

  std::map<VarId, Subst> s;
  for (const ProvenanceEntry& pe : res.rr.prov)
    s[var_u(pe.bz_col + 1)] = Subst{pe.multiplier, var_v(pe.ba_col + 1)};
  res.adet = sign_normalized(substitute(res.det_u, s));
  return res;
}

}  // namespace adet
