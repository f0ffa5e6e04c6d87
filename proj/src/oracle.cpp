#include "adet/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace adet {

Poly permutation_determinant(const std::vector<std::vector<Poly>>& m) {
  const int n = int(m.size());
  for (const auto& row : m)
    if (int(row.size()) != n) fail(Errc::NonSquare, "matrix rows differ in length");
  if (n > 6) fail(Errc::TooLarge, "permutation expansion capped at 6 x 6");
  if (n == 0) return Poly(1);

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Poly det;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Poly term(1);
    for (int i = 0; i < n; ++i) term = term * m[i][perm[i]];
    if (inversions % 2)
      det -= term;
    else
      det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

Poly sylvester_resultant(const std::vector<Poly>& f, const std::vector<Poly>& g) {
  const int m = int(f.size()) - 1;
  const int n = int(g.size()) - 1;
  if (m < 1 || n < 1) fail(Errc::DegreeZero, "resultant needs two polynomials of degree >= 1");
  const int size = m + n;
  std::vector<std::vector<Poly>> s(size, std::vector<Poly>(size));
  for (int i = 0; i < n; ++i)
    for (int t = 0; t <= m; ++t) s[i][i + t] = f[m - t];
  for (int i = 0; i < m; ++i)
    for (int t = 0; t <= n; ++t) s[n + i][i + t] = g[n - t];
  return permutation_determinant(s);
}

Poly univariate_adet_oracle(int degree) {
  if (degree != 3)
    fail(Errc::UnsupportedDegree, "only the degree three reference is implemented");
  std::vector<Poly> f = {Poly::variable(var_v(1)), Poly::variable(var_v(2)),
                         Poly::variable(var_v(3)), Poly::variable(var_v(4))};
  std::vector<Poly> fp = {Poly::variable(var_v(2)), Poly(2) * Poly::variable(var_v(3)),
                          Poly(3) * Poly::variable(var_v(4))};
  Poly r = Poly::variable(var_v(1)) * sylvester_resultant(f, fp);
  const auto* lt = r.leading();
  if (lt && lt->second < 0) r = -r;
  return r;
}

}  // namespace adet
