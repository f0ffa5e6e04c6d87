#pragma once

/* Hand-checked fixtures shared across the test binaries. The two pattern
 * constructors were worked out on paper from the construction rules, cell
 * by cell, and are frozen here as independent references. */

#include <optional>
#include <utility>
#include <vector>

#include "adet/intmat.hpp"
#include "adet/pattern.hpp"

namespace adet::fixtures {

/* runs f and reports which error code it threw, if any */
template <class F>
std::optional<Errc> code_of(F&& f) {
  try {
    std::forward<F>(f)();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline IntMat incidence_from_pairs(int p, const std::vector<std::pair<int, int>>& pairs1) {
  IntMat m(int(pairs1.size()), p);
  for (size_t e = 0; e < pairs1.size(); ++e) {
    m.at(int(e), pairs1[e].first - 1) = 1;
    m.at(int(e), pairs1[e].second - 1) = 1;
  }
  return m;
}

/* one relation column per primitive direction of a regular hexagon */
inline IntMat hexagon_ba() {
  return IntMat::from({{1, 1, 0, -1, -1, 0}, {0, 1, 1, 0, -1, -1}});
}

/* same six directions, rotated so the starting pattern is not terminal */
inline IntMat hexagon_rotated_ba() {
  return IntMat::from({{1, 0, -1, -1, 0, 1}, {0, 1, 1, 0, -1, -1}});
}

/* relations of the four points 0..3 on a line */
inline IntMat cubic_ba() { return IntMat::from({{1, -2, 1, 0}, {0, 1, -2, 1}}); }

inline IntMat triangle_ba() { return IntMat::from({{1, 0, -1}, {0, 1, -1}}); }

/* five columns whose run needs a chain replacement during cleaning */
inline IntMat n5_chain_ba() {
  return IntMat::from({{1, 1, -1, -1, 0}, {1, 1, -1, 0, -1}});
}

/* five columns with a doubled direction in the terminal pattern */
inline IntMat n5_doubled_ba() {
  return IntMat::from({{1, 1, -1, -1, 0}, {1, 1, 0, 0, -2}});
}

/* the terminal pattern with six unit directions and twelve crossings */
inline Pattern hexagon_pattern() {
  IntMat b = hexagon_ba();
  IntMat i = incidence_from_pairs(
      6, {{1, 2}, {1, 5}, {2, 4}, {4, 5}, {1, 3}, {1, 6}, {3, 4}, {4, 6}, {2, 3}, {2, 6},
          {3, 5}, {5, 6}});
  std::vector<std::vector<long>> prows;
  for (int t = 0; t < 4; ++t) prows.push_back({1, 0, 0, 0, 1, 0});
  for (int t = 0; t < 4; ++t) prows.push_back({1, -1, 0, 0, 1, 1});
  for (int t = 0; t < 4; ++t) prows.push_back({1, 0, 0, -1, 1, 1});
  return Pattern{b, i, IntMat::from(prows)};
}

/* the grid pattern on two plus two axis directions, sixteen crossings */
inline Pattern block22_pattern() {
  IntMat b = IntMat::from({{1, 1, 0, 0, -1, -1, 0, 0}, {0, 0, 1, 1, 0, 0, -1, -1}});
  IntMat i = incidence_from_pairs(
      8, {{1, 3}, {1, 7}, {3, 5}, {5, 7}, {1, 4}, {1, 8}, {4, 5}, {5, 8}, {2, 3}, {2, 7},
          {3, 6}, {6, 7}, {2, 4}, {2, 8}, {4, 6}, {6, 8}});
  std::vector<std::vector<long>> prows;
  for (int t = 0; t < 4; ++t) prows.push_back({1, 0, 0, 0, 0, 0, 1, 0});
  for (int t = 0; t < 4; ++t) prows.push_back({1, 0, -1, 0, 0, 0, 1, 1});
  for (int t = 0; t < 4; ++t) prows.push_back({1, 1, 0, 0, -1, 0, 1, 0});
  for (int t = 0; t < 4; ++t) prows.push_back({1, 1, -1, 0, -1, 0, 1, 1});
  return Pattern{b, i, IntMat::from(prows)};
}

/* two opposite columns crossing once: the smallest working input for the
 * bipartite matrix machinery, below the rank the validator demands */
inline Pattern onebyone_pattern() {
  return Pattern{IntMat::from({{1, -1}, {0, 0}}), IntMat::from({{1, 1}}),
                 IntMat::from({{1, 0}})};
}

}  // namespace adet::fixtures
