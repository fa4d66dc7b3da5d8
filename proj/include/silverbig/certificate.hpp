#ifndef SILVERBIG_CERTIFICATE_HPP
#define SILVERBIG_CERTIFICATE_HPP

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include "common.hpp"
#include "graph.hpp"

namespace silverbig {

// Three rainbow-constrained vertices with no common neighbour whose pairwise
// common neighbourhoods together hold more vertices than there are colors.
// Any two vertices of the union lie in one closed neighbourhood N[b_i], so
// they need pairwise distinct colors: no silver coloring can exist.
struct TripleCertificate {
  int b1 = -1, b2 = -1, b3 = -1;
  // N(b1)&N(b2), N(b2)&N(b3), N(b1)&N(b3)
  std::array<std::vector<int>, 3> pairwise_common;
  int total = 0;
  int num_colors = 0;

  bool operator==(const TripleCertificate &) const = default;
};

// The certificate for (b1, b2, b3), if that triple qualifies.
inline std::optional<TripleCertificate> check_triple(const Graph &g, int b1, int b2, int b3) {
  auto deg = g.regular_degree();
  if (!deg)
    throw ParameterError("triple certificates need a regular graph");
  for (int b : {b1, b2, b3})
    if (b < 0 || b >= g.order())
      throw ParameterError("vertex " + std::to_string(b) + " out of range");
  if (b1 == b2 || b2 == b3 || b1 == b3)
    return std::nullopt;
  Bitset all = g.row(b1);
  all &= g.row(b2);
  all &= g.row(b3);
  if (all.any())
    return std::nullopt;
  TripleCertificate c{b1, b2, b3, {}, 0, *deg + 1};
  const std::array<std::pair<int, int>, 3> pairs{{{b1, b2}, {b2, b3}, {b1, b3}}};
  for (int i = 0; i < 3; ++i) {
    Bitset common = g.row(pairs[i].first);
    common &= g.row(pairs[i].second);
    c.pairwise_common[i] = common.to_vector();
    c.total += static_cast<int>(c.pairwise_common[i].size());
  }
  if (c.total <= c.num_colors)
    return std::nullopt;
  return c;
}

// First qualifying triple b1 < b2 < b3 drawn from the independent set.
inline std::optional<TripleCertificate> find_triple_certificate(const Graph &g,
                                                                std::vector<int> independent) {
  if (!g.regular_degree())
    throw ParameterError("triple certificates need a regular graph");
  if (!g.is_independent(independent))
    throw ParameterError("certificate search needs an independent set");
  std::sort(independent.begin(), independent.end());
  const std::size_t m = independent.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t l = j + 1; l < m; ++l)
        if (auto c = check_triple(g, independent[i], independent[j], independent[l]))
          return c;
  return std::nullopt;
}

// Independent recount of a certificate against (g, independent).
inline bool verify_certificate(const Graph &g, const std::vector<int> &independent,
                               const TripleCertificate &c) {
  auto deg = g.regular_degree();
  if (!deg || c.num_colors != *deg + 1)
    return false;
  const std::array<int, 3> b{c.b1, c.b2, c.b3};
  for (int x : b) {
    if (x < 0 || x >= g.order())
      return false;
    if (std::find(independent.begin(), independent.end(), x) == independent.end())
      return false;
  }
  if (b[0] == b[1] || b[1] == b[2] || b[0] == b[2] || !g.is_independent(independent))
    return false;
  for (int u = 0; u < g.order(); ++u)
    if (g.adjacent(u, b[0]) && g.adjacent(u, b[1]) && g.adjacent(u, b[2]))
      return false;
  const std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {1, 2}, {0, 2}}};
  std::vector<int> seen(g.order(), 0);
  int total = 0;
  for (int i = 0; i < 3; ++i) {
    std::vector<int> expect;
    for (int u = 0; u < g.order(); ++u)
      if (g.adjacent(u, b[pairs[i].first]) && g.adjacent(u, b[pairs[i].second]))
        expect.push_back(u);
    if (expect != c.pairwise_common[i])
      return false;
    for (int u : expect)
      if (seen[u]++)
        return false;
    total += static_cast<int>(expect.size());
  }
  return total == c.total && total > c.num_colors;
}

} // namespace silverbig

#endif
