#ifndef SILVERBIG_COLORING_HPP
#define SILVERBIG_COLORING_HPP

#include <optional>
#include <string>
#include <vector>

#include "common.hpp"
#include "graph.hpp"

namespace silverbig {

// Total vertex -> color map with dense color ids 0..num_colors-1.
struct Coloring {
  std::vector<int> colors;
  int num_colors = 0;

  bool operator==(const Coloring &) const = default;
};

inline void check_total(const Graph &g, const Coloring &c) {
  if (static_cast<int>(c.colors.size()) != g.order())
    throw ParameterError("coloring covers " + std::to_string(c.colors.size()) + " of " +
                         std::to_string(g.order()) + " vertices");
  for (int x : c.colors)
    if (x < 0 || x >= c.num_colors)
      throw ParameterError("color " + std::to_string(x) + " outside 0.." +
                           std::to_string(c.num_colors - 1));
}

inline bool is_proper(const Graph &g, const Coloring &c) {
  check_total(g, c);
  for (int u = 0; u < g.order(); ++u) {
    bool clash = false;
    g.row(u).for_each([&](int v) { clash = clash || c.colors[u] == c.colors[v]; });
    if (clash)
      return false;
  }
  return true;
}

// Vertices whose closed neighbourhood shows every color. The graph must be
// regular of degree num_colors-1, so this is the same as the colors on N[x]
// being pairwise distinct.
inline std::vector<int> rainbow_vertices(const Graph &g, const Coloring &c) {
  check_total(g, c);
  auto deg = g.regular_degree();
  if (!deg || *deg != c.num_colors - 1)
    throw ParameterError("rainbow check needs a graph regular of degree num_colors-1");
  std::vector<int> out;
  std::vector<int> stamp(c.num_colors, -1);
  for (int x = 0; x < g.order(); ++x) {
    bool ok = true;
    stamp[c.colors[x]] = x;
    g.row(x).for_each([&](int y) {
      if (stamp[c.colors[y]] == x)
        ok = false;
      stamp[c.colors[y]] = x;
    });
    if (ok)
      out.push_back(x);
  }
  return out;
}

inline bool is_totally_silver(const Graph &g, const Coloring &c) {
  return is_proper(g, c) && static_cast<int>(rainbow_vertices(g, c).size()) == g.order();
}

// Proper, and every vertex of `alpha_set` rainbow. When `alpha` is given the
// set must also have that size (the caller vouches it is the independence
// number).
inline bool is_silver(const Graph &g, const Coloring &c, const std::vector<int> &alpha_set,
                      std::optional<int> alpha = std::nullopt) {
  for (int x : alpha_set)
    if (x < 0 || x >= g.order())
      throw ParameterError("alpha-set vertex " + std::to_string(x) + " out of range");
  if (!g.is_independent(alpha_set))
    throw ParameterError("alpha-set is not independent");
  if (!is_proper(g, c))
    return false;
  if (alpha && static_cast<int>(alpha_set.size()) != *alpha)
    return false;
  auto deg = g.regular_degree();
  if (!deg || *deg != c.num_colors - 1)
    return false;
  std::vector<char> rainbow(g.order(), 0);
  for (int x : rainbow_vertices(g, c))
    rainbow[x] = 1;
  for (int x : alpha_set)
    if (!rainbow[x])
      return false;
  return true;
}

} // namespace silverbig

#endif
