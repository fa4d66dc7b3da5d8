#ifndef SILVERBIG_TESTS_ORACLES_HPP
#define SILVERBIG_TESTS_ORACLES_HPP

// Brute-force reference implementations used only by the tests. They share
// nothing with the library's search code beyond the Graph type.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "silverbig/graph.hpp"

namespace oracle {

using silverbig::Graph;

inline bool independent_mask(const Graph &g, std::uint32_t mask) {
  for (int u = 0; u < g.order(); ++u)
    if (mask >> u & 1)
      for (int v = u + 1; v < g.order(); ++v)
        if ((mask >> v & 1) && g.adjacent(u, v))
          return false;
  return true;
}

// Independence number by subset enumeration (n <= 24).
inline int alpha(const Graph &g) {
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << g.order()); ++mask)
    if (__builtin_popcount(mask) > best && independent_mask(g, mask))
      best = __builtin_popcount(mask);
  return best;
}

// All independent sets of the given size, lexicographically sorted.
inline std::vector<std::vector<int>> independent_sets_of_size(const Graph &g, int size) {
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 0; mask < (1u << g.order()); ++mask)
    if (__builtin_popcount(mask) == size && independent_mask(g, mask)) {
      std::vector<int> s;
      for (int u = 0; u < g.order(); ++u)
        if (mask >> u & 1)
          s.push_back(u);
      out.push_back(s);
    }
  std::sort(out.begin(), out.end());
  return out;
}

// Colors on N[x] pairwise distinct.
inline bool rainbow_alldiff(const Graph &g, const std::vector<int> &colors, int x) {
  std::vector<int> seen{colors[x]};
  for (int y = 0; y < g.order(); ++y)
    if (g.adjacent(x, y))
      seen.push_back(colors[y]);
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

// Enumerates proper q-colorings vertex by vertex (only properness is
// checked on the way down) and tests the rainbow condition at each leaf.
// Colorings are generated up to color renaming: a vertex may take any color
// already in use or the smallest unused one.
inline bool has_silver_coloring(const Graph &g, const std::vector<int> &independent, int q,
                                std::uint64_t *leaves = nullptr) {
  const int n = g.order();
  std::vector<int> col(n, -1);
  auto rec = [&](auto &&self, int u, int used) -> bool {
    if (u == n) {
      if (leaves)
        ++*leaves;
      for (int x : independent)
        if (!rainbow_alldiff(g, col, x))
          return false;
      return true;
    }
    for (int c = 0; c < std::min(q, used + 1); ++c) {
      bool ok = true;
      for (int w = 0; w < u && ok; ++w)
        ok = !(g.adjacent(u, w) && col[w] == c);
      if (!ok)
        continue;
      col[u] = c;
      if (self(self, u + 1, std::max(used, c + 1)))
        return true;
    }
    col[u] = -1;
    return false;
  };
  return rec(rec, 0, 0);
}

// Random simple r-regular graph on n vertices (configuration model with
// restarts); n*r must be even.
inline Graph random_regular(int n, int r, std::mt19937 &rng) {
  while (true) {
    std::vector<int> stubs;
    for (int u = 0; u < n; ++u)
      for (int i = 0; i < r; ++i)
        stubs.push_back(u);
    std::shuffle(stubs.begin(), stubs.end(), rng);
    Graph g(n);
    bool ok = true;
    for (std::size_t i = 0; i + 1 < stubs.size() && ok; i += 2) {
      int a = stubs[i], b = stubs[i + 1];
      if (a == b || g.adjacent(a, b))
        ok = false;
      else
        g.add_edge(a, b);
    }
    if (ok)
      return g;
  }
}

} // namespace oracle

#endif
