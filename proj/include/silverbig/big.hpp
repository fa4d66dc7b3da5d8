#ifndef SILVERBIG_BIG_HPP
#define SILVERBIG_BIG_HPP

#include <optional>
#include <string>

#include "bitset.hpp"
#include "common.hpp"
#include "design.hpp"
#include "graph.hpp"

namespace silverbig {

// i-block-intersection graph: vertices are block indices, u ~ w iff the
// blocks share exactly i points.
inline Graph build_big(const Design &d, int i) {
  if (i < 0 || i > d.k)
    throw ParameterError("intersection size " + std::to_string(i) + " outside 0.." +
                         std::to_string(d.k));
  std::vector<Bitset> members(d.b(), Bitset(d.v));
  for (int bi = 0; bi < d.b(); ++bi)
    for (int p : d.blocks[bi])
      members[bi].set(p);
  Graph g(d.b());
  for (int u = 0; u < d.b(); ++u)
    for (int w = u + 1; w < d.b(); ++w)
      if (members[u].intersection_count(members[w]) == i)
        g.add_edge(u, w);
  return g;
}

struct SRGParams {
  int n = 0;
  int degree = 0;
  int lambda_adj = 0;
  int mu = 0;
  // complete or edgeless; lambda_adj/mu are then not meaningful
  bool degenerate = false;

  bool feasible() const {
    return degenerate ||
           1LL * degree * (degree - lambda_adj - 1) == 1LL * (n - degree - 1) * mu;
  }

  bool operator==(const SRGParams &) const = default;
};

// Parameters of the 0- or 1-intersection graph of any S(2,k,v):
// G1 = SRG(b, k(r-1), r-2+(k-1)^2, k^2) and G0 is its complement.
inline SRGParams expected_srg(int v, int k, int i) {
  check_design_parameters(v, k, 1);
  if (i != 0 && i != 1)
    throw ParameterError("strongly regular parameters exist only for i = 0 or 1");
  const int b = static_cast<int>(expected_block_count(v, k, 1));
  const int r = (v - 1) / (k - 1);
  SRGParams p;
  p.n = b;
  if (i == 1) {
    p.degree = k * (r - 1);
    p.lambda_adj = r - 2 + (k - 1) * (k - 1);
    p.mu = k * k;
  } else {
    p.degree = b - k * (r - 1) - 1;
    p.lambda_adj = b - 2 * k * (r - 1) + k * k - 2;
    p.mu = b - 2 * k * r + k * k + r - 1;
  }
  p.degenerate = p.degree == 0 || p.degree == b - 1;
  return p;
}

struct SRGReport {
  bool ok = false;
  // First failing vertex pair (u == w for a degree failure).
  struct Counterexample {
    int u = -1;
    int w = -1;
    int expected = 0;
    int actual = 0;
    std::string what;
  };
  std::optional<Counterexample> counterexample;
};

// Exhaustive check of vertex count, regularity and all pairwise common
// neighbour counts. Degenerate parameters check only completeness or
// edgelessness.
inline SRGReport verify_srg(const Graph &g, const SRGParams &p) {
  SRGReport rep;
  auto fail = [&](int u, int w, int expected, int actual, std::string what) {
    rep.counterexample = SRGReport::Counterexample{u, w, expected, actual, std::move(what)};
    return rep;
  };
  if (g.order() != p.n)
    return fail(-1, -1, p.n, g.order(), "vertex count");
  if (p.degenerate && (p.degree == 0 || p.degree == p.n - 1)) {
    const bool complete = p.degree != 0;
    for (int u = 0; u < g.order(); ++u)
      for (int w = u + 1; w < g.order(); ++w)
        if (g.adjacent(u, w) != complete)
          return fail(u, w, complete, !complete, complete ? "missing edge" : "unexpected edge");
    rep.ok = true;
    return rep;
  }
  for (int u = 0; u < g.order(); ++u)
    if (g.degree(u) != p.degree)
      return fail(u, u, p.degree, g.degree(u), "degree");
  if (!p.degenerate) {
    for (int u = 0; u < g.order(); ++u)
      for (int w = u + 1; w < g.order(); ++w) {
        int c = g.common_neighbors(u, w);
        if (g.adjacent(u, w) && c != p.lambda_adj)
          return fail(u, w, p.lambda_adj, c, "common neighbours of adjacent pair");
        if (!g.adjacent(u, w) && c != p.mu)
          return fail(u, w, p.mu, c, "common neighbours of non-adjacent pair");
      }
  } else {
    return fail(-1, -1, p.degree, p.degree, "degenerate flag on a non-degenerate degree");
  }
  rep.ok = true;
  return rep;
}

} // namespace silverbig

#endif
