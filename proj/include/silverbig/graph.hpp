#ifndef SILVERBIG_GRAPH_HPP
#define SILVERBIG_GRAPH_HPP

#include <optional>
#include <utility>
#include <vector>

#include "bitset.hpp"
#include "common.hpp"

namespace silverbig {

// Simple undirected graph on vertices 0..n-1 stored as bit-set adjacency
// rows: O(1) edge queries and word-parallel common-neighbour counts.
class Graph {
public:
  Graph() = default;
  explicit Graph(int n) : rows_(n, Bitset(n)) {
    if (n < 0)
      throw ParameterError("negative vertex count");
  }

  int order() const { return static_cast<int>(rows_.size()); }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
      throw ParameterError("self-loop at vertex " + std::to_string(u));
    rows_[u].set(v);
    rows_[v].set(u);
  }

  bool adjacent(int u, int v) const { return rows_[u].test(v); }
  const Bitset &row(int u) const { return rows_[u]; }
  int degree(int u) const { return rows_[u].count(); }
  std::vector<int> neighbors(int u) const { return rows_[u].to_vector(); }

  Bitset closed_neighborhood(int u) const {
    Bitset b = rows_[u];
    b.set(u);
    return b;
  }

  int common_neighbors(int u, int v) const { return rows_[u].intersection_count(rows_[v]); }

  long long edge_count() const {
    long long s = 0;
    for (const auto &r : rows_)
      s += r.count();
    return s / 2;
  }

  // Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < order(); ++u)
      rows_[u].for_each([&](int v) {
        if (u < v)
          out.emplace_back(u, v);
      });
    return out;
  }

  std::optional<int> regular_degree() const {
    if (rows_.empty())
      return 0;
    int d = degree(0);
    for (int u = 1; u < order(); ++u)
      if (degree(u) != d)
        return std::nullopt;
    return d;
  }

  Graph complement() const {
    Graph g(order());
    for (int u = 0; u < order(); ++u) {
      g.rows_[u] = rows_[u].complement();
      g.rows_[u].reset(u);
    }
    return g;
  }

  bool is_independent(const std::vector<int> &set) const {
    for (std::size_t i = 0; i < set.size(); ++i)
      for (std::size_t j = i + 1; j < set.size(); ++j)
        if (set[i] == set[j] || adjacent(set[i], set[j]))
          return false;
    return true;
  }

  bool operator==(const Graph &) const = default;

private:
  void check_vertex(int u) const {
    if (u < 0 || u >= order())
      throw ParameterError("vertex " + std::to_string(u) + " out of range");
  }

  std::vector<Bitset> rows_;
};

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      g.add_edge(u, v);
  return g;
}

} // namespace silverbig

#endif
