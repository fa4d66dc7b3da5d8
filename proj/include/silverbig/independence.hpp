#ifndef SILVERBIG_INDEPENDENCE_HPP
#define SILVERBIG_INDEPENDENCE_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "big.hpp"
#include "bitset.hpp"
#include "common.hpp"
#include "design.hpp"
#include "graph.hpp"

namespace silverbig {

// Blocks through point x, in increasing index order.
inline std::vector<int> pencil(const Design &d, int x) {
  if (x < 0 || x >= d.v)
    throw ParameterError("point " + std::to_string(x) + " out of range");
  std::vector<int> out;
  for (int bi = 0; bi < d.b(); ++bi)
    if (std::binary_search(d.blocks[bi].begin(), d.blocks[bi].end(), x))
      out.push_back(bi);
  return out;
}

// The point x with set == pencil(d, x), if any.
inline std::optional<int> pencil_point(const Design &d, std::vector<int> set) {
  if (set.empty())
    return std::nullopt;
  std::sort(set.begin(), set.end());
  for (int x : d.blocks.at(set.front()))
    if (pencil(d, x) == set)
      return x;
  return std::nullopt;
}

struct IndependentSetResult {
  std::vector<int> vertices;
  bool exact = false;
};

namespace detail {

// Greedy partition of `cand` (ascending ids) into cliques of g; the number
// of cliques bounds the independence number of the induced subgraph. Stops
// counting once the count exceeds `stop_above`.
inline int clique_cover_bound(const Graph &g, const Bitset &cand, int stop_above) {
  std::vector<Bitset> common;
  bool over = false;
  cand.for_each([&](int v) {
    if (over)
      return;
    for (auto &c : common)
      if (c.test(v)) {
        c &= g.row(v);
        return;
      }
    common.push_back(g.row(v));
    if (static_cast<int>(common.size()) > stop_above)
      over = true;
  });
  return static_cast<int>(common.size());
}

class MaxIndependentSet {
public:
  MaxIndependentSet(const Graph &g, Budget &budget) : g_(g), budget_(budget) {}

  std::vector<int> run() {
    Bitset all(g_.order());
    all.set_all();
    best_ = greedy();
    recurse(all);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

private:
  std::vector<int> greedy() const {
    Bitset cand(g_.order());
    cand.set_all();
    std::vector<int> out;
    while (cand.any()) {
      int pick = -1, best_deg = 0;
      cand.for_each([&](int v) {
        int d = g_.row(v).intersection_count(cand);
        if (pick < 0 || d < best_deg) {
          pick = v;
          best_deg = d;
        }
      });
      out.push_back(pick);
      cand.subtract(g_.row(pick));
      cand.reset(pick);
    }
    return out;
  }

  void recurse(Bitset cand) {
    while (true) {
      if (!budget_.spend())
        return;
      const int have = static_cast<int>(current_.size());
      const int need = static_cast<int>(best_.size()) - have;
      if (cand.none()) {
        if (need < 0)
          best_ = current_;
        return;
      }
      if (clique_cover_bound(g_, cand, need) <= need)
        return;
      // branch on a vertex of maximum degree inside cand, lowest id first
      int pick = -1, max_deg = -1;
      cand.for_each([&](int v) {
        int d = g_.row(v).intersection_count(cand);
        if (d > max_deg) {
          max_deg = d;
          pick = v;
        }
      });
      if (max_deg == 0) {
        if (have + cand.count() > static_cast<int>(best_.size())) {
          best_ = current_;
          cand.for_each([&](int v) { best_.push_back(v); });
        }
        return;
      }
      Bitset with = cand;
      with.subtract(g_.row(pick));
      with.reset(pick);
      current_.push_back(pick);
      recurse(with);
      current_.pop_back();
      if (budget_.exhausted())
        return;
      cand.reset(pick);
    }
  }

  const Graph &g_;
  Budget &budget_;
  std::vector<int> current_;
  std::vector<int> best_;
};

} // namespace detail

// Branch and bound for a maximum independent set: branch on a maximum-degree
// vertex (include, then exclude), prune with a greedy clique cover. exact is
// false when the budget ran out; vertices then holds the best set found.
inline IndependentSetResult max_independent_set(const Graph &g,
                                                std::uint64_t budget_nodes = default_search_budget) {
  Budget budget(budget_nodes);
  IndependentSetResult res;
  res.vertices = detail::MaxIndependentSet(g, budget).run();
  res.exact = !budget.exhausted();
  return res;
}

struct AlphaSetList {
  std::vector<std::vector<int>> sets;
  bool complete = false;
};

// Every independent set of size `alpha`, in lexicographic order.
inline AlphaSetList enumerate_alpha_sets(const Graph &g, int alpha,
                                         std::uint64_t budget_nodes = default_search_budget) {
  if (alpha < 0)
    throw ParameterError("alpha must be non-negative");
  Budget budget(budget_nodes);
  AlphaSetList out;
  std::vector<int> current;

  auto recurse = [&](auto &&self, Bitset cand) -> void {
    if (!budget.spend())
      return;
    const int need = alpha - static_cast<int>(current.size());
    if (need == 0) {
      out.sets.push_back(current);
      return;
    }
    if (cand.count() < need || detail::clique_cover_bound(g, cand, need) < need)
      return;
    for (int v = cand.next(); v >= 0; v = cand.next(v + 1)) {
      cand.reset(v);
      Bitset rest = cand;
      rest.subtract(g.row(v));
      current.push_back(v);
      self(self, rest);
      current.pop_back();
      if (budget.exhausted() || cand.count() < need)
        return;
    }
  };

  Bitset all(g.order());
  all.set_all();
  if (alpha == 0)
    out.sets.push_back({});
  else
    recurse(recurse, all);
  out.complete = !budget.exhausted();
  return out;
}

struct AlphaG0Report {
  // false when a search ran out of budget; the other fields are then partial
  bool decided = false;
  bool all_pencils = false;
  int alpha = 0;
  std::size_t alpha_set_count = 0;
  std::optional<std::vector<int>> witness;
};

// v > k^3 - 2k^2 + 2k is the range where every alpha-set of the
// 0-intersection graph is forced to be a pencil.
inline bool pencil_threshold_exceeded(int v, int k) { return v > k * k * k - 2 * k * k + 2 * k; }

// Decides whether every maximum independent set of the 0-intersection graph
// is a pencil T(x); otherwise reports the first non-pencil alpha-set.
inline AlphaG0Report classify_alpha_g0(const Design &d,
                                       std::uint64_t budget_nodes = default_search_budget) {
  if (d.lambda != 1)
    throw ParameterError("pencil classification needs lambda = 1");
  AlphaG0Report rep;
  const Graph g0 = build_big(d, 0);
  auto mis = max_independent_set(g0, budget_nodes);
  rep.alpha = static_cast<int>(mis.vertices.size());
  if (!mis.exact)
    return rep;
  auto sets = enumerate_alpha_sets(g0, rep.alpha, budget_nodes);
  rep.alpha_set_count = sets.sets.size();
  rep.all_pencils = true;
  for (const auto &s : sets.sets)
    if (!pencil_point(d, s)) {
      rep.all_pencils = false;
      rep.witness = s;
      break;
    }
  rep.decided = sets.complete || !rep.all_pencils;
  if (rep.decided && rep.all_pencils == false && pencil_threshold_exceeded(d.v, d.k))
    throw std::logic_error("non-pencil alpha-set found above the pencil threshold");
  return rep;
}

// |X_i| for i >= 0: the vertices outside I grouped by how many neighbours
// they have in I. Only non-empty groups are listed.
inline std::map<int, int> xi_census(const Graph &g, const std::vector<int> &independent) {
  for (int x : independent)
    if (x < 0 || x >= g.order())
      throw ParameterError("vertex " + std::to_string(x) + " out of range");
  if (!g.is_independent(independent))
    throw ParameterError("census needs an independent set");
  Bitset in(g.order());
  for (int x : independent)
    in.set(x);
  std::map<int, int> census;
  for (int u = 0; u < g.order(); ++u)
    if (!in.test(u))
      ++census[g.row(u).intersection_count(in)];
  return census;
}

} // namespace silverbig

#endif
