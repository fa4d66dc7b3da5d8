#ifndef SILVERBIG_PARALLEL_CLASS_HPP
#define SILVERBIG_PARALLEL_CLASS_HPP

#include <algorithm>
#include <vector>

#include "common.hpp"
#include "design.hpp"

namespace silverbig {

enum class ClassMode { full, near };

struct ParallelClassResult {
  SearchStatus status = SearchStatus::none;
  std::vector<int> blocks;
  // point left uncovered by a near parallel class
  int missed_point = -1;
};

namespace detail {

class ExactCover {
public:
  ExactCover(const Design &d, Budget &budget)
      : d_(d), budget_(budget), incident_(d.v), covered_(d.v, 0) {
    for (int bi = 0; bi < d.b(); ++bi)
      for (int p : d.blocks[bi])
        incident_[p].push_back(bi);
  }

  // Covers every point not pre-marked; blocks tried in index order,
  // always branching on the lowest uncovered point.
  bool solve(int skip_point) {
    std::fill(covered_.begin(), covered_.end(), 0);
    chosen_.clear();
    if (skip_point >= 0)
      covered_[skip_point] = 1;
    return recurse(0);
  }

  const std::vector<int> &chosen() const { return chosen_; }

private:
  bool recurse(int from) {
    if (!budget_.spend())
      return false;
    int p = from;
    while (p < d_.v && covered_[p])
      ++p;
    if (p == d_.v)
      return true;
    for (int bi : incident_[p]) {
      const auto &blk = d_.blocks[bi];
      bool free = true;
      for (int q : blk)
        free = free && !covered_[q];
      if (!free)
        continue;
      for (int q : blk)
        covered_[q] = 1;
      chosen_.push_back(bi);
      if (recurse(p + 1))
        return true;
      chosen_.pop_back();
      for (int q : blk)
        covered_[q] = 0;
      if (budget_.exhausted())
        return false;
    }
    return false;
  }

  const Design &d_;
  Budget &budget_;
  std::vector<std::vector<int>> incident_;
  std::vector<char> covered_;
  std::vector<int> chosen_;
};

} // namespace detail

// Exact-cover search for a parallel class (mode full) or a near parallel
// class missing one point (mode near; missing points tried in increasing
// order). status none is definitive; unknown means the budget ran out.
inline ParallelClassResult find_parallel_class(const Design &d, ClassMode mode,
                                               std::uint64_t budget_nodes = default_search_budget) {
  Budget budget(budget_nodes);
  ParallelClassResult res;
  const int rem = d.v % d.k;
  if ((mode == ClassMode::full && rem != 0) || (mode == ClassMode::near && rem != 1))
    return res;
  detail::ExactCover ec(d, budget);
  if (mode == ClassMode::full) {
    if (ec.solve(-1)) {
      res.status = SearchStatus::found;
      res.blocks = ec.chosen();
    } else if (budget.exhausted()) {
      res.status = SearchStatus::unknown;
    }
    return res;
  }
  for (int miss = 0; miss < d.v; ++miss) {
    if (ec.solve(miss)) {
      res.status = SearchStatus::found;
      res.blocks = ec.chosen();
      res.missed_point = miss;
      break;
    }
    if (budget.exhausted()) {
      res.status = SearchStatus::unknown;
      break;
    }
  }
  std::sort(res.blocks.begin(), res.blocks.end());
  return res;
}

// Blocks pairwise disjoint, covering all points (missing == -1) or all but
// exactly one point (returned through missing).
inline bool is_parallel_class(const Design &d, const std::vector<int> &blocks, bool near,
                              int *missing = nullptr) {
  std::vector<int> hits(d.v, 0);
  for (int bi : blocks) {
    if (bi < 0 || bi >= d.b())
      return false;
    for (int p : d.blocks[bi])
      if (++hits[p] > 1)
        return false;
  }
  int uncovered = 0, last = -1;
  for (int p = 0; p < d.v; ++p)
    if (!hits[p]) {
      ++uncovered;
      last = p;
    }
  if (missing)
    *missing = last;
  return near ? uncovered == 1 : uncovered == 0;
}

} // namespace silverbig

#endif
