#ifndef SILVERBIG_DECIDER_HPP
#define SILVERBIG_DECIDER_HPP

#include <algorithm>
#include <bitset>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "certificate.hpp"
#include "coloring.hpp"
#include "common.hpp"
#include "graph.hpp"
#include "independence.hpp"
#include "silver.hpp"

namespace silverbig {

enum class Decision { sat, unsat, unknown };

inline const char *to_string(Decision d) {
  switch (d) {
  case Decision::sat: return "Sat";
  case Decision::unsat: return "Unsat";
  case Decision::unknown: return "Unknown";
  }
  return "?";
}

struct DecideOptions {
  std::uint64_t budget = default_decider_budget;
  // pre-color N[min I] with 0..r in vertex-id order
  bool symmetry_breaking = true;
};

struct DecideResult {
  Decision decision = Decision::unknown;
  std::optional<Coloring> coloring;
  std::uint64_t steps = 0;
};

namespace detail {

// Backtracking over proper (r+1)-colorings where the closed neighbourhood of
// every vertex of I must be all-different. Because |N[x]| = r+1 equals the
// number of colors, each constrained neighbourhood uses every color exactly
// once, so besides forward checking we assign "hidden singles": a color that
// only one member of a neighbourhood can still take.
template <std::size_t W> class SilverSearch {
  using Domain = std::bitset<W>;

public:
  SilverSearch(const Graph &g, const std::vector<int> &independent, int colors, Budget &budget)
      : g_(g), n_(g.order()), q_(colors), budget_(budget), groups_of_(n_), peers_(n_) {
    for (int x : independent) {
      std::vector<int> members = g.neighbors(x);
      members.push_back(x);
      std::sort(members.begin(), members.end());
      for (int u : members)
        groups_of_[u].push_back(static_cast<int>(groups_.size()));
      groups_.push_back(std::move(members));
    }
    for (int u = 0; u < n_; ++u) {
      Bitset p = g.row(u);
      for (int gi : groups_of_[u])
        for (int w : groups_[gi])
          p.set(w);
      p.reset(u);
      peers_[u] = p.to_vector();
    }
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      if (groups_of_[a].size() != groups_of_[b].size())
        return groups_of_[a].size() > groups_of_[b].size();
      if (g.degree(a) != g.degree(b))
        return g.degree(a) > g.degree(b);
      return a < b;
    });
  }

  // Returns sat/unsat/unknown; on sat the coloring is in solution().
  Decision run(const std::vector<int> &precolored) {
    State s;
    Domain full;
    for (int c = 0; c < q_; ++c)
      full.set(c);
    s.dom.assign(n_, full);
    s.color.assign(n_, -1);
    for (std::size_t i = 0; i < precolored.size(); ++i)
      if (!assign(s, precolored[i], static_cast<int>(i)))
        return budget_.exhausted() ? Decision::unknown : Decision::unsat;
    if (!propagate(s))
      return budget_.exhausted() ? Decision::unknown : Decision::unsat;
    if (search(s))
      return Decision::sat;
    return budget_.exhausted() ? Decision::unknown : Decision::unsat;
  }

  const std::vector<int> &solution() const { return solution_; }

private:
  struct State {
    std::vector<Domain> dom;
    std::vector<int> color;
    std::vector<int> pending;
  };

  bool assign(State &s, int u, int c) {
    if (!s.dom[u].test(c))
      return false;
    if (s.color[u] >= 0)
      return s.color[u] == c;
    s.color[u] = c;
    s.dom[u].reset();
    s.dom[u].set(c);
    for (int w : peers_[u]) {
      if (s.color[w] == c)
        return false;
      if (s.color[w] < 0 && s.dom[w].test(c)) {
        if (!budget_.spend())
          return false;
        s.dom[w].reset(c);
        auto left = s.dom[w].count();
        if (left == 0)
          return false;
        if (left == 1)
          s.pending.push_back(w);
      }
    }
    return true;
  }

  static int first_color(const Domain &d) {
    for (std::size_t c = 0; c < W; ++c)
      if (d.test(c))
        return static_cast<int>(c);
    return -1;
  }

  bool propagate(State &s) {
    std::vector<int> count(q_), last(q_);
    std::vector<char> used(q_);
    while (true) {
      while (!s.pending.empty()) {
        int u = s.pending.back();
        s.pending.pop_back();
        if (s.color[u] >= 0)
          continue;
        if (!assign(s, u, first_color(s.dom[u])))
          return false;
      }
      bool changed = false;
      for (const auto &grp : groups_) {
        if (!budget_.spend())
          return false;
        std::fill(count.begin(), count.end(), 0);
        std::fill(used.begin(), used.end(), 0);
        for (int u : grp) {
          if (s.color[u] >= 0) {
            used[s.color[u]] = 1;
            continue;
          }
          for (int c = 0; c < q_; ++c)
            if (s.dom[u].test(c)) {
              ++count[c];
              last[c] = u;
            }
        }
        for (int c = 0; c < q_; ++c) {
          if (used[c])
            continue;
          if (count[c] == 0)
            return false;
          if (count[c] == 1 && s.color[last[c]] < 0) {
            if (!assign(s, last[c], c))
              return false;
            changed = true;
          }
        }
      }
      if (!changed && s.pending.empty())
        return true;
    }
  }

  bool search(State &s) {
    if (!budget_.spend())
      return false;
    int u = -1;
    for (int cand : order_)
      if (s.color[cand] < 0) {
        u = cand;
        break;
      }
    if (u < 0) {
      solution_ = s.color;
      return true;
    }
    for (int c = 0; c < q_; ++c) {
      if (!s.dom[u].test(c))
        continue;
      State next = s;
      if (assign(next, u, c) && propagate(next) && search(next))
        return true;
      if (budget_.exhausted())
        return false;
    }
    return false;
  }

  const Graph &g_;
  int n_;
  int q_;
  Budget &budget_;
  std::vector<std::vector<int>> groups_;
  std::vector<std::vector<int>> groups_of_;
  std::vector<std::vector<int>> peers_;
  std::vector<int> order_;
  std::vector<int> solution_;
};

template <std::size_t W>
Decision run_search(const Graph &g, const std::vector<int> &independent, int colors,
                    const std::vector<int> &precolored, Budget &budget, std::vector<int> &out) {
  SilverSearch<W> search(g, independent, colors, budget);
  Decision d = search.run(precolored);
  if (d == Decision::sat)
    out = search.solution();
  return d;
}

} // namespace detail

// Decides whether g (r-regular) has a proper (r+1)-coloring in which every
// vertex of `independent` is rainbow. unsat is only reported after the search
// space is exhausted; a sat coloring is re-verified before it is returned.
inline DecideResult decide_silver(const Graph &g, std::vector<int> independent,
                                  const DecideOptions &opts = {}) {
  auto deg = g.regular_degree();
  if (!deg)
    throw ParameterError("silver decision needs a regular graph");
  for (int x : independent)
    if (x < 0 || x >= g.order())
      throw ParameterError("vertex " + std::to_string(x) + " out of range");
  std::sort(independent.begin(), independent.end());
  if (!g.is_independent(independent))
    throw ParameterError("silver decision needs an independent set");

  const int colors = *deg + 1;
  Budget budget(opts.budget);
  // vertex precolored[i] receives color i
  std::vector<int> precolored;
  if (opts.symmetry_breaking && !independent.empty()) {
    precolored = g.neighbors(independent.front());
    precolored.push_back(independent.front());
    std::sort(precolored.begin(), precolored.end());
  }

  DecideResult res;
  std::vector<int> solution;
  if (colors <= 64)
    res.decision = detail::run_search<64>(g, independent, colors, precolored, budget, solution);
  else if (colors <= 128)
    res.decision = detail::run_search<128>(g, independent, colors, precolored, budget, solution);
  else if (colors <= 256)
    res.decision = detail::run_search<256>(g, independent, colors, precolored, budget, solution);
  else if (colors <= 1024)
    res.decision = detail::run_search<1024>(g, independent, colors, precolored, budget, solution);
  else
    throw ParameterError("more than 1024 colors are not supported");
  res.steps = budget.used();
  if (res.decision == Decision::sat) {
    Coloring c{std::move(solution), colors};
    if (!is_silver(g, c, independent))
      throw std::logic_error("silver search produced an invalid coloring");
    res.coloring = std::move(c);
  }
  return res;
}

// Silver over all alpha-sets: computes alpha, enumerates every alpha-set and
// refutes each by a triple certificate or by decide_silver. The first sat
// wins; NotSilver needs every alpha-set refuted.
inline Verdict decide_silver_any(const Graph &g, std::uint64_t budget = default_decider_budget) {
  if (!g.regular_degree())
    throw ParameterError("silver decision needs a regular graph");
  Verdict out;
  const auto search_budget = std::min<std::uint64_t>(budget, default_search_budget);
  auto mis = max_independent_set(g, search_budget);
  if (!mis.exact) {
    out.detail = "independence number not determined within budget";
    return out;
  }
  const int alpha = static_cast<int>(mis.vertices.size());
  auto sets = enumerate_alpha_sets(g, alpha, search_budget);
  bool unknown = !sets.complete;
  bool all_certified = true;
  for (const auto &set : sets.sets) {
    if (auto cert = find_triple_certificate(g, set)) {
      out.refutations.push_back({set, std::move(cert)});
      continue;
    }
    DecideOptions opts;
    opts.budget = budget;
    auto r = decide_silver(g, set, opts);
    if (r.decision == Decision::sat) {
      out = Verdict{};
      out.outcome = Outcome::silver;
      out.coloring = std::move(r.coloring);
      out.alpha_set = set;
      out.detail = "alpha = " + std::to_string(alpha);
      return out;
    }
    if (r.decision == Decision::unknown) {
      unknown = true;
      continue;
    }
    all_certified = false;
    out.refutations.push_back({set, std::nullopt});
  }
  if (unknown) {
    out.outcome = Outcome::unknown;
    out.detail = "budget exhausted before every alpha-set was decided";
    return out;
  }
  out.outcome = Outcome::not_silver;
  out.reason = all_certified ? Reason::triple_certificate : Reason::exhaustive_search;
  out.detail = "alpha = " + std::to_string(alpha) + ", " + std::to_string(sets.sets.size()) +
               " alpha-sets refuted";
  return out;
}

} // namespace silverbig

#endif
