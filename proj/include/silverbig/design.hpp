#ifndef SILVERBIG_DESIGN_HPP
#define SILVERBIG_DESIGN_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "common.hpp"

namespace silverbig {

// A block is a strictly increasing list of 0-based point indices.
using Block = std::vector<int>;

// Partition of the block indices into parallel classes. Class order is
// meaningful (constructions rely on class 0 of an affine plane being the
// lines of constant second coordinate); member lists are kept sorted.
struct Resolution {
  std::vector<std::vector<int>> classes;

  bool operator==(const Resolution &) const = default;
};

// A 2-(v,k,lambda) design in canonical form: points 0..v-1, every block
// sorted, the block list sorted lexicographically, block index = position.
struct Design {
  int v = 0;
  int k = 0;
  int lambda = 1;
  std::vector<Block> blocks;
  std::optional<Resolution> resolution;

  int b() const { return static_cast<int>(blocks.size()); }
  int r() const { return lambda * (v - 1) / (k - 1); }

  bool operator==(const Design &) const = default;
};

// Checks 2 <= k < v, lambda >= 1, and integrality of b and r.
inline void check_design_parameters(int v, int k, int lambda) {
  if (k < 2 || k >= v)
    throw ParameterError("block size must satisfy 2 <= k < v (v=" + std::to_string(v) +
                         ", k=" + std::to_string(k) + ")");
  if (lambda < 1)
    throw ParameterError("lambda must be positive");
  const long long pairs = 1LL * lambda * v * (v - 1);
  if ((1LL * lambda * (v - 1)) % (k - 1) != 0 || pairs % (1LL * k * (k - 1)) != 0)
    throw ParameterError("inadmissible parameters v=" + std::to_string(v) +
                         " k=" + std::to_string(k) + " lambda=" + std::to_string(lambda));
}

inline long long expected_block_count(int v, int k, int lambda) {
  return 1LL * lambda * v * (v - 1) / (1LL * k * (k - 1));
}

// Sorts every block and the block list, remapping resolution indices so
// each class still names the same blocks. Class order is preserved.
inline void canonicalize(Design &d) {
  for (auto &blk : d.blocks)
    std::sort(blk.begin(), blk.end());
  std::vector<int> order(d.blocks.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return d.blocks[a] < d.blocks[b]; });
  std::vector<int> new_index(order.size());
  std::vector<Block> sorted;
  sorted.reserve(order.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    new_index[order[pos]] = static_cast<int>(pos);
    sorted.push_back(std::move(d.blocks[order[pos]]));
  }
  d.blocks = std::move(sorted);
  if (d.resolution) {
    for (auto &cls : d.resolution->classes) {
      for (auto &bi : cls) {
        if (bi < 0 || bi >= static_cast<int>(new_index.size()))
          throw ParameterError("resolution refers to block " + std::to_string(bi) +
                               " which does not exist");
        bi = new_index[bi];
      }
      std::sort(cls.begin(), cls.end());
    }
  }
}

// Builds a canonical design from raw blocks. `classes`, when present, hold
// indices into `blocks` as given (before canonical sorting).
inline Design make_design(int v, int k, int lambda, std::vector<Block> blocks,
                          std::optional<std::vector<std::vector<int>>> classes = std::nullopt) {
  check_design_parameters(v, k, lambda);
  Design d;
  d.v = v;
  d.k = k;
  d.lambda = lambda;
  d.blocks = std::move(blocks);
  if (classes)
    d.resolution = Resolution{std::move(*classes)};
  canonicalize(d);
  return d;
}

struct DesignReport {
  bool ok = false;
  int b = 0;
  // Common replication number, or -1 when points disagree.
  int r = -1;
  // coverage count -> number of point pairs covered that many times
  std::map<int, long long> pair_histogram;
  // pairs whose coverage differs from lambda (at most max_listed)
  std::vector<std::pair<int, int>> violating_pairs;
  long long violating_pair_count = 0;
  std::vector<std::string> problems;
  bool resolution_ok = true;
};

// Problems with an attached resolution; empty when it is valid.
inline std::vector<std::string> check_resolution(const Design &d) {
  std::vector<std::string> problems;
  if (!d.resolution)
    return problems;
  const auto &classes = d.resolution->classes;
  std::vector<int> seen(d.blocks.size(), 0);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    std::vector<int> hits(d.v, 0);
    for (int bi : classes[c]) {
      if (bi < 0 || bi >= d.b()) {
        problems.push_back("class " + std::to_string(c) + " names missing block " +
                           std::to_string(bi));
        continue;
      }
      ++seen[bi];
      for (int p : d.blocks[bi])
        if (p >= 0 && p < d.v)
          ++hits[p];
    }
    for (int p = 0; p < d.v; ++p)
      if (hits[p] != 1) {
        problems.push_back("class " + std::to_string(c) + " covers point " + std::to_string(p) +
                           " " + std::to_string(hits[p]) + " times");
        break;
      }
  }
  for (int bi = 0; bi < d.b(); ++bi)
    if (seen[bi] != 1) {
      problems.push_back("block " + std::to_string(bi) + " appears in " +
                         std::to_string(seen[bi]) + " classes");
      break;
    }
  if (d.k > 1 && static_cast<int>(classes.size()) != d.r())
    problems.push_back("resolution has " + std::to_string(classes.size()) + " classes, expected " +
                       std::to_string(d.r()));
  return problems;
}

// Full pair-coverage check. Never throws; all failures land in the report.
inline DesignReport verify_design(const Design &d, std::size_t max_listed = 64) {
  DesignReport rep;
  rep.b = d.b();
  if (d.v < 2 || d.k < 2) {
    rep.problems.push_back("degenerate parameters");
    return rep;
  }
  std::vector<int> replication(d.v, 0);
  std::vector<int> cover(static_cast<std::size_t>(d.v) * d.v, 0);
  bool blocks_ok = true;
  for (std::size_t bi = 0; bi < d.blocks.size(); ++bi) {
    const auto &blk = d.blocks[bi];
    if (static_cast<int>(blk.size()) != d.k) {
      rep.problems.push_back("block " + std::to_string(bi) + " has size " +
                             std::to_string(blk.size()));
      blocks_ok = false;
    }
    bool in_range = true;
    for (std::size_t i = 0; i < blk.size(); ++i) {
      if (blk[i] < 0 || blk[i] >= d.v)
        in_range = false;
      if (i > 0 && blk[i] <= blk[i - 1]) {
        rep.problems.push_back("block " + std::to_string(bi) + " is not strictly increasing");
        blocks_ok = false;
      }
    }
    if (!in_range) {
      rep.problems.push_back("block " + std::to_string(bi) + " has a point out of range");
      blocks_ok = false;
      continue;
    }
    for (std::size_t i = 0; i < blk.size(); ++i) {
      ++replication[blk[i]];
      for (std::size_t j = i + 1; j < blk.size(); ++j) {
        int a = std::min(blk[i], blk[j]), c = std::max(blk[i], blk[j]);
        ++cover[static_cast<std::size_t>(a) * d.v + c];
      }
    }
  }
  if (!std::is_sorted(d.blocks.begin(), d.blocks.end())) {
    rep.problems.push_back("block list is not in canonical order");
    blocks_ok = false;
  }
  if (d.lambda == 1 && std::adjacent_find(d.blocks.begin(), d.blocks.end()) != d.blocks.end()) {
    rep.problems.push_back("duplicate block");
    blocks_ok = false;
  }

  for (int a = 0; a < d.v; ++a)
    for (int c = a + 1; c < d.v; ++c) {
      int n = cover[static_cast<std::size_t>(a) * d.v + c];
      ++rep.pair_histogram[n];
      if (n != d.lambda) {
        ++rep.violating_pair_count;
        if (rep.violating_pairs.size() < max_listed)
          rep.violating_pairs.emplace_back(a, c);
      }
    }

  rep.r = replication[0];
  for (int p = 1; p < d.v; ++p)
    if (replication[p] != rep.r) {
      rep.r = -1;
      break;
    }

  bool counts_ok = (d.lambda * (d.v - 1)) % (d.k - 1) == 0 &&
                   rep.b == expected_block_count(d.v, d.k, d.lambda) && rep.r == d.r();
  if (!counts_ok)
    rep.problems.push_back("block or replication count mismatch");

  auto res_problems = check_resolution(d);
  rep.resolution_ok = res_problems.empty();
  rep.problems.insert(rep.problems.end(), res_problems.begin(), res_problems.end());

  rep.ok = blocks_ok && counts_ok && rep.violating_pair_count == 0 && rep.resolution_ok;
  return rep;
}

inline bool is_symmetric(const Design &d) { return d.b() == d.v; }

// Every constructor funnels through here: a construction that does not
// verify is a bug, not a user error.
inline Design verified(Design d) {
  auto rep = verify_design(d);
  if (!rep.ok) {
    std::string msg = "internal construction produced an invalid design";
    if (!rep.problems.empty())
      msg += ": " + rep.problems.front();
    throw std::logic_error(msg);
  }
  return d;
}

} // namespace silverbig

#endif
