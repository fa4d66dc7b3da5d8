#ifndef SILVERBIG_SILVER_HPP
#define SILVERBIG_SILVER_HPP

#include <optional>
#include <string>
#include <vector>

#include "big.hpp"
#include "certificate.hpp"
#include "coloring.hpp"
#include "common.hpp"
#include "design.hpp"
#include "independence.hpp"
#include "parallel_class.hpp"

namespace silverbig {

enum class Outcome { silver, not_silver, unknown };

enum class Reason {
  none,
  theorem_forallk,
  theorem_lowerbound,
  theorem_apc,
  theorem_g0_forallk,
  exhaustive_search,
  triple_certificate,
};

inline const char *to_string(Outcome o) {
  switch (o) {
  case Outcome::silver: return "Silver";
  case Outcome::not_silver: return "NotSilver";
  case Outcome::unknown: return "Unknown";
  }
  return "?";
}

inline const char *to_string(Reason r) {
  switch (r) {
  case Reason::none: return "none";
  case Reason::theorem_forallk: return "TheoremForallk";
  case Reason::theorem_lowerbound: return "TheoremLowerbound";
  case Reason::theorem_apc: return "TheoremAPC";
  case Reason::theorem_g0_forallk: return "TheoremG0Forallk";
  case Reason::exhaustive_search: return "ExhaustiveSearch";
  case Reason::triple_certificate: return "TripleCertificate";
  }
  return "?";
}

// How one alpha-set was ruled out: by a certificate when one exists,
// otherwise by a completed search.
struct AlphaSetRefutation {
  std::vector<int> alpha_set;
  std::optional<TripleCertificate> certificate;
};

struct Verdict {
  Outcome outcome = Outcome::unknown;
  Reason reason = Reason::none;
  // Silver: the coloring and the alpha-set it is silver for
  std::optional<Coloring> coloring;
  std::vector<int> alpha_set;
  // NotSilver by search: one entry per alpha-set
  std::vector<AlphaSetRefutation> refutations;
  std::string detail;
};

struct CanonicalSilver {
  Coloring coloring;
  std::vector<int> alpha_set;
};

namespace detail {

// Parallel classes of an affine plane (blocks are parallel iff disjoint or
// equal). Uses the attached resolution when it is valid.
inline std::vector<std::vector<int>> affine_classes(const Design &d) {
  if (d.resolution && check_resolution(d).empty())
    return d.resolution->classes;
  std::vector<int> cls(d.b(), -1);
  std::vector<std::vector<int>> out;
  for (int u = 0; u < d.b(); ++u) {
    if (cls[u] >= 0)
      continue;
    cls[u] = static_cast<int>(out.size());
    out.push_back({u});
    for (int w = u + 1; w < d.b(); ++w) {
      if (cls[w] >= 0)
        continue;
      bool disjoint = true;
      for (int p : d.blocks[w])
        disjoint = disjoint && !std::binary_search(d.blocks[u].begin(), d.blocks[u].end(), p);
      if (disjoint) {
        cls[w] = cls[u];
        out.back().push_back(w);
      }
    }
  }
  return out;
}

inline bool is_affine_plane(const Design &d) {
  return d.lambda == 1 && d.v == d.k * d.k && d.b() == d.k * d.k + d.k;
}

} // namespace detail

// Explicit silver colorings for the i-intersection graphs of symmetric
// designs and affine planes.
//  - symmetric: i = lambda gives a complete graph (all colors distinct,
//    alpha-set {0}); any other i gives an edgeless graph (color 0, alpha-set
//    all blocks).
//  - AG(2,n), i = 0: n+1 disjoint K_n, one per parallel class; the t-th block
//    of every class gets color t; alpha-set = first block of each class.
//  - AG(2,n), i = 1: complete multipartite with the classes as parts; part 0
//    shares color 0 and block t of part j >= 1 gets (j-1)*n + t + 1;
//    alpha-set = part 0.
//  - AG(2,n), i >= 2: edgeless.
// Everything else: nullopt.
inline std::optional<CanonicalSilver> construct_silver_canonical(const Design &d, int i) {
  if (i < 0 || i > d.k)
    throw ParameterError("intersection size out of range");
  const int b = d.b();
  auto all_vertices = [b] {
    std::vector<int> out(b);
    for (int u = 0; u < b; ++u)
      out[u] = u;
    return out;
  };
  CanonicalSilver out;
  if (is_symmetric(d)) {
    if (i == d.lambda) {
      out.coloring.num_colors = b;
      out.coloring.colors = all_vertices();
      out.alpha_set = {0};
    } else {
      out.coloring = Coloring{std::vector<int>(b, 0), 1};
      out.alpha_set = all_vertices();
    }
    return out;
  }
  if (!detail::is_affine_plane(d))
    return std::nullopt;
  const int n = d.k;
  const auto classes = detail::affine_classes(d);
  if (static_cast<int>(classes.size()) != n + 1)
    return std::nullopt;
  out.coloring.colors.assign(b, 0);
  if (i == 0) {
    out.coloring.num_colors = n;
    for (const auto &cls : classes) {
      for (std::size_t t = 0; t < cls.size(); ++t)
        out.coloring.colors[cls[t]] = static_cast<int>(t);
      out.alpha_set.push_back(cls.front());
    }
    std::sort(out.alpha_set.begin(), out.alpha_set.end());
  } else if (i == 1) {
    out.coloring.num_colors = n * n + 1;
    for (std::size_t j = 1; j < classes.size(); ++j)
      for (std::size_t t = 0; t < classes[j].size(); ++t)
        out.coloring.colors[classes[j][t]] = static_cast<int>((j - 1) * n + t + 1);
    out.alpha_set = classes[0];
  } else {
    out.coloring.num_colors = 1;
    out.alpha_set = all_vertices();
  }
  return out;
}

// Structural facts fed to screen(). Parallel classes are verified against
// the design; alpha is trusted but range-checked.
struct StructureFacts {
  std::optional<std::vector<int>> parallel_class;
  std::optional<std::vector<int>> near_parallel_class;
  std::optional<int> alpha;
};

// k * floor(v(v-1) / (k^2 v - k^3 + k^2 - k)): a silver 1-intersection graph
// cannot have independence number above this.
inline long long lowerbound_threshold(int v, int k) {
  const long long num = 1LL * v * (v - 1);
  const long long den = 1LL * k * k * v - 1LL * k * k * k + 1LL * k * k - k;
  return k * (num / den);
}

// All theorem-based NotSilver verdicts that apply. An empty list makes no
// claim either way.
inline std::vector<Verdict> screen(const Design &d, int i, const StructureFacts &facts) {
  if (i != 0 && i != 1)
    throw ParameterError("screens exist for i = 0 and i = 1 only");
  if (d.lambda != 1)
    throw ParameterError("screens need a Steiner design (lambda = 1)");
  const int v = d.v, k = d.k;
  if (facts.parallel_class && !is_parallel_class(d, *facts.parallel_class, false))
    throw ParameterError("supplied parallel class does not partition the points");
  if (facts.near_parallel_class && !is_parallel_class(d, *facts.near_parallel_class, true))
    throw ParameterError("supplied near parallel class does not miss exactly one point");
  if (facts.alpha) {
    const int a = *facts.alpha;
    if (i == 1) {
      if (a < 1 || a > v / k)
        throw ParameterError("alpha of the 1-intersection graph must lie in 1..floor(v/k)");
      if (facts.parallel_class && a != v / k)
        throw ParameterError("a parallel class forces alpha = v/k");
      if (facts.near_parallel_class && a != (v - 1) / k)
        throw ParameterError("a near parallel class forces alpha = (v-1)/k");
    } else if (a < (v - 1) / (k - 1)) {
      throw ParameterError("alpha of the 0-intersection graph is at least the pencil size");
    }
  }

  auto not_silver = [](Reason r, std::string detail) {
    Verdict out;
    out.outcome = Outcome::not_silver;
    out.reason = r;
    out.detail = std::move(detail);
    return out;
  };
  std::vector<Verdict> out;
  if (i == 1) {
    if (facts.parallel_class && v % (k * k) != 0)
      out.push_back(not_silver(Reason::theorem_forallk,
                               "parallel class present and k^2 = " + std::to_string(k * k) +
                                   " does not divide v = " + std::to_string(v)));
    if (facts.alpha && *facts.alpha > lowerbound_threshold(v, k))
      out.push_back(not_silver(Reason::theorem_lowerbound,
                               "alpha = " + std::to_string(*facts.alpha) + " exceeds bound " +
                                   std::to_string(lowerbound_threshold(v, k))));
    if (facts.near_parallel_class)
      out.push_back(not_silver(Reason::theorem_apc, "near parallel class present"));
  } else if (pencil_threshold_exceeded(v, k)) {
    out.push_back(not_silver(Reason::theorem_g0_forallk,
                             "v = " + std::to_string(v) + " > k^3-2k^2+2k = " +
                                 std::to_string(k * k * k - 2 * k * k + 2 * k)));
  }
  return out;
}

} // namespace silverbig

#endif
