#ifndef SILVERBIG_CONSTRUCTIONS_HPP
#define SILVERBIG_CONSTRUCTIONS_HPP

#include <algorithm>
#include <array>
#include <string>
#include <utility>
#include <vector>

#include "coloring.hpp"
#include "common.hpp"
#include "design.hpp"
#include "field.hpp"

namespace silverbig {

enum class StsVariant { bose, skolem, cyclic13, noncyclic13, kirkman15 };

namespace detail {

// Bose: v = 6n+3, points (x, i) in Z_{2n+1} x Z_3 coded i*(2n+1) + x, with
// the idempotent commutative quasigroup x.y = (n+1)(x+y) mod 2n+1.
inline Design bose_sts(int v) {
  const int n = (v - 3) / 6, m = 2 * n + 1;
  auto pt = [m](int x, int i) { return (i % 3) * m + x; };
  std::vector<Block> blocks;
  for (int x = 0; x < m; ++x)
    blocks.push_back({pt(x, 0), pt(x, 1), pt(x, 2)});
  for (int x = 0; x < m; ++x)
    for (int y = x + 1; y < m; ++y) {
      int xy = ((n + 1) * (x + y)) % m;
      for (int i = 0; i < 3; ++i)
        blocks.push_back({pt(x, i), pt(y, i), pt(xy, i + 1)});
    }
  return make_design(v, 3, 1, std::move(blocks));
}

// Skolem: v = 6n+1, points (x, i) in Z_{2n} x Z_3 coded i*2n + x plus the
// point infinity = v-1, using the half-idempotent commutative quasigroup
// x.y = s/2 for s = (x+y) mod 2n even, (s-1)/2 + n for s odd.
inline Design skolem_sts(int v) {
  const int n = (v - 1) / 6, m = 2 * n, inf = v - 1;
  auto pt = [m](int x, int i) { return (i % 3) * m + x; };
  auto op = [n, m](int x, int y) {
    int s = (x + y) % m;
    return s % 2 == 0 ? s / 2 : (s - 1) / 2 + n;
  };
  std::vector<Block> blocks;
  for (int x = 0; x < n; ++x)
    blocks.push_back({pt(x, 0), pt(x, 1), pt(x, 2)});
  for (int x = 0; x < n; ++x)
    for (int i = 0; i < 3; ++i)
      blocks.push_back({inf, pt(x + n, i), pt(x, i + 1)});
  for (int x = 0; x < m; ++x)
    for (int y = x + 1; y < m; ++y)
      for (int i = 0; i < 3; ++i)
        blocks.push_back({pt(x, i), pt(y, i), pt(op(x, y), i + 1)});
  return make_design(v, 3, 1, std::move(blocks));
}

// Develops base blocks {1,2,5}, {1,3,8} (labels 1..13) mod 13; 0-based
// these are {0,1,4} and {0,2,7}.
inline std::vector<Block> cyclic13_blocks() {
  std::vector<Block> blocks;
  for (const Block &base : {Block{0, 1, 4}, Block{0, 2, 7}})
    for (int t = 0; t < 13; ++t) {
      Block blk;
      for (int p : base)
        blk.push_back((p + t) % 13);
      std::sort(blk.begin(), blk.end());
      blocks.push_back(blk);
    }
  return blocks;
}

// Trade T1 (inside the cyclic system) and its replacement T2, relabelled
// from 1..13 to 0..12.
inline const std::vector<Block> &trade_t1() {
  static const std::vector<Block> t{{0, 1, 4}, {0, 2, 7}, {1, 7, 9}, {2, 4, 9}};
  return t;
}

inline const std::vector<Block> &trade_t2() {
  static const std::vector<Block> t{{0, 1, 7}, {0, 2, 4}, {1, 4, 9}, {2, 7, 9}};
  return t;
}

// A fixed KTS(15): the lines of PG(3,2) (points = nonzero vectors of
// GF(2)^4 minus one), grouped into seven spreads.
inline const std::vector<std::vector<Block>> &kirkman15_classes() {
  static const std::vector<std::vector<Block>> classes{
      {{0, 1, 2}, {3, 7, 11}, {4, 9, 14}, {5, 10, 12}, {6, 8, 13}},
      {{0, 3, 4}, {1, 7, 9}, {2, 12, 13}, {5, 8, 14}, {6, 10, 11}},
      {{0, 5, 6}, {1, 8, 10}, {2, 11, 14}, {3, 9, 13}, {4, 7, 12}},
      {{0, 7, 8}, {1, 11, 13}, {2, 4, 5}, {3, 10, 14}, {6, 9, 12}},
      {{0, 9, 10}, {1, 12, 14}, {2, 3, 6}, {4, 8, 11}, {5, 7, 13}},
      {{0, 11, 12}, {1, 3, 5}, {2, 8, 9}, {4, 10, 13}, {6, 7, 14}},
      {{0, 13, 14}, {1, 4, 6}, {2, 7, 10}, {3, 8, 12}, {5, 9, 11}},
  };
  return classes;
}

inline Design kirkman15() {
  std::vector<Block> blocks;
  std::vector<std::vector<int>> classes;
  for (const auto &cls : kirkman15_classes()) {
    classes.emplace_back();
    for (const auto &blk : cls) {
      classes.back().push_back(static_cast<int>(blocks.size()));
      blocks.push_back(blk);
    }
  }
  return make_design(15, 3, 1, std::move(blocks), std::move(classes));
}

} // namespace detail

// Steiner triple systems. Point labels 1..v of the classical descriptions
// are shifted to 0..v-1.
inline Design make_sts(int v, StsVariant variant) {
  switch (variant) {
  case StsVariant::bose:
    if (v < 9 || v % 6 != 3)
      throw ParameterError("Bose construction needs v = 3 (mod 6), v >= 9");
    return verified(detail::bose_sts(v));
  case StsVariant::skolem:
    if (v < 7 || v % 6 != 1)
      throw ParameterError("Skolem construction needs v = 1 (mod 6), v >= 7");
    return verified(detail::skolem_sts(v));
  case StsVariant::cyclic13:
  case StsVariant::noncyclic13: {
    if (v != 13)
      throw ParameterError("the STS(13) variants need v = 13");
    auto blocks = detail::cyclic13_blocks();
    if (variant == StsVariant::noncyclic13) {
      std::erase_if(blocks, [](const Block &b) {
        return std::find(detail::trade_t1().begin(), detail::trade_t1().end(), b) !=
               detail::trade_t1().end();
      });
      blocks.insert(blocks.end(), detail::trade_t2().begin(), detail::trade_t2().end());
    }
    return verified(make_design(13, 3, 1, std::move(blocks)));
  }
  case StsVariant::kirkman15:
    if (v != 15)
      throw ParameterError("the embedded Kirkman system needs v = 15");
    return verified(detail::kirkman15());
  }
  throw ParameterError("unknown STS variant");
}

inline bool plane_order_supported(int n) { return n >= 2 && n <= 9 && GaloisField::supported(n); }

// AG(2,n): point (x, y) coded x*n + y, with x the first and y the second
// coordinate (labels (i, j), 1 <= i, j <= n, shift to (i-1, j-1)).
// Classes in order: 0 = lines y = c (constant second coordinate), 1 = lines
// x = c, then for each nonzero slope m in field-code order the lines
// y = m*x + c. Blocks within a class are listed in canonical order.
inline Design make_affine_plane(int n) {
  if (!plane_order_supported(n))
    throw ParameterError("no affine plane of order " + std::to_string(n) + " available");
  GaloisField f(n);
  std::vector<Block> blocks;
  std::vector<std::vector<int>> classes(n + 1);
  auto emit = [&](int cls, Block blk) {
    classes[cls].push_back(static_cast<int>(blocks.size()));
    blocks.push_back(std::move(blk));
  };
  for (int c = 0; c < n; ++c) {
    Block blk;
    for (int x = 0; x < n; ++x)
      blk.push_back(x * n + c);
    emit(0, blk);
  }
  for (int c = 0; c < n; ++c) {
    Block blk;
    for (int y = 0; y < n; ++y)
      blk.push_back(c * n + y);
    emit(1, blk);
  }
  for (int m = 1; m < n; ++m)
    for (int c = 0; c < n; ++c) {
      Block blk;
      for (int x = 0; x < n; ++x)
        blk.push_back(x * n + f.add(f.mul(m, x), c));
      emit(1 + m, blk);
    }
  return verified(make_design(n * n, n, 1, std::move(blocks), std::move(classes)));
}

// PG(2,n): points and lines are the normalised nonzero vectors of GF(n)^3
// (first nonzero coordinate 1), enumerated (1,a,b), (0,1,a), (0,0,1); a point
// lies on a line when their dot product vanishes.
inline Design make_projective_plane(int n) {
  if (!plane_order_supported(n) || n > 8)
    throw ParameterError("no projective plane of order " + std::to_string(n) + " available");
  GaloisField f(n);
  std::vector<std::array<int, 3>> vecs;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      vecs.push_back({1, a, b});
  for (int a = 0; a < n; ++a)
    vecs.push_back({0, 1, a});
  vecs.push_back({0, 0, 1});
  const int v = static_cast<int>(vecs.size());
  std::vector<Block> blocks;
  for (const auto &line : vecs) {
    Block blk;
    for (int p = 0; p < v; ++p) {
      int dot = 0;
      for (int i = 0; i < 3; ++i)
        dot = f.add(dot, f.mul(line[i], vecs[p][i]));
      if (dot == 0)
        blk.push_back(p);
    }
    blocks.push_back(std::move(blk));
  }
  return verified(make_design(v, n + 1, 1, std::move(blocks)));
}

// Points of {0..layers-1} x {0..base-1} coded layer*base + s.
struct PointMap {
  int layers = 0;
  int base = 0;

  int encode(int layer, int s) const { return layer * base + s; }
  std::pair<int, int> decode(int p) const { return {p / base, p % base}; }
};

// Meaning of a product color id: id 0 has a_block = -1; every other id is
// the pair (block of the affine plane outside class 0, 1-based class index
// of the input design).
struct ColorLabel {
  int a_block = -1;
  int beta = 0;
};

struct ProductOutput {
  Design design;
  Coloring coloring;
  std::vector<int> alpha_set;
  PointMap point_map;
  std::vector<ColorLabel> color_legend;
};

// Order k of an affine plane whose class 0 is the lines of constant second
// coordinate (as produced by make_affine_plane); throws otherwise.
inline int checked_affine_order(const Design &a) {
  int k = a.k;
  if (a.lambda != 1 || a.v != k * k || a.b() != k * k + k)
    throw ParameterError("first factor is not an affine plane");
  if (!a.resolution || static_cast<int>(a.resolution->classes.size()) != k + 1)
    throw ParameterError("affine plane needs its resolution into k+1 classes");
  if (!verify_design(a).ok)
    throw ParameterError("affine plane fails verification");
  std::vector<Block> theta0;
  for (int bi : a.resolution->classes[0])
    theta0.push_back(a.blocks[bi]);
  for (int j = 0; j < k; ++j) {
    Block line;
    for (int i = 0; i < k; ++i)
      line.push_back(i * k + j);
    if (std::find(theta0.begin(), theta0.end(), line) == theta0.end())
      throw ParameterError("class 0 of the affine plane must be the lines of constant second coordinate");
  }
  return k;
}

// From AG(2,k) and an RBIBD(v,k,1) builds an RBIBD(kv,k,1) together with a
// silver coloring of its 1-intersection graph. Block b = {x_s1 < ... < x_sk}
// of the input design maps plane point (i, j) to (i, x_sj); the images of the
// class-0 lines collapse to the v "vertical" blocks {(i, x_s) : i}, which form
// the alpha-set and get color 0. Every other image of plane block a under a
// block of input class beta gets its own color (a, beta).
inline ProductOutput product_design(const Design &plane, const Design &d) {
  const int k = checked_affine_order(plane);
  if (d.k != k)
    throw ParameterError("block sizes differ: plane has " + std::to_string(k) + ", design has " +
                         std::to_string(d.k));
  if (d.lambda != 1 || !d.resolution)
    throw ParameterError("second factor must be a resolvable design with lambda = 1");
  if (!verify_design(d).ok)
    throw ParameterError("second factor fails verification");

  const int v = d.v;
  const PointMap pm{k, v};
  const auto &theta = plane.resolution->classes;
  std::vector<char> in_theta0(plane.b(), 0);
  for (int bi : theta[0])
    in_theta0[bi] = 1;
  std::vector<int> rank(plane.b(), -1);
  int nonzero = 0;
  for (int bi = 0; bi < plane.b(); ++bi)
    if (!in_theta0[bi])
      rank[bi] = nonzero++;
  const int num_classes = static_cast<int>(d.resolution->classes.size());

  std::vector<Block> blocks;
  std::vector<int> raw_color;
  std::vector<std::vector<int>> classes;

  classes.emplace_back();
  for (int s = 0; s < v; ++s) {
    Block blk;
    for (int layer = 0; layer < k; ++layer)
      blk.push_back(pm.encode(layer, s));
    classes[0].push_back(static_cast<int>(blocks.size()));
    blocks.push_back(std::move(blk));
    raw_color.push_back(0);
  }

  auto psi = [&](const Block &db, const Block &pa) {
    Block out;
    for (int p : pa) {
      int i = p / k, j = p % k;
      out.push_back(pm.encode(i, db[j]));
    }
    std::sort(out.begin(), out.end());
    return out;
  };

  for (int alpha = 1; alpha <= k; ++alpha)
    for (int beta = 0; beta < num_classes; ++beta) {
      classes.emplace_back();
      for (int db : d.resolution->classes[beta])
        for (int pa : theta[alpha]) {
          classes.back().push_back(static_cast<int>(blocks.size()));
          blocks.push_back(psi(d.blocks[db], plane.blocks[pa]));
          raw_color.push_back(1 + beta * nonzero + rank[pa]);
        }
    }

  ProductOutput out;
  out.point_map = pm;
  out.design = verified(make_design(k * v, k, 1, blocks, std::move(classes)));
  const int num_colors = 1 + nonzero * num_classes;
  out.coloring.num_colors = num_colors;
  out.coloring.colors.assign(out.design.b(), -1);
  for (std::size_t raw = 0; raw < blocks.size(); ++raw) {
    auto it = std::lower_bound(out.design.blocks.begin(), out.design.blocks.end(), blocks[raw]);
    int idx = static_cast<int>(it - out.design.blocks.begin());
    out.coloring.colors[idx] = raw_color[raw];
    if (raw < static_cast<std::size_t>(v))
      out.alpha_set.push_back(idx);
  }
  std::sort(out.alpha_set.begin(), out.alpha_set.end());
  out.color_legend.assign(num_colors, ColorLabel{});
  for (int pa = 0; pa < plane.b(); ++pa)
    if (rank[pa] >= 0)
      for (int beta = 0; beta < num_classes; ++beta)
        out.color_legend[1 + beta * nonzero + rank[pa]] = ColorLabel{pa, beta + 1};
  return out;
}

// KTS(v) with its resolution: 9 is AG(2,3), 15 is embedded, and v = 3w with
// w = 3 (mod 6) comes from the product of AG(2,3) with KTS(w).
inline Design make_kts(int v) {
  if (v == 9)
    return make_affine_plane(3);
  if (v == 15)
    return make_sts(15, StsVariant::kirkman15);
  if (v > 15 && v % 3 == 0 && (v / 3) % 6 == 3)
    return product_design(make_affine_plane(3), make_kts(v / 3)).design;
  throw ParameterError("no Kirkman construction for v = " + std::to_string(v));
}

} // namespace silverbig

#endif
