#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "silverbig.hpp"

using namespace silverbig;

namespace {

bool has_block(const Design &d, Block b) {
  return std::binary_search(d.blocks.begin(), d.blocks.end(), b);
}

// Pair coverage recomputed from scratch, independent of verify_design.
bool covers_every_pair_once(const Design &d) {
  std::vector<std::vector<int>> cnt(d.v, std::vector<int>(d.v, 0));
  for (const auto &blk : d.blocks)
    for (std::size_t i = 0; i < blk.size(); ++i)
      for (std::size_t j = i + 1; j < blk.size(); ++j)
        ++cnt[blk[i]][blk[j]];
  for (int x = 0; x < d.v; ++x)
    for (int y = x + 1; y < d.v; ++y)
      if (cnt[x][y] != d.lambda)
        return false;
  return true;
}

std::vector<Design> small_designs() {
  std::vector<Design> out;
  for (int v : {9, 15, 21, 27})
    out.push_back(make_sts(v, StsVariant::bose));
  for (int v : {7, 13, 19, 25})
    out.push_back(make_sts(v, StsVariant::skolem));
  out.push_back(make_sts(13, StsVariant::cyclic13));
  out.push_back(make_sts(13, StsVariant::noncyclic13));
  out.push_back(make_sts(15, StsVariant::kirkman15));
  for (int n : {2, 3, 4, 5, 7, 8, 9})
    out.push_back(make_affine_plane(n));
  for (int n : {2, 3, 4, 5, 7, 8})
    out.push_back(make_projective_plane(n));
  for (int v : {9, 15, 27, 45})
    out.push_back(make_kts(v));
  return out;
}

} // namespace

TEST(Sts, Cyclic13ContainsBaseBlocks) {
  auto d = make_sts(13, StsVariant::cyclic13);
  EXPECT_EQ(d.b(), 26);
  EXPECT_TRUE(has_block(d, {0, 1, 4}));
  EXPECT_TRUE(has_block(d, {0, 2, 7}));
}

TEST(Sts, Noncyclic13ContainsTradeBlocks) {
  auto d = make_sts(13, StsVariant::noncyclic13);
  for (Block b : {Block{0, 1, 7}, Block{0, 2, 4}, Block{1, 4, 9}, Block{2, 7, 9}})
    EXPECT_TRUE(has_block(d, b));
  for (Block b : {Block{0, 1, 4}, Block{0, 2, 7}, Block{1, 7, 9}, Block{2, 4, 9}})
    EXPECT_FALSE(has_block(d, b));
}

TEST(Sts, VariantsDifferInFourBlocks) {
  auto a = make_sts(13, StsVariant::cyclic13);
  auto b = make_sts(13, StsVariant::noncyclic13);
  std::vector<Block> only_a;
  std::set_difference(a.blocks.begin(), a.blocks.end(), b.blocks.begin(), b.blocks.end(),
                      std::back_inserter(only_a));
  EXPECT_EQ(only_a.size(), 4u);
}

TEST(Sts, Bose9) {
  auto d = make_sts(9, StsVariant::bose);
  EXPECT_EQ(d.b(), 12);
  EXPECT_EQ(d.r(), 4);
}

TEST(Sts, ResidueErrors) {
  EXPECT_THROW(make_sts(13, StsVariant::bose), ParameterError);
  EXPECT_THROW(make_sts(9, StsVariant::skolem), ParameterError);
  EXPECT_THROW(make_sts(19, StsVariant::cyclic13), ParameterError);
  EXPECT_THROW(make_sts(13, StsVariant::kirkman15), ParameterError);
}

TEST(Kts, Kirkman15HasSevenClasses) {
  auto d = make_sts(15, StsVariant::kirkman15);
  ASSERT_TRUE(d.resolution);
  EXPECT_EQ(d.resolution->classes.size(), 7u);
  EXPECT_TRUE(check_resolution(d).empty());
}

TEST(Kts, Sizes) {
  auto k9 = make_kts(9);
  EXPECT_EQ(k9.b(), 12);
  EXPECT_EQ(k9.resolution->classes.size(), 4u);
  auto k27 = make_kts(27);
  EXPECT_EQ(k27.b(), 117);
  ASSERT_EQ(k27.resolution->classes.size(), 13u);
  for (const auto &cls : k27.resolution->classes)
    EXPECT_EQ(cls.size(), 9u);
  auto k45 = make_kts(45);
  EXPECT_EQ(k45.b(), 330);
  EXPECT_EQ(k45.resolution->classes.size(), 22u);
  EXPECT_TRUE(verify_design(k45).ok);
  EXPECT_THROW(make_kts(21), ParameterError);
  EXPECT_THROW(make_kts(33), ParameterError);
}

TEST(Planes, Affine3ClassesMatchCoordinates) {
  auto d = make_affine_plane(3);
  ASSERT_TRUE(d.resolution);
  ASSERT_EQ(d.resolution->classes.size(), 4u);
  // class 0: constant second coordinate, point (x,y) -> 3x+y
  std::set<Block> theta0;
  for (int bi : d.resolution->classes[0])
    theta0.insert(d.blocks[bi]);
  EXPECT_EQ(theta0, (std::set<Block>{{0, 3, 6}, {1, 4, 7}, {2, 5, 8}}));
  std::set<Block> theta1;
  for (int bi : d.resolution->classes[1])
    theta1.insert(d.blocks[bi]);
  EXPECT_EQ(theta1, (std::set<Block>{{0, 1, 2}, {3, 4, 5}, {6, 7, 8}}));
}

TEST(Planes, Affine2) {
  auto d = make_affine_plane(2);
  EXPECT_EQ(d.v, 4);
  EXPECT_EQ(d.b(), 6);
  EXPECT_EQ(d.resolution->classes.size(), 3u);
}

TEST(Planes, Affine4) {
  auto d = make_affine_plane(4);
  auto rep = verify_design(d);
  EXPECT_TRUE(rep.ok);
  EXPECT_EQ(rep.b, 20);
  EXPECT_EQ(rep.r, 5);
}

TEST(Planes, ProjectiveLinesMeetOnce) {
  for (int n : {2, 3, 4, 5}) {
    auto d = make_projective_plane(n);
    EXPECT_EQ(d.b(), n * n + n + 1);
    EXPECT_EQ(d.k, n + 1);
    for (int a = 0; a < d.b(); ++a)
      for (int b = a + 1; b < d.b(); ++b) {
        std::vector<int> common;
        std::set_intersection(d.blocks[a].begin(), d.blocks[a].end(), d.blocks[b].begin(),
                              d.blocks[b].end(), std::back_inserter(common));
        EXPECT_EQ(common.size(), 1u);
      }
  }
}

TEST(Planes, UnsupportedOrders) {
  EXPECT_THROW(make_affine_plane(6), ParameterError);
  EXPECT_THROW(make_affine_plane(10), ParameterError);
  EXPECT_THROW(make_projective_plane(9), ParameterError);
  EXPECT_THROW(make_projective_plane(1), ParameterError);
}

TEST(Verify, DeletedBlockLeavesThreePairsUncovered) {
  auto d = make_sts(13, StsVariant::cyclic13);
  d.blocks.erase(d.blocks.begin() + 5);
  auto rep = verify_design(d);
  EXPECT_FALSE(rep.ok);
  EXPECT_EQ(rep.pair_histogram[0], 3);
  EXPECT_EQ(rep.violating_pair_count, 3);
}

TEST(Verify, Kts27) {
  auto rep = verify_design(make_kts(27));
  EXPECT_TRUE(rep.ok);
  EXPECT_EQ(rep.b, 117);
}

TEST(Verify, BrokenResolutionDetected) {
  auto d = make_affine_plane(3);
  std::swap(d.resolution->classes[0][0], d.resolution->classes[1][0]);
  EXPECT_FALSE(check_resolution(d).empty());
  EXPECT_FALSE(verify_design(d).ok);
}

TEST(DesignProperty, EveryConstructionVerifies) {
  for (const auto &d : small_designs()) {
    SCOPED_TRACE("v=" + std::to_string(d.v) + " k=" + std::to_string(d.k));
    EXPECT_TRUE(verify_design(d).ok);
    EXPECT_TRUE(covers_every_pair_once(d));
    EXPECT_EQ(d.b(), expected_block_count(d.v, d.k, 1));
    EXPECT_TRUE(std::is_sorted(d.blocks.begin(), d.blocks.end()));
    if (d.resolution) {
      EXPECT_EQ(static_cast<int>(d.resolution->classes.size()), d.r());
      for (const auto &cls : d.resolution->classes)
        EXPECT_TRUE(is_parallel_class(d, cls, false));
    }
  }
}

TEST(Product, Kts27Shape) {
  auto out = product_design(make_affine_plane(3), make_kts(9));
  EXPECT_EQ(out.design.b(), 117);
  EXPECT_EQ(out.coloring.num_colors, 37);
  EXPECT_EQ(out.alpha_set.size(), 9u);
  for (int p = 0; p < 27; ++p) {
    auto [l, s] = out.point_map.decode(p);
    EXPECT_EQ(out.point_map.encode(l, s), p);
  }
}

TEST(Product, Kts45Classes) {
  auto out = product_design(make_affine_plane(3), make_kts(15));
  ASSERT_TRUE(out.design.resolution);
  EXPECT_EQ(out.design.resolution->classes.size(), 22u);
  for (const auto &cls : out.design.resolution->classes)
    EXPECT_EQ(cls.size(), 15u);
}

TEST(Product, RejectsBadInputs) {
  EXPECT_THROW(product_design(make_affine_plane(3), make_sts(13, StsVariant::cyclic13)),
               ParameterError);
  EXPECT_THROW(product_design(make_affine_plane(4), make_kts(9)), ParameterError);
  EXPECT_THROW(product_design(make_projective_plane(2), make_kts(9)), ParameterError);
}

// Design-level properness and rainbow property, checked on the blocks.
TEST(ProductProperty, ColorClassesDisjointAndAlphaBlocksSeeEveryColor) {
  struct Case {
    int plane;
    Design d;
  };
  std::vector<Case> cases{{3, make_kts(9)}, {3, make_kts(15)}, {4, make_affine_plane(4)}};
  for (const auto &[k, d] : cases) {
    auto out = product_design(make_affine_plane(k), d);
    const auto &D = out.design;
    const int v = d.v;
    EXPECT_EQ(D.b(), v * (k * v - 1) / (k - 1));
    EXPECT_EQ(out.coloring.num_colors, 1 + k * k * (v - 1) / (k - 1));
    auto meet = [&](int a, int b) {
      std::vector<int> c;
      std::set_intersection(D.blocks[a].begin(), D.blocks[a].end(), D.blocks[b].begin(),
                            D.blocks[b].end(), std::back_inserter(c));
      return c.size();
    };
    for (int a = 0; a < D.b(); ++a)
      for (int b = a + 1; b < D.b(); ++b)
        if (out.coloring.colors[a] == out.coloring.colors[b]) {
          ASSERT_EQ(meet(a, b), 0u);
        }
    for (int x : out.alpha_set) {
      std::vector<int> hits(out.coloring.num_colors, 0);
      for (int u = 0; u < D.b(); ++u)
        if (u != x && meet(x, u) == 1)
          ++hits[out.coloring.colors[u]];
      for (int c = 1; c < out.coloring.num_colors; ++c)
        EXPECT_EQ(hits[c], 1);
    }
    // divisibility necessary for a silver 1-BIG with a parallel class
    EXPECT_EQ(D.v % (k * k), 0);
  }
}

TEST(ParallelClass, Sts9Full) {
  auto d = make_sts(9, StsVariant::bose);
  auto r = find_parallel_class(d, ClassMode::full);
  ASSERT_EQ(r.status, SearchStatus::found);
  EXPECT_EQ(r.blocks.size(), 3u);
  EXPECT_TRUE(is_parallel_class(d, r.blocks, false));
}

TEST(ParallelClass, Sts13) {
  auto d = make_sts(13, StsVariant::cyclic13);
  EXPECT_EQ(find_parallel_class(d, ClassMode::full).status, SearchStatus::none);
  auto r = find_parallel_class(d, ClassMode::near);
  ASSERT_EQ(r.status, SearchStatus::found);
  EXPECT_EQ(r.blocks.size(), 4u);
  int missing = -1;
  EXPECT_TRUE(is_parallel_class(d, r.blocks, true, &missing));
  EXPECT_EQ(missing, r.missed_point);
}

TEST(ParallelClass, BudgetExhaustionIsUnknown) {
  auto d = make_kts(45);
  auto r = find_parallel_class(d, ClassMode::full, 3);
  EXPECT_EQ(r.status, SearchStatus::unknown);
}

TEST(Field, InversesAndDistributivity) {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    GaloisField f(q);
    for (int a = 1; a < q; ++a)
      EXPECT_EQ(f.mul(a, f.inv(a)), 1);
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b)
        for (int c = 0; c < q; ++c)
          ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
  }
  EXPECT_THROW(GaloisField(6), ParameterError);
}
