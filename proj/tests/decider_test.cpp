#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "silverbig.hpp"

using namespace silverbig;

namespace {

DecideOptions no_break() {
  DecideOptions o;
  o.symmetry_breaking = false;
  return o;
}

Decision oracle_decision(const Graph &g, const std::vector<int> &I) {
  return oracle::has_silver_coloring(g, I, *g.regular_degree() + 1) ? Decision::sat
                                                                     : Decision::unsat;
}

// Small regular graphs with an alpha-set each: random regular graphs plus
// every i-BIG of at most 14 vertices from the constructions.
struct Instance {
  std::string name;
  Graph g;
  std::vector<int> alpha_set;
};

std::vector<Instance> small_instances() {
  std::vector<Instance> out;
  std::mt19937 rng(1234);
  for (int t = 0; t < 24; ++t) {
    const int n = 6 + t % 9;
    int r = 2 + t % 3;
    if (n * r % 2)
      ++r;
    auto g = oracle::random_regular(n, r, rng);
    auto mis = max_independent_set(g);
    out.push_back({"random" + std::to_string(t), g, mis.vertices});
  }
  std::vector<Design> designs{make_sts(7, StsVariant::skolem), make_sts(9, StsVariant::bose),
                              make_affine_plane(2), make_affine_plane(3),
                              make_projective_plane(2), make_projective_plane(3)};
  for (const auto &d : designs)
    for (int i = 0; i <= d.k; ++i) {
      auto g = build_big(d, i);
      if (g.order() > 14)
        continue;
      out.push_back({"big v=" + std::to_string(d.v) + " i=" + std::to_string(i), g,
                     max_independent_set(g).vertices});
    }
  return out;
}

} // namespace

TEST(Decide, EdgelessSts7) {
  auto g = build_big(make_sts(7, StsVariant::skolem), 0);
  auto r = decide_silver(g, {0, 1, 2, 3, 4, 5, 6});
  ASSERT_EQ(r.decision, Decision::sat);
  EXPECT_EQ(r.coloring->num_colors, 1);
}

TEST(Decide, Sts13PencilsUnsat) {
  for (auto variant : {StsVariant::cyclic13, StsVariant::noncyclic13}) {
    auto d = make_sts(13, variant);
    auto g = build_big(d, 0);
    for (int x = 0; x < 13; ++x)
      EXPECT_EQ(decide_silver(g, pencil(d, x)).decision, Decision::unsat);
  }
}

TEST(Decide, MultipartiteSat) {
  auto d = make_affine_plane(3);
  auto g = build_big(d, 1);
  auto r = decide_silver(g, d.resolution->classes[0]);
  ASSERT_EQ(r.decision, Decision::sat);
  EXPECT_TRUE(is_silver(g, *r.coloring, d.resolution->classes[0]));
}

TEST(Decide, TinyBudgetIsUnknown) {
  auto d = make_sts(13, StsVariant::cyclic13);
  DecideOptions o;
  o.budget = 5;
  EXPECT_EQ(decide_silver(build_big(d, 0), pencil(d, 0), o).decision, Decision::unknown);
}

TEST(Decide, Errors) {
  Graph path(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  EXPECT_THROW(decide_silver(path, {0, 2}), ParameterError);
  auto k4 = complete_graph(4);
  EXPECT_THROW(decide_silver(k4, {0, 1}), ParameterError);
  EXPECT_THROW(decide_silver(k4, {4}), ParameterError);
}

TEST(DecideAny, Sts9Silver) {
  auto g = build_big(make_sts(9, StsVariant::bose), 0);
  auto v = decide_silver_any(g);
  ASSERT_EQ(v.outcome, Outcome::silver);
  ASSERT_TRUE(v.coloring);
  EXPECT_TRUE(is_silver(g, *v.coloring, v.alpha_set, 4));
}

TEST(DecideAny, Sts13NotSilver) {
  for (auto variant : {StsVariant::cyclic13, StsVariant::noncyclic13}) {
    auto v = decide_silver_any(build_big(make_sts(13, variant), 0));
    EXPECT_EQ(v.outcome, Outcome::not_silver);
    EXPECT_EQ(v.reason, Reason::triple_certificate);
    EXPECT_EQ(v.refutations.size(), 13u);
  }
}

TEST(DecideAny, SmallBudgetUnknown) {
  auto v = decide_silver_any(build_big(make_sts(13, StsVariant::cyclic13), 1), 20);
  EXPECT_EQ(v.outcome, Outcome::unknown);
}

TEST(Certificate, Sts13PaperTriple) {
  auto d = make_sts(13, StsVariant::cyclic13);
  auto g = build_big(d, 0);
  auto idx = [&](Block b) {
    return static_cast<int>(std::lower_bound(d.blocks.begin(), d.blocks.end(), b) -
                            d.blocks.begin());
  };
  auto c = check_triple(g, idx({0, 1, 4}), idx({0, 2, 7}), idx({0, 9, 10}));
  ASSERT_TRUE(c);
  EXPECT_EQ(c->total, 12);
  EXPECT_EQ(c->num_colors, 11);
  EXPECT_TRUE(verify_certificate(g, pencil(d, 0), *c));
}

TEST(Certificate, EveryPencilOfBothVariants) {
  for (auto variant : {StsVariant::cyclic13, StsVariant::noncyclic13}) {
    auto d = make_sts(13, variant);
    auto g = build_big(d, 0);
    for (int x = 0; x < 13; ++x) {
      auto c = find_triple_certificate(g, pencil(d, x));
      ASSERT_TRUE(c) << "x=" << x;
      EXPECT_EQ(c->total, 12);
      EXPECT_TRUE(verify_certificate(g, pencil(d, x), *c));
    }
  }
}

TEST(Certificate, NoneOnDisjointTriangles) {
  auto g = build_big(make_sts(9, StsVariant::bose), 0);
  for (const auto &s : enumerate_alpha_sets(g, 4).sets)
    EXPECT_FALSE(find_triple_certificate(g, s));
}

TEST(Certificate, TamperedIsRejected) {
  auto d = make_sts(13, StsVariant::cyclic13);
  auto g = build_big(d, 0);
  auto c = *find_triple_certificate(g, pencil(d, 0));
  auto bad = c;
  bad.total = 13;
  EXPECT_FALSE(verify_certificate(g, pencil(d, 0), bad));
  bad = c;
  bad.pairwise_common[0].pop_back();
  EXPECT_FALSE(verify_certificate(g, pencil(d, 0), bad));
  auto without_b1 = pencil(d, 0);
  std::erase(without_b1, c.b1);
  EXPECT_FALSE(verify_certificate(g, without_b1, c));
}

TEST(DeciderProperty, AgreesWithBruteForceOracle) {
  for (const auto &inst : small_instances()) {
    SCOPED_TRACE(inst.name);
    auto r = decide_silver(inst.g, inst.alpha_set);
    ASSERT_NE(r.decision, Decision::unknown);
    EXPECT_EQ(r.decision, oracle_decision(inst.g, inst.alpha_set));
  }
}

TEST(DeciderProperty, SymmetryBreakingPreservesAnswers) {
  std::mt19937 rng(99);
  for (int t = 0; t < 30; ++t) {
    const int n = 8 + t % 13;
    int r = 2 + t % 4;
    if (n * r % 2)
      ++r;
    auto g = oracle::random_regular(n, r, rng);
    auto sets = enumerate_alpha_sets(g, static_cast<int>(max_independent_set(g).vertices.size()));
    for (std::size_t s = 0; s < std::min<std::size_t>(3, sets.sets.size()); ++s) {
      auto with = decide_silver(g, sets.sets[s]);
      auto without = decide_silver(g, sets.sets[s], no_break());
      ASSERT_NE(with.decision, Decision::unknown);
      EXPECT_EQ(with.decision, without.decision) << "n=" << n << " r=" << r;
    }
  }
}

TEST(DeciderProperty, CertificateImpliesUnsat) {
  std::vector<std::pair<Design, int>> cases{{make_sts(13, StsVariant::cyclic13), 0},
                                            {make_sts(13, StsVariant::noncyclic13), 0},
                                            {make_sts(15, StsVariant::kirkman15), 0},
                                            {make_sts(9, StsVariant::bose), 1}};
  int certified = 0;
  for (const auto &[d, i] : cases) {
    auto g = build_big(d, i);
    auto mis = max_independent_set(g);
    for (const auto &s : enumerate_alpha_sets(g, static_cast<int>(mis.vertices.size())).sets)
      if (find_triple_certificate(g, s)) {
        ++certified;
        EXPECT_EQ(decide_silver(g, s).decision, Decision::unsat);
      }
  }
  EXPECT_GT(certified, 0);
}

TEST(DeciderProperty, SatColoringsVerify) {
  for (const auto &inst : small_instances()) {
    auto r = decide_silver(inst.g, inst.alpha_set);
    if (r.decision == Decision::sat) {
      EXPECT_TRUE(is_proper(inst.g, *r.coloring));
      EXPECT_TRUE(is_silver(inst.g, *r.coloring, inst.alpha_set));
    }
  }
}
