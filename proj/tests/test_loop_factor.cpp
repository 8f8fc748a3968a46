#include <gtest/gtest.h>

#include <random>

#include "cartfact/error.hpp"
#include "cartfact/loop_factor.hpp"
#include "cartfact/oracle.hpp"
#include "projection.hpp"
#include "test_util.hpp"

namespace cartfact {
namespace {

ErrorKind failure_kind(const DiGraph& g, const PipelineOptions& options = {}) {
  try {
    factor_full(g, options);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "factor_full accepted the graph";
  return ErrorKind::kInvalidArgument;
}

// Row-major square: 00=0, 01=1, 10=2, 11=3.
TEST(FactorWithLoops, LoopedFactorIsRecovered) {
  const DiGraph a = test::undirected(2, {{0, 1}}, {1});
  const DiGraph b = test::undirected(2, {{0, 1}});
  const std::vector<DiGraph> truth{a, b};
  const DiGraph g = cartesian_product(truth).graph;
  ASSERT_EQ(g.loops(), (std::vector<VertexId>{2, 3}));
  DirectedFactorization f = factor_full(g);
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_TRUE(reconstruct_check(g, f));
  EXPECT_TRUE(isomorphic_multisets(f.factors, truth));
  std::size_t looped_factors = 0;
  for (const DiGraph& x : f.factors) looped_factors += x.num_loops();
  EXPECT_EQ(looped_factors, 1u);
  EXPECT_EQ(f.loop_merges, 0u);
}

TEST(FactorWithLoops, LoopOppositeRootMakesSquarePrime) {
  const DiGraph g = test::undirected(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, {3});
  DirectedFactorization f = factor_full(g);
  ASSERT_EQ(f.factors.size(), 1u);
  EXPECT_EQ(f.factors[0], g);
  EXPECT_EQ(f.loop_merges, 1u);
  EXPECT_TRUE(brute_force_prime(g));
}

TEST(FactorWithLoops, NoLoopsLeavesFactorizationUnchanged) {
  const DiGraph g(4, {{0, 2}, {1, 3}, {0, 1}, {2, 3}});
  const ShadowGraph s = shadow(g);
  const ShadowFactorization sf = factor_shadow(s, 0);
  const BfsOrder order = bfs(s, 0);
  const DirectedFactorization nf = factor_directed(g, s, sf, order);
  const DirectedFactorization f = factor_with_loops(g, s, sf, order, nf);
  EXPECT_EQ(f.loop_merges, 0u);
  EXPECT_EQ(f.factors, nf.factors);
  EXPECT_EQ(f.coords.table(), nf.coords.table());
}

TEST(FactorWithLoops, LoopedRootIsRejected) {
  const DiGraph g = test::undirected(2, {{0, 1}}, {0});
  const ShadowGraph s = shadow(g);
  const ShadowFactorization sf = factor_shadow(s, 0);
  const BfsOrder order = bfs(s, 0);
  const DirectedFactorization nf = factor_directed(strip_loops(g), s, sf, order);
  try {
    factor_with_loops(g, s, sf, order, nf);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNoUnloopedVertex);
  }
}

TEST(FactorFull, SingleArc) {
  const DiGraph g(2, {{0, 1}});
  DirectedFactorization f = factor_full(g);
  ASSERT_EQ(f.factors.size(), 1u);
  EXPECT_EQ(f.factors[0], g);
}

TEST(FactorFull, AllLoopedTwoCycleIsRejected) {
  EXPECT_EQ(failure_kind(test::undirected(2, {{0, 1}}, {0, 1})), ErrorKind::kNoUnloopedVertex);
  EXPECT_EQ(failure_kind(DiGraph(1, {}, {0})), ErrorKind::kNoUnloopedVertex);
}

TEST(FactorFull, DisconnectedIsRejected) {
  EXPECT_EQ(failure_kind(DiGraph(3, {{0, 1}})), ErrorKind::kDisconnected);
}

TEST(FactorFull, ExplicitRootMustBeUnlooped) {
  const DiGraph g = test::undirected(2, {{0, 1}}, {1});
  PipelineOptions options;
  options.root = 1;
  EXPECT_EQ(failure_kind(g, options), ErrorKind::kNoUnloopedVertex);
  options.root = 5;
  EXPECT_EQ(failure_kind(g, options), ErrorKind::kOutOfRange);
}

TEST(FactorFull, TrivialGraphIsUnit) {
  DirectedFactorization f = factor_full(DiGraph(1, {}));
  EXPECT_TRUE(f.factors.empty());
  EXPECT_EQ(f.coords.num_vertices(), 1u);
  EXPECT_TRUE(reconstruct_check(DiGraph(1, {}), f));
}

TEST(FactorFull, ReportNamesSmallestUnloopedRoot) {
  const DiGraph g = test::undirected(3, {{0, 1}, {1, 2}}, {0});
  PipelineReport report;
  factor_full(g, {}, &report);
  EXPECT_EQ(report.root, 1u);
  EXPECT_EQ(report.shadow_factors, 1u);
}

// Property: an unlooped vertex can have a looped projection. The loop pass
// has to merge exactly there, so this is not asserted during the scan.
TEST(FactorWithLoops, UnloopedVertexMayHaveLoopedProjection) {
  const DiGraph g = test::undirected(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, {2});
  const ShadowGraph s = shadow(g);
  const ShadowFactorization sf = factor_shadow(s, 0);
  detail::Projector projector(sf.coords);
  projector.load(3, ColorPartition(sf.num_colors()));
  bool looped = false;
  for (ClassId c : projector.differing_classes()) looped = looped || g.is_looped(projector.vertex(c));
  EXPECT_FALSE(g.is_looped(3));
  EXPECT_TRUE(looped);
  DirectedFactorization f = factor_full(g);
  EXPECT_EQ(f.factors.size(), 1u);
}

TEST(FactorWithLoops, RandomInstances) {
  std::mt19937_64 rng(41);
  for (int it = 0; it < 150; ++it) {
    GeneratorParams params;
    params.num_factors = 1 + rng() % 3;
    params.max_size = 4;
    params.loop_probability = 0.3;
    params.seed = rng();
    const ProductInstance inst = gen_product_instance(params);
    const DiGraph& g = inst.graph;

    const ShadowGraph s = shadow(g);
    VertexId root = 0;
    while (g.is_looped(root)) ++root;
    const ShadowFactorization sf = factor_shadow(s, root);
    const BfsOrder order = bfs(s, root);
    const DirectedFactorization nf = factor_directed(strip_loops(g), s, sf, order);
    const DirectedFactorization f = factor_with_loops(g, s, sf, order, nf);

    // Loop soundness.
    ASSERT_TRUE(reconstruct_check(g, f));
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      bool any = false;
      for (std::size_t i = 0; i < f.factors.size(); ++i) any = any || f.factors[i].is_looped(f.coords.coord(v, i));
      EXPECT_EQ(any, g.is_looped(v));
    }
    // Classes only coarsen.
    for (ColorId a = 0; a < sf.num_colors(); ++a) {
      for (ColorId b = 0; b < sf.num_colors(); ++b) {
        if (nf.partition.class_of(a) == nf.partition.class_of(b)) EXPECT_EQ(f.partition.class_of(a), f.partition.class_of(b));
      }
    }
    EXPECT_TRUE(isomorphic_multisets(f.factors, inst.factors));

    // Root invariance up to isomorphism.
    std::vector<VertexId> unlooped;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (!g.is_looped(v)) unlooped.push_back(v);
    }
    PipelineOptions other;
    other.root = unlooped[rng() % unlooped.size()];
    EXPECT_TRUE(isomorphic_multisets(factor_full(g, other).factors, f.factors));
  }
}

}  // namespace
}  // namespace cartfact
