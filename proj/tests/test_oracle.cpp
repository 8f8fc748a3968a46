#include <gtest/gtest.h>

#include <random>

#include "cartfact/error.hpp"
#include "cartfact/graph_io.hpp"
#include "cartfact/loop_factor.hpp"
#include "cartfact/oracle.hpp"
#include "test_util.hpp"

namespace cartfact {
namespace {

const DiGraph kSquare(4, {{0, 2}, {1, 3}, {0, 1}, {2, 3}});

TEST(ReconstructCheck, TrivialFactorization) {
  std::mt19937_64 rng(51);
  for (int it = 0; it < 20; ++it) {
    const DiGraph g = test::random_connected_digraph(rng, 1 + rng() % 6, 0.4, 0.3);
    std::vector<CoordVector> table;
    for (VertexId v = 0; v < g.num_vertices(); ++v) table.push_back({v});
    EXPECT_TRUE(reconstruct_check(g, std::vector<DiGraph>{g}, table));
  }
}

TEST(ReconstructCheck, SquareAndPerturbation) {
  const DiGraph arc(2, {{0, 1}});
  const std::vector<CoordVector> table{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  EXPECT_TRUE(reconstruct_check(kSquare, std::vector<DiGraph>{arc, arc}, table));
  const DiGraph flipped(2, {{1, 0}});
  EXPECT_FALSE(reconstruct_check(kSquare, std::vector<DiGraph>{arc, flipped}, table));
  const DiGraph looped(2, {{0, 1}}, {1});
  EXPECT_FALSE(reconstruct_check(kSquare, std::vector<DiGraph>{arc, looped}, table));
}

TEST(ReconstructCheck, RejectsNonBijection) {
  const DiGraph arc(2, {{0, 1}});
  const std::vector<CoordVector> table{{0, 0}, {0, 1}, {1, 0}, {0, 0}};
  EXPECT_THROW(reconstruct_check(kSquare, std::vector<DiGraph>{arc, arc}, table), Error);
  EXPECT_THROW(reconstruct_check(kSquare, std::vector<DiGraph>{arc, arc}, std::vector<CoordVector>{{0, 0}}), Error);
}

TEST(BruteForcePrime, Examples) {
  EXPECT_FALSE(brute_force_prime(test::undirected_cycle(4)));
  EXPECT_TRUE(brute_force_prime(test::undirected_cycle(5)));
  EXPECT_TRUE(brute_force_prime(DiGraph(4, {{0, 2}, {3, 1}, {0, 1}, {2, 3}})));
  EXPECT_FALSE(brute_force_prime(kSquare));
  EXPECT_TRUE(brute_force_prime(DiGraph(2, {{0, 1}})));
  EXPECT_FALSE(brute_force_prime(DiGraph(1, {})));
}

TEST(BruteForcePrime, LoopsDecide) {
  EXPECT_FALSE(brute_force_prime(test::undirected(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, {2, 3})));
  EXPECT_TRUE(brute_force_prime(test::undirected(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, {3})));
}

TEST(BruteForcePrime, Domain) {
  const auto kind = [](const DiGraph& g) {
    try {
      brute_force_prime(g);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::kInvalidArgument;
  };
  EXPECT_EQ(kind(DiGraph(3, {{0, 1}})), ErrorKind::kDisconnected);
  EXPECT_EQ(kind(test::undirected(2, {{0, 1}}, {0, 1})), ErrorKind::kNoUnloopedVertex);
  std::vector<Arc> pairs;
  for (VertexId u = 0; u < 7; ++u) {
    for (VertexId v = u + 1; v < 7; ++v) pairs.emplace_back(u, v);
  }
  EXPECT_EQ(kind(test::undirected(7, pairs)), ErrorKind::kBoundExceeded);
}

TEST(IsoCheck, Examples) {
  const DiGraph g(3, {{0, 1}, {1, 2}}, {2});
  EXPECT_TRUE(iso_check(g, g));
  EXPECT_TRUE(iso_check(DiGraph(2, {{0, 1}}), DiGraph(2, {{1, 0}})));
  EXPECT_FALSE(iso_check(DiGraph(2, {{0, 1}}), DiGraph(2, {{0, 1}, {1, 0}})));
  EXPECT_FALSE(iso_check(DiGraph(3, {{0, 1}, {1, 2}}), DiGraph(3, {{0, 1}, {2, 1}})));
  EXPECT_FALSE(iso_check(DiGraph(2, {{0, 1}}, {0}), DiGraph(2, {{0, 1}}, {1})));
  EXPECT_THROW(iso_check(DiGraph(11, {}), DiGraph(11, {})), Error);
}

TEST(IsoCheck, InvariantUnderRelabeling) {
  std::mt19937_64 rng(52);
  for (int it = 0; it < 100; ++it) {
    const DiGraph g = test::random_digraph(rng, 1 + rng() % 8, 0.4, 0.3);
    EXPECT_TRUE(iso_check(g, relabel(g, random_permutation(rng, g.num_vertices()))));
  }
}

TEST(IsomorphicMultisets, PairsUpToOrder) {
  const DiGraph a(2, {{0, 1}});
  const DiGraph b(2, {{1, 0}});
  const DiGraph c = test::undirected_cycle(3);
  EXPECT_TRUE(isomorphic_multisets(std::vector<DiGraph>{a, c}, std::vector<DiGraph>{c, b}));
  EXPECT_FALSE(isomorphic_multisets(std::vector<DiGraph>{a, a}, std::vector<DiGraph>{a, c}));
  EXPECT_FALSE(isomorphic_multisets(std::vector<DiGraph>{a}, std::vector<DiGraph>{a, a}));
}

TEST(GenProductInstance, Deterministic) {
  GeneratorParams p;
  p.num_factors = 3;
  p.loop_probability = 0.3;
  p.seed = 99;
  const ProductInstance a = gen_product_instance(p);
  const ProductInstance b = gen_product_instance(p);
  EXPECT_EQ(serialize_graph(a.graph), serialize_graph(b.graph));
  EXPECT_EQ(a.factors, b.factors);
  p.seed = 100;
  EXPECT_NE(serialize_graph(gen_product_instance(p).graph), serialize_graph(a.graph));
}

TEST(GenProductInstance, OneFactorIsPrime) {
  GeneratorParams p;
  p.num_factors = 1;
  p.seed = 3;
  const ProductInstance inst = gen_product_instance(p);
  ASSERT_EQ(inst.factors.size(), 1u);
  EXPECT_TRUE(brute_force_prime(inst.graph));
  DirectedFactorization f = factor_full(inst.graph);
  ASSERT_EQ(f.factors.size(), 1u);
  EXPECT_TRUE(iso_check(f.factors[0], inst.factors[0]));
}

TEST(GenProductInstance, ThreeFactorsAreRecovered) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    GeneratorParams p;
    p.num_factors = 3;
    p.min_size = 2;
    p.max_size = 4;
    p.loop_probability = 0.3;
    p.seed = seed;
    const ProductInstance inst = gen_product_instance(p);
    bool unlooped = false;
    for (VertexId v = 0; v < inst.graph.num_vertices(); ++v) unlooped = unlooped || !inst.graph.is_looped(v);
    EXPECT_TRUE(unlooped);
    for (const DiGraph& f : inst.factors) EXPECT_TRUE(brute_force_prime(f));
    DirectedFactorization f = factor_full(inst.graph);
    EXPECT_EQ(f.factors.size(), 3u);
    EXPECT_TRUE(isomorphic_multisets(f.factors, inst.factors));
    EXPECT_TRUE(reconstruct_check(inst.graph, f));
  }
}

TEST(GenProductInstance, RejectsBadParameters) {
  GeneratorParams p;
  p.num_factors = 0;
  EXPECT_THROW(gen_product_instance(p), Error);
  p.num_factors = 2;
  p.min_size = 1;
  EXPECT_THROW(gen_product_instance(p), Error);
}

}  // namespace
}  // namespace cartfact
