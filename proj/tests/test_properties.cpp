#include <gtest/gtest.h>

#include "cartfact/graph_io.hpp"
#include "invariants.hpp"

namespace cartfact {
namespace {

class ProductInvariant : public ::testing::TestWithParam<std::size_t> {};

TEST_P(ProductInvariant, HoldsOnRandomInstances) {
  const invariants::Invariant inv = invariants::all()[GetParam()];
  std::mt19937_64 rng(1000 + GetParam());
  for (int it = 0; it < 150; ++it) {
    const std::string why = inv.check(rng);
    ASSERT_TRUE(why.empty()) << inv.name << ", instance " << it << ": " << why;
  }
}

INSTANTIATE_TEST_SUITE_P(All, ProductInvariant, ::testing::Range<std::size_t>(0, invariants::all().size()),
                         [](const ::testing::TestParamInfo<std::size_t>& info) {
                           std::string name = invariants::all()[info.param].name;
                           std::replace(name.begin(), name.end(), ' ', '_');
                           return name;
                         });

TEST(Pipeline, Deterministic) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    GeneratorParams p;
    p.num_factors = 3;
    p.loop_probability = 0.3;
    p.seed = seed;
    const DiGraph g = gen_product_instance(p).graph;
    const DirectedFactorization a = factor_full(g);
    const DirectedFactorization b = factor_full(g);
    ASSERT_EQ(a.factors.size(), b.factors.size());
    for (std::size_t i = 0; i < a.factors.size(); ++i) EXPECT_EQ(serialize_graph(a.factors[i]), serialize_graph(b.factors[i]));
    EXPECT_EQ(a.coords.table(), b.coords.table());
  }
}

TEST(Pipeline, RelabelingDoesNotChangeFactors) {
  std::mt19937_64 rng(61);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    GeneratorParams p;
    p.num_factors = 2 + seed % 3;
    p.max_size = 4;
    p.loop_probability = 0.3;
    p.seed = seed;
    const DiGraph g = gen_product_instance(p).graph;
    const DiGraph h = relabel(g, random_permutation(rng, g.num_vertices()));
    EXPECT_TRUE(isomorphic_multisets(factor_full(g).factors, factor_full(h).factors));
  }
}

}  // namespace
}  // namespace cartfact
