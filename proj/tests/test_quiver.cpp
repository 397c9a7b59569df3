#include <gtest/gtest.h>

#include <set>

#include "orbiquiver/orbifold.hpp"
#include "orbiquiver/random_quiver.hpp"

using namespace orbi;

namespace {

Quiver make(std::vector<std::string> vs, std::vector<std::tuple<std::string, std::string, std::string>> as) {
  return Quiver(std::move(vs), as);
}

Quiver ay_shape(std::vector<int> r) {
  return build_ay({r, std::vector<ProjPoint>(r.size(), ProjPoint::finite(0))}).quiver();
}

std::vector<std::string> ids(const Quiver& q, const std::vector<std::size_t>& arrows) {
  std::vector<std::string> out;
  for (auto a : arrows) out.push_back(q.arrow(a).id);
  return out;
}

}  // namespace

TEST(QuiverTest, RejectsUnknownAndDuplicateIds) {
  EXPECT_THROW(make({"v", "v"}, {}), Error);
  EXPECT_THROW(make({"v"}, {{"a", "v", "w"}}), Error);
  EXPECT_THROW(make({"v"}, {{"a", "v", "v"}, {"a", "v", "v"}}), Error);
}

TEST(PathTest, PrintsInCompositionOrder) {
  const Quiver q = make({"v", "w"}, {{"a", "v", "w"}, {"b", "w", "v"}});
  const Path p = concat(q, Path::of_arrow(q, 0), Path::of_arrow(q, 1));
  EXPECT_EQ(path_to_string(q, p), "b*a");
  EXPECT_EQ(path_to_string(q, Path::trivial(1)), "e_w");
  EXPECT_THROW(concat(q, Path::of_arrow(q, 0), Path::of_arrow(q, 0)), Error);
}

TEST(EnumerateSimpleCycles, Examples) {
  const Quiver two = make({"v", "w"}, {{"a", "v", "w"}, {"b", "w", "v"}});
  const auto cycles = enumerate_simple_cycles(two);
  ASSERT_EQ(cycles.size(), 1u);
  EXPECT_EQ(ids(two, cycles[0].arrows), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(path_to_string(two, cycles[0].as_path(two)), "b*a");

  EXPECT_TRUE(enumerate_simple_cycles(make({"v", "w"}, {{"a", "v", "w"}})).empty());
  EXPECT_EQ(enumerate_simple_cycles(ay_shape({2, 2, 2})).size(), 3u);
}

TEST(EnumerateSimpleCycles, CanonicalRotationStartsAtSmallestVertex) {
  const Quiver q = make({"x", "y", "z"}, {{"c", "z", "x"}, {"a", "x", "y"}, {"b", "y", "z"}});
  const auto cycles = enumerate_simple_cycles(q);
  ASSERT_EQ(cycles.size(), 1u);
  EXPECT_EQ(ids(q, cycles[0].arrows), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(make_simple_cycle(q, {0, 1, 2}).arrows, cycles[0].arrows);  // given as c, a, b
}

TEST(MakeSimpleCycle, RejectsNonCycles) {
  const Quiver q = make({"v", "w"}, {{"a", "v", "w"}, {"b", "w", "v"}, {"l", "v", "v"}});
  EXPECT_THROW(make_simple_cycle(q, {0}), Error);
  EXPECT_THROW(make_simple_cycle(q, {}), Error);
  EXPECT_THROW(make_simple_cycle(q, {0, 1, 2}), Error);  // passes v twice
  EXPECT_NO_THROW(make_simple_cycle(q, {2}));
}

TEST(HasTransverseCycles, Examples) {
  for (std::vector<int> r : {std::vector<int>{2}, {2, 3}, {2, 2, 2}, {4, 3, 2}})
    EXPECT_TRUE(has_transverse_cycles(ay_shape(r)));
  EXPECT_FALSE(has_transverse_cycles(make({"v", "w"}, {{"a", "v", "w"}, {"b", "w", "v"}, {"b2", "w", "v"}})));
  EXPECT_TRUE(has_transverse_cycles(make({"v"}, {{"l", "v", "v"}})));
}

TEST(AcyclicPaths, Examples) {
  const auto single = acyclic_paths(make({"v"}, {}));
  ASSERT_EQ(single.size(), 1u);
  EXPECT_TRUE(single[0].is_trivial());

  const Quiver petal = ay_shape({2});
  std::vector<std::string> names;
  for (const auto& p : acyclic_paths(petal)) names.push_back(path_to_string(petal, p));
  EXPECT_EQ(names, (std::vector<std::string>{"e_0", "e_1_1", "a1_1", "a1_2"}));

  EXPECT_EQ(acyclic_paths(ay_shape({2, 2})).size(), 9u);
}

TEST(ContractCycle, Examples) {
  const Quiver two = make({"v", "w"}, {{"a", "v", "w"}, {"b", "w", "v"}});
  auto c = contract_cycle(two, enumerate_simple_cycles(two)[0]);
  EXPECT_EQ(c.quiver.num_vertices(), 1u);
  EXPECT_EQ(c.quiver.num_arrows(), 0u);
  EXPECT_EQ(c.quiver.vertex_id(0), "v");

  const Quiver petals = ay_shape({2, 2});
  const auto second = enumerate_simple_cycles(petals)[1];
  EXPECT_EQ(ids(petals, second.arrows), (std::vector<std::string>{"a2_1", "a2_2"}));
  c = contract_cycle(petals, second);
  EXPECT_EQ(c.quiver.num_vertices(), 2u);
  EXPECT_EQ(c.quiver.num_arrows(), 2u);
  EXPECT_EQ(c.quiver, ay_shape({2}));

  const Quiver chord = make({"x", "y", "z"}, {{"a", "x", "y"}, {"b", "y", "z"}, {"c", "z", "x"}, {"d", "x", "z"}});
  const auto triangle = make_simple_cycle(chord, {0, 1, 2});
  c = contract_cycle(chord, triangle);
  ASSERT_EQ(c.quiver.num_vertices(), 1u);
  ASSERT_EQ(c.quiver.num_arrows(), 1u);
  EXPECT_EQ(c.quiver.source(0), c.quiver.target(0));
  EXPECT_EQ(c.quiver.arrow(0).id, "d");
}

TEST(ContractCycle, RejectsForeignCycle) {
  const Quiver q = make({"v", "w"}, {{"a", "v", "w"}, {"b", "w", "v"}});
  const Quiver other = make({"v"}, {{"l", "v", "v"}});
  EXPECT_THROW(contract_cycle(q, make_simple_cycle(other, {0})), Error);
}

TEST(QuiverProperties, AcyclicPathsVisitDistinctVertices) {
  SplitMix64 rng(21);
  for (int i = 0; i < 100; ++i) {
    const Quiver q = random_transverse_quiver(rng);
    for (const auto& p : acyclic_paths(q)) {
      const auto vs = p.vertices(q);
      EXPECT_EQ(std::set<std::size_t>(vs.begin(), vs.end()).size(), vs.size());
      EXPECT_LT(p.length(), q.num_vertices());
    }
  }
}

TEST(QuiverProperties, ContractionCountsAndTransversality) {
  SplitMix64 rng(22);
  int contracted = 0;
  for (int i = 0; i < 200; ++i) {
    const Quiver q = random_transverse_quiver(rng);
    for (const auto& cyc : enumerate_simple_cycles(q)) {
      const auto c = contract_cycle(q, cyc);
      EXPECT_EQ(c.quiver.num_vertices(), q.num_vertices() - (cyc.arrows.size() - 1));
      EXPECT_EQ(c.quiver.num_arrows(), q.num_arrows() - cyc.arrows.size());
      EXPECT_TRUE(has_transverse_cycles(c.quiver));
      ++contracted;
    }
  }
  EXPECT_GT(contracted, 50);
}

TEST(QuiverProperties, TransverseCyclesSharingTwoVerticesCoincide) {
  SplitMix64 rng(23);
  for (int i = 0; i < 200; ++i) {
    const Quiver q = random_transverse_quiver(rng);
    const auto cycles = enumerate_simple_cycles(q);
    for (std::size_t a = 0; a < cycles.size(); ++a)
      for (std::size_t b = a + 1; b < cycles.size(); ++b) {
        EXPECT_NE(cycles[a].arrows, cycles[b].arrows);
        EXPECT_LE(detail::shared_vertex_count(q, cycles[a], cycles[b]), 1u);
      }
  }
}
