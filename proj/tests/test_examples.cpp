#include <gtest/gtest.h>

#include "coinv/example_systems.hpp"

using namespace coinv;

TEST(Rotation, ConvergentDenominators) {
  EXPECT_EQ(convergent_denominators({2, 2, 2, 2}, 5), (std::vector<Integer>{1, 2, 5, 12, 29}));
  EXPECT_EQ(convergent_denominators({1, 1, 1, 1}, 5), (std::vector<Integer>{1, 1, 2, 3, 5}));
  EXPECT_EQ(convergent_denominators({3, 7, 15}, 4), (std::vector<Integer>{1, 3, 22, 333}));
  EXPECT_THROW(convergent_denominators({2}, 3), std::invalid_argument);
}

TEST(Rotation, HeightsAreConvergentDenominators) {
  FinAbGroup g({2, 2});
  for (const std::vector<std::int64_t>& digits :
       {std::vector<std::int64_t>{2, 2, 2, 2}, {1, 3, 1, 2}, {4, 1, 1, 5}, {1, 1, 1, 1}}) {
    OrderedBVDiagram d = rotation_diagram(RotationSpec{digits, 5}, g.generator(0), g.generator(1));
    DiagramStructure s = validate_diagram(d);
    std::vector<Integer> q = convergent_denominators(digits, 5);
    for (std::size_t level = 1; level <= 5; ++level) {
      EXPECT_EQ(s.heights[level - 1][d.index_of(level, "L")], q[level - 1]);
      if (level >= 2) { EXPECT_EQ(s.heights[level - 1][d.index_of(level, "S")], q[level - 2]); }
    }
  }
}

TEST(Octagonal, NondegenerateAtEveryLevel) {
  auto [x, y] = octagonal_pair(5);
  EXPECT_EQ(x.level_count(), 5u);
  EXPECT_TRUE(nondegeneracy_check(x).overall);
  EXPECT_TRUE(nondegeneracy_check(y).overall);
}

TEST(Octagonal, TorsionIsZ2AtEveryStage) {
  auto [x, y] = octagonal_pair(4);
  StabilizationReport r = torsion_stabilization(x, y, 4);
  EXPECT_EQ(r.predicted, InvariantFactors{2});
  for (const StageReport& st : r.stages) {
    ASSERT_TRUE(st.torsion.has_value());
    EXPECT_EQ(*st.torsion, InvariantFactors{2});
  }
  EXPECT_TRUE(r.verdict);
}

TEST(RandomDiagram, NondegenerateSamplerDelivers) {
  std::mt19937_64 rng(1);
  FinAbGroup g({2, 2});
  for (int trial = 0; trial < 10; ++trial)
    EXPECT_TRUE(nondegeneracy_check(random_nondegenerate_diagram(g, RandomDiagramSpec{}, rng)).overall);
  // One tower cannot generate Z_2 x Z_2.
  EXPECT_THROW(random_nondegenerate_diagram(g, RandomDiagramSpec{2, 1, 2, 2}, rng, 50), std::runtime_error);
}
