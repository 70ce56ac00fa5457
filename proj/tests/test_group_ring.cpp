#include <gtest/gtest.h>

#include <random>

#include "coinv/group_ring.hpp"
#include "oracles.hpp"

using namespace coinv;

TEST(RingElt, ParseAndPrint) {
  FinAbGroup g({2, 2});
  RingElt r = RingElt::parse(g, "1*(0,0) - 1*(1,0) + 1/2*(1,1)");
  EXPECT_EQ(r.domain(), Domain::Q);
  EXPECT_EQ(r.coeff(g.identity()), Rational(1));
  EXPECT_EQ(r.coeff(g.element({1, 0})), Rational(-1));
  EXPECT_EQ(r.coeff(g.element({1, 1})), Rational(1, 2));
  EXPECT_EQ(RingElt::parse(g, r.to_string()), r);
  EXPECT_EQ(RingElt::parse(g, "(1,0)"), RingElt::monomial(g.element({1, 0})));
  EXPECT_EQ(RingElt::parse(g, "3"), RingElt::monomial(g.identity(), 3));
  EXPECT_TRUE(RingElt::parse(g, "0").is_zero());
  EXPECT_EQ(RingElt::parse(g, "2*(0,1)").domain(), Domain::Z);
  EXPECT_THROW(RingElt::parse(g, "1*(0,0) 2*(1,0)"), std::invalid_argument);
  EXPECT_THROW(RingElt::parse(g, "1/0*(0,0)"), std::invalid_argument);
}

TEST(RingElt, ZTagRejectsFractions) {
  FinAbGroup g({3});
  RatVector c{Rational(1, 2), 0, 0};
  EXPECT_THROW(RingElt(g, c, Domain::Z), std::domain_error);
  RingElt q(g, c, Domain::Q);
  EXPECT_THROW(q.as_integral(), std::domain_error);
  EXPECT_EQ((q * Rational(2)).as_integral().domain(), Domain::Z);
}

TEST(RingElt, DomainPromotion) {
  FinAbGroup g({2});
  RingElt a = RingElt::one(g);
  EXPECT_EQ(a.domain(), Domain::Z);
  EXPECT_EQ((a * Rational(1, 3)).domain(), Domain::Q);
  EXPECT_EQ((a + a.as_rational()).domain(), Domain::Q);
  EXPECT_EQ((a * a).domain(), Domain::Z);
}

TEST(RingElt, GroupMismatchThrows) {
  RingElt a = RingElt::one(FinAbGroup({2}));
  RingElt b = RingElt::one(FinAbGroup({3}));
  EXPECT_THROW(a + b, std::invalid_argument);
  EXPECT_THROW(a * b, std::invalid_argument);
}

TEST(RingArithmetic, Examples) {
  for (std::int64_t m : {2, 3, 5, 8}) {
    FinAbGroup g({m});
    RingElt p = axis_sum(g, 0);
    RingElt prod = ring_arithmetic(RingOp::Mul, one_minus(g.generator(0)), &p);
    EXPECT_TRUE(prod.is_zero());
  }
  FinAbGroup g({2, 2});
  for (const GroupElt& x : g.elements()) EXPECT_EQ(group_sum(g) * RingElt::monomial(x), group_sum(g));
  RingElt expected = RingElt::parse(g, "(0,0) - (1,0) - (0,1) + (1,1)");
  EXPECT_EQ(one_minus(g.generator(0)) * one_minus(g.generator(1)), expected);
  EXPECT_EQ(ring_arithmetic(RingOp::Neg, expected), -expected);
  EXPECT_EQ(ring_arithmetic(RingOp::Scale, expected, nullptr, Rational(2)), expected + expected);
}

TEST(SpecialElements, Examples) {
  FinAbGroup v4({2, 2});
  EXPECT_EQ(special_element(v4, SpecialKind::P, 0), RingElt::parse(v4, "(0,0) + (1,0)"));
  EXPECT_EQ(special_element(v4, SpecialKind::Q, 0), RingElt::parse(v4, "(0,0) + (0,1)"));
  EXPECT_THROW(special_element(v4, SpecialKind::Q, 2), std::out_of_range);
  for (const char* lit : {"2,2", "6,4", "2,3,4", "5"}) {
    FinAbGroup g = FinAbGroup::parse(lit);
    RingElt prod = RingElt::one(g);
    for (std::size_t i = 0; i < g.rank(); ++i) prod = prod * axis_sum(g, i);
    EXPECT_EQ(prod, group_sum(g)) << lit;
    for (std::size_t i = 0; i < g.rank(); ++i) {
      RingElt q = RingElt::one(g);
      for (std::size_t j = 0; j < g.rank(); ++j)
        if (j != i) q = q * axis_sum(g, j);
      EXPECT_EQ(complement_sum(g, i), q);
      EXPECT_TRUE((one_minus(g.generator(i)) * axis_sum(g, i)).is_zero());
    }
  }
}

TEST(RingAxioms, RandomTriples) {
  std::mt19937_64 rng(2024);
  for (const char* lit : {"2,2", "4,6", "8,8", "2,2,2", "3,3", "7"}) {
    FinAbGroup g = FinAbGroup::parse(lit);
    for (int trial = 0; trial < 15; ++trial) {
      RingElt a = oracle::random_ring_elt(g, rng, trial % 2 == 0);
      RingElt b = oracle::random_ring_elt(g, rng);
      RingElt c = oracle::random_ring_elt(g, rng, true);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ((a * b).augmentation(), a.augmentation() * b.augmentation());
      EXPECT_TRUE((a - a).is_zero());
      EXPECT_EQ(a * RingElt::one(g), a);
    }
  }
}

TEST(Coboundary, Examples) {
  FinAbGroup v4({2, 2});
  std::vector<GroupElt> s{v4.generator(0), v4.generator(1)};
  for (const RingElt& c : solve_coboundary(s, v4.identity())) EXPECT_TRUE(c.is_zero());
  auto sol = solve_coboundary(s, v4.element({1, 1}));
  EXPECT_EQ(sol[0], RingElt::one(v4));
  EXPECT_EQ(sol[1], RingElt::monomial(v4.generator(0)));
  auto single = solve_coboundary(s, v4.generator(1));
  EXPECT_TRUE(single[0].is_zero());
  EXPECT_EQ(single[1], RingElt::one(v4));
  std::vector<GroupElt> bad{v4.generator(0)};
  EXPECT_THROW(solve_coboundary(bad, v4.generator(1)), std::invalid_argument);
}

TEST(Coboundary, RandomGeneratingSetsSatisfyIdentity) {
  std::mt19937_64 rng(99);
  FinAbGroup g({6, 4});
  std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
  int checked = 0;
  while (checked < 50) {
    std::vector<GroupElt> s;
    for (int i = 0; i < 3; ++i) s.push_back(g.element_at(pick(rng)));
    if (!generates(s, g)) continue;
    ++checked;
    CoboundarySolver solver(g, s);
    for (const GroupElt& target : g.elements()) {
      auto coeffs = solver.solve(target);
      RingElt lhs(g);
      for (std::size_t a = 0; a < s.size(); ++a) {
        EXPECT_EQ(coeffs[a].domain(), Domain::Z);
        lhs += one_minus(s[a]) * coeffs[a];
      }
      EXPECT_EQ(lhs, one_minus(target));
    }
  }
}
