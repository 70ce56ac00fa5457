#include <gtest/gtest.h>

#include <random>

#include "coinv/zlinalg.hpp"
#include "oracles.hpp"

using namespace coinv;

namespace {

InvariantFactors factors(std::initializer_list<long> v) {
  InvariantFactors out;
  for (long x : v) out.emplace_back(x);
  return out;
}

void expect_valid_snf(const IntMatrix& a, const SNFResult& r) {
  ASSERT_EQ(r.U.rows(), a.rows());
  ASSERT_EQ(r.V.cols(), a.cols());
  EXPECT_EQ(r.U * a * r.V, r.S);
  EXPECT_TRUE(r.S.is_diagonal());
  if (a.rows()) { EXPECT_EQ(abs(r.U.determinant()), 1); }
  if (a.cols()) { EXPECT_EQ(abs(r.V.determinant()), 1); }
  std::vector<Integer> d = r.diagonal();
  for (std::size_t k = 0; k < d.size(); ++k) {
    EXPECT_GE(d[k], 0);
    if (k + 1 < d.size() && d[k] != 0) { EXPECT_TRUE(d[k + 1] % d[k] == 0) << d[k] << " " << d[k + 1]; }
    if (d[k] == 0) {
      for (std::size_t j = k; j < d.size(); ++j) EXPECT_EQ(d[j], 0);
    }
  }
}

}  // namespace

TEST(IntMatrix, BasicsAndParsing) {
  IntMatrix m{{1, 2}, {3, 4}};
  EXPECT_EQ(m.determinant(), -2);
  EXPECT_EQ(m.transpose()(0, 1), 3);
  EXPECT_EQ(IntMatrix::identity(2) * m, m);
  EXPECT_EQ(parse_int_matrix("# c\n1 2\n3, 4\n"), m);
  EXPECT_THROW(parse_int_matrix("1 2\n3\n"), std::invalid_argument);
  EXPECT_THROW(parse_int_matrix("1 x\n"), std::invalid_argument);
  EXPECT_EQ(row_times(std::vector<Integer>{1, 1}, m), (IntVector{4, 6}));
  EXPECT_EQ(times_column(m, std::vector<Integer>{1, 1}), (IntVector{3, 7}));
}

TEST(SmithNormalForm, Examples) {
  IntMatrix zero(2, 3);
  SNFResult z = smith_normal_form(zero);
  EXPECT_TRUE(z.S.is_zero());
  EXPECT_EQ(z.U, IntMatrix::identity(2));
  EXPECT_EQ(z.V, IntMatrix::identity(3));

  SNFResult d = smith_normal_form(IntMatrix{{2, 0}, {0, 3}});
  EXPECT_EQ(d.diagonal(), (std::vector<Integer>{1, 6}));
  expect_valid_snf(IntMatrix{{2, 0}, {0, 3}}, d);

  IntMatrix a{{2, 4}, {6, 8}};
  SNFResult r = smith_normal_form(a);
  EXPECT_EQ(r.diagonal(), (std::vector<Integer>{2, 4}));
  // d_1 = gcd of entries, d_1 d_2 = |det|
  EXPECT_EQ(r.diagonal()[0], oracle::minor_gcd(a, 1));
  EXPECT_EQ(r.diagonal()[0] * r.diagonal()[1], abs(oracle::cofactor_det({{2, 4}, {6, 8}})));
}

TEST(SmithNormalForm, RandomMatricesMatchMinorOracle) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  for (int trial = 0; trial < 300; ++trial) {
    IntMatrix a = oracle::random_matrix(rng, dim(rng), dim(rng), -6, 6);
    SNFResult r = smith_normal_form(a);
    expect_valid_snf(a, r);
    std::vector<Integer> d = r.diagonal();
    Integer prod = 1;
    for (std::size_t t = 1; t <= d.size(); ++t) {
      prod *= d[t - 1];
      EXPECT_EQ(prod, oracle::minor_gcd(a, t)) << a.to_string();
    }
    EXPECT_EQ(r.rank(), oracle::minor_rank(a));
  }
}

TEST(SmithNormalForm, Deterministic) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    IntMatrix a = oracle::random_matrix(rng, 5, 4, -9, 9);
    SNFResult r1 = smith_normal_form(a), r2 = smith_normal_form(a);
    EXPECT_EQ(r1.U, r2.U);
    EXPECT_EQ(r1.S, r2.S);
    EXPECT_EQ(r1.V, r2.V);
  }
}

TEST(SmithNormalForm, HugeEntriesTakeBigIntegerPath) {
  IntMatrix a(2, 2);
  a(0, 0) = Integer("123456789012345678901234567890");
  a(0, 1) = Integer("987654321098765432109876543210");
  a(1, 0) = 3;
  a(1, 1) = Integer("-4611686018427387904");
  SNFResult r = smith_normal_form(a);
  expect_valid_snf(a, r);
  EXPECT_EQ(r.diagonal()[0], oracle::minor_gcd(a, 1));
  EXPECT_EQ(r.diagonal()[0] * r.diagonal()[1], abs(a.determinant()));
}

TEST(SmithNormalForm, InverseTransformIsInverse) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    IntMatrix a = oracle::random_matrix(rng, 4, 5, -5, 5);
    SNFDecomposition dec = smith_decompose(a, SNFOptions{true, true, true});
    ASSERT_TRUE(dec.V && dec.V_inverse && dec.U);
    EXPECT_EQ(*dec.V * *dec.V_inverse, IntMatrix::identity(5));
  }
}

TEST(Cokernel, Examples) {
  EXPECT_EQ(cokernel_invariants({{2, 0}, {0, 3}}, 2), (CokernelInvariants{0, factors({6})}));
  EXPECT_EQ(cokernel_invariants({}, 3), (CokernelInvariants{3, {}}));
  EXPECT_EQ(cokernel_invariants({{2, 2}}, 2), (CokernelInvariants{1, factors({2})}));
  EXPECT_EQ(cokernel_invariants(IntMatrix(2, 2)), (CokernelInvariants{2, {}}));
  EXPECT_THROW(cokernel_invariants({{1, 2, 3}}, 2), std::invalid_argument);
}

TEST(Cokernel, AgreesWithBruteForceEnumeration) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<std::size_t> cols(1, 3), rows(0, 4);
  for (int trial = 0; trial < 150; ++trial) {
    IntMatrix a = oracle::random_matrix(rng, rows(rng), cols(rng), -4, 4);
    if (a.rows() == 0) a = IntMatrix(0, cols(rng));
    std::string diff = oracle::cokernel_mismatch(a, cokernel_invariants(a));
    EXPECT_TRUE(diff.empty()) << diff << "\n" << a.to_string();
  }
}

TEST(ClassOrder, Examples) {
  std::vector<IntVector> rows{{2, 0}};
  EXPECT_EQ(class_order(rows, std::vector<Integer>{2, 0}), ClassOrder(Integer(1)));
  EXPECT_EQ(class_order(rows, std::vector<Integer>{1, 0}), ClassOrder(Integer(2)));
  EXPECT_EQ(class_order(rows, std::vector<Integer>{0, 1}), std::nullopt);
  EXPECT_THROW(class_order(rows, std::vector<Integer>{1}), std::invalid_argument);
}

TEST(ClassOrder, MatchesBruteForceOnTorsionClasses) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> e(-3, 3);
  int checked = 0;
  while (checked < 100) {
    IntMatrix a = oracle::random_matrix(rng, 3, 2, -4, 4);
    std::size_t r = oracle::minor_rank(a);
    if (r < 2) continue;
    Integer n = oracle::minor_gcd(a, r);
    Quotient q(a);
    oracle::BruteQuotient brute(a, n.get_si());
    IntVector v{e(rng), e(rng)};
    ClassOrder got = q.class_order(v);
    ASSERT_TRUE(got.has_value());
    EXPECT_EQ(*got, brute.class_order(v));
    EXPECT_EQ(q.contains(v), *got == 1);
    ++checked;
  }
}

TEST(Quotient, TorsionGeneratorsHaveTheirModuliAsOrders) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    IntMatrix a = oracle::random_matrix(rng, 4, 4, -5, 5);
    Quotient q(a);
    ASSERT_EQ(q.torsion_generators().size(), q.torsion_moduli().size());
    for (std::size_t k = 0; k < q.torsion_moduli().size(); ++k) {
      EXPECT_EQ(q.class_order(q.torsion_generators()[k]), ClassOrder(q.torsion_moduli()[k]));
      EXPECT_TRUE(q.free_part_vanishes(q.torsion_generators()[k]));
      IntVector coords = q.torsion_coordinates(q.torsion_generators()[k]);
      for (std::size_t j = 0; j < coords.size(); ++j) EXPECT_EQ(coords[j], j == k ? 1 : 0);
    }
    EXPECT_EQ(q.invariants(), cokernel_invariants(a));
  }
}

TEST(SolveLinear, Examples) {
  IntMatrix id = IntMatrix::identity(3);
  std::vector<Integer> b{4, -1, 7};
  auto x = solve_linear(id, b, Domain::Z);
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, (RatVector{4, -1, 7}));
  IntMatrix two{{2}};
  EXPECT_FALSE(solve_linear(two, std::vector<Integer>{1}, Domain::Z));
  auto q = solve_linear(two, std::vector<Integer>{1}, Domain::Q);
  ASSERT_TRUE(q);
  EXPECT_EQ((*q)[0], Rational(1, 2));
}

TEST(SolveLinear, ConstructThenSolve) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  std::uniform_int_distribution<long> e(-5, 5);
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix a = oracle::random_matrix(rng, dim(rng), dim(rng), -4, 4);
    std::vector<Integer> x0(a.cols());
    for (auto& v : x0) v = e(rng);
    IntVector b = times_column(a, x0);
    for (Domain d : {Domain::Z, Domain::Q}) {
      auto x = solve_linear(a, b, d);
      ASSERT_TRUE(x);
      for (std::size_t r = 0; r < a.rows(); ++r) {
        Rational acc = 0;
        for (std::size_t c = 0; c < a.cols(); ++c) acc += Rational(a(r, c)) * (*x)[c];
        EXPECT_EQ(acc, Rational(b[r]));
      }
      if (d == Domain::Z) {
        for (const Rational& v : *x) EXPECT_TRUE(is_integral(v));
      }
    }
  }
}

TEST(RationalSolver, NullspaceIsKernel) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    IntMatrix a = oracle::random_matrix(rng, 3, 5, -3, 3);
    RationalSolver s{RatMatrix(a)};
    auto ns = s.nullspace();
    EXPECT_EQ(ns.size() + s.rank(), a.cols());
    EXPECT_EQ(s.rank(), rational_rank(a));
    for (const auto& v : ns)
      for (std::size_t r = 0; r < a.rows(); ++r) {
        Rational acc = 0;
        for (std::size_t c = 0; c < a.cols(); ++c) acc += Rational(a(r, c)) * v[c];
        EXPECT_EQ(acc, 0);
      }
  }
}
