#include "oracle.hpp"
#include "redpow/dio_solver.hpp"

#include <gtest/gtest.h>

using namespace redpow;

namespace {
DioSystem S(std::vector<std::string> eqs) { return DioSystem::parse(eqs); }
PolyElem P(const char* s) { return PolyElem::parse(s); }
}  // namespace

TEST(SolveBrute, Examples) {
  EXPECT_EQ(solve_brute(S({"x0+x1=1+1+1", "x0*x1=1+1"}), 5), (Assignment{{0, 1}, {1, 2}}));
  EXPECT_EQ(solve_brute(S({"x0=x0"}), 0), (Assignment{{0, 0}}));
  EXPECT_FALSE(solve_brute(S({"x0+1=0"}), 20).has_value());
}

TEST(SolveBrute, LexicographicMinimum) {
  // Solutions of x0 + x1 = 4 with x1 >= 1: the first in order has x0 = 0.
  auto s = solve_brute(S({"x0+x1=1+1+1+1", "x1=x2+1"}), 6);
  ASSERT_TRUE(s);
  EXPECT_EQ(*s, (Assignment{{0, 0}, {1, 4}, {2, 3}}));
}

TEST(SolveBrute, VariableCancelledStillAssigned) {
  auto s = solve_brute(S({"x0+x1=x1+1"}), 3);
  ASSERT_TRUE(s);
  EXPECT_EQ(*s, (Assignment{{0, 1}, {1, 0}}));
}

TEST(SolveBrute, NodeLimit) {
  EXPECT_THROW(solve_brute(S({"x0+x1+x2+x3+1=0"}), 100, SearchLimits{1000}), SearchTimeout);
}

TEST(SolveBrute, RejectsQuantified) { EXPECT_THROW(S({"E y0 (y0=x0)"}), std::invalid_argument); }

TEST(SolveByEvaluation, Examples) {
  const auto sys = S({"x0+x1=x2"});
  const std::map<std::uint32_t, PolyElem> prov{{0, P("X")}, {1, P("1")}, {2, P("X+1")}};
  EXPECT_EQ(solve_by_evaluation(sys, prov, 10), (Assignment{{0, 10}, {1, 1}, {2, 11}}));
  EXPECT_EQ(solve_by_evaluation(sys, prov, 0), (Assignment{{0, 0}, {1, 1}, {2, 1}}));
  EXPECT_EQ(solve_by_evaluation(S({"x0=x0"}), {{0, P("X^2-X")}}, 3), (Assignment{{0, 6}}));
}

TEST(SolveByEvaluation, PreconditionViolation) {
  const std::map<std::uint32_t, PolyElem> prov{{0, P("X")}, {1, P("1")}, {2, P("X")}};
  try {
    solve_by_evaluation(S({"x0+x1=x2"}), prov, 10);
    FAIL();
  } catch (const PreconditionViolation& e) {
    EXPECT_EQ(e.equation(), "x0+x1=x2");
  }
  EXPECT_THROW(solve_by_evaluation(S({"x0=x0"}), {{0, P("X-5")}}, 2), PreconditionViolation);
  EXPECT_THROW(solve_by_evaluation(S({"x3=x3"}), {{0, P("X")}}, 2), PreconditionViolation);
}

TEST(Verify, Examples) {
  EXPECT_TRUE(verify(S({"x0+x1=1+1+1"}), {{0, 1}, {1, 2}}));
  EXPECT_FALSE(verify(S({"x0+x1=1+1+1"}), {{0, 2}, {1, 2}}));
  EXPECT_TRUE(verify(DioSystem{}, {}));
  EXPECT_THROW(verify(S({"x0=x1"}), {{0, 1}}), std::invalid_argument);
}

TEST(SolveBrute, RandomSystemsVerify) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> count(1, 3);
  int found = 0;
  for (int i = 0; i < 150; ++i) {
    std::vector<DioFormula> eqs;
    const int k = count(rng);
    for (int e = 0; e < k; ++e) {
      DioFormula f;
      f.lhs = oracle::random_term(rng, 3, 2);
      f.rhs = oracle::random_term(rng, 3, 2);
      eqs.push_back(canonicalize(f));
    }
    const DioSystem sys = DioSystem::from_formulas(eqs);
    auto s = solve_brute(sys, 8);
    if (!s) continue;
    ++found;
    EXPECT_TRUE(verify(sys, *s));
    // Determinism.
    EXPECT_EQ(solve_brute(sys, 8), s);
  }
  EXPECT_GT(found, 50);
}

TEST(LeastNatRoot, Basics) {
  EXPECT_EQ(least_nat_root({-6, 1}, 10), BigInt(6));
  EXPECT_EQ(least_nat_root({6, -5, 1}, 10), BigInt(2));  // (y-2)(y-3)
  EXPECT_FALSE(least_nat_root({1, 1}, 10).has_value());
  EXPECT_EQ(least_nat_root({}, 10), BigInt(0));
  EXPECT_EQ(least_nat_root({0, 0, 1}, 10), BigInt(0));
  EXPECT_FALSE(least_nat_root({5}, 10).has_value());
}

TEST(FindNatWitness, ExistentialFormulas) {
  const auto even = canonical_form(parse_formula("E y0 (y0+y0=x0)"));
  EXPECT_TRUE(find_nat_witness(even, {BigInt(10)}, 5).has_value());
  EXPECT_EQ((*find_nat_witness(even, {BigInt(10)}, 5))[0], 5);
  EXPECT_FALSE(find_nat_witness(even, {BigInt(7)}, 50).has_value());
  const auto two = canonical_form(parse_formula("E y0 E y1 (y0*y1=x0+1)"));
  EXPECT_TRUE(find_nat_witness(two, {BigInt(11)}, 20).has_value());
}
