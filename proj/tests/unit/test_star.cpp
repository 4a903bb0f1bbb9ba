#include "redpow/star.hpp"

#include <gtest/gtest.h>

using namespace redpow;

namespace {

OrdinalCNF O(const char* s) { return OrdinalCNF::parse(s); }

StarConfig config(std::vector<std::pair<const char*, const char*>> assign, std::size_t n_max, int cap) {
  StarConfig c;
  for (auto [o, p] : assign) {
    c.index.push_back(O(o));
    c.assignment[O(o)] = PolyElem::parse(p);
  }
  c.n_max = n_max;
  c.cap = BigInt(cap);
  c.horizon = 256;
  return c;
}

const StarFact* find_fact(const StarRun& r, StarFact::Op op, const char* a, const char* b, const char* g) {
  for (const auto& f : r.facts) {
    if (f.op == op && f.alpha == O(a) && f.beta == O(b) && f.gamma == O(g)) return &f;
  }
  return nullptr;
}

}  // namespace

TEST(FactFormula, Canonical) {
  EXPECT_EQ(fact_formula(StarFact::Op::Add, 0, 1, 1).text(), "0=x0");
  EXPECT_EQ(fact_formula(StarFact::Op::Mul, 1, 2, 2).text(), "x2=x1*x2");
  EXPECT_EQ(fact_formula(StarFact::Op::Add, 1, 1, 2).length(), 5u);
}

TEST(Star, ZeroForcesZero) {
  const auto run = run_star_construction(config({{"0", "0"}}, 8, 12));
  EXPECT_TRUE(run.ok());
  for (std::size_t n = 0; n <= 8; ++n) EXPECT_EQ(run.value(O("0"), n), BigInt(0));
}

TEST(Star, OneForcesOneOnceTheBudgetAllowsIt) {
  const auto run = run_star_construction(config({{"0", "1"}}, 8, 12));
  EXPECT_TRUE(run.ok());
  for (std::size_t n = 0; n <= 8; ++n) {
    const StarCell* c = run.cell(O("0"), n);
    ASSERT_NE(c, nullptr);
    if (c->budget.used >= 3) {
      EXPECT_EQ(c->value, BigInt(1)) << n;
    }
  }
  EXPECT_EQ(run.value(O("0"), 8), BigInt(1));
}

TEST(Star, SingletonBaseCaseHoldsEverywhere) {
  const auto run = run_star_construction(config({{"0", "X"}}, 10, 12));
  EXPECT_TRUE(run.ok());
  EXPECT_EQ(run.soundness_checked, 11u);
  EXPECT_TRUE(run.soundness_failures.empty());
  for (std::size_t n = 0; n <= 10; ++n) {
    EXPECT_TRUE(run.value(O("0"), n).has_value());
    EXPECT_EQ(run.cell(O("0"), n)->u.size(), 1u);
  }
}

TEST(Star, DeskRunCertifiesFacts) {
  const auto run = run_star_construction(config({{"0", "0"}, {"1", "1"}, {"2", "X"}}, 20, 12));
  EXPECT_TRUE(run.soundness_failures.empty());
  EXPECT_TRUE(run.coherence_failures.empty());
  const StarFact* f = find_fact(run, StarFact::Op::Add, "0", "1", "1");
  ASSERT_NE(f, nullptr);
  EXPECT_TRUE(f->certified());
  const auto& cert = *f->regular->certificate;
  EXPECT_EQ(*cert.n1, cert.n0 + 1);  // tails: A_{n0+1} misses {0..n0}
  const StarFact* m = find_fact(run, StarFact::Op::Mul, "1", "2", "2");
  ASSERT_NE(m, nullptr);
  EXPECT_TRUE(m->certified());
}

TEST(Star, BudgetAuditRunsWhereExact) {
  const auto run = run_star_construction(config({{"0", "0"}, {"1", "1"}}, 6, 12));
  EXPECT_GT(run.audits, 0u);
  EXPECT_TRUE(run.audit_failures.empty());
  for (const auto& c : run.cells) {
    if (c.u.size() > c.n) EXPECT_EQ(c.budget.used, 0);
  }
}

TEST(Star, RejectsIncompleteInput) {
  auto c = config({{"0", "0"}, {"w", "X"}}, 10, 12);
  EXPECT_THROW(run_star_construction(c), std::invalid_argument);  // 1 enters u^w_5
  auto d = config({{"0", "0"}}, 4, 12);
  d.index.push_back(O("1"));
  EXPECT_THROW(run_star_construction(d), std::invalid_argument);  // 1 has no element
}

TEST(Star, DiagonalFamily) {
  auto c = config({{"0", "0"}, {"1", "1"}, {"2", "X"}}, 20, 12);
  c.family = RegularFamily::diagonal();
  const auto run = run_star_construction(c);
  const StarFact* f = find_fact(run, StarFact::Op::Add, "0", "1", "1");
  ASSERT_NE(f, nullptr);
  EXPECT_TRUE(f->certified());
  EXPECT_EQ(*f->regular->certificate->n1, *f->n0 + 1);
}
