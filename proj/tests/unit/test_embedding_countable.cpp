#include "redpow/embedding_countable.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace redpow;

namespace {

ElementEnumeration E(std::vector<const char*> v) {
  std::vector<PolyElem> out;
  for (auto s : v) out.push_back(PolyElem::parse(s));
  return ElementEnumeration(std::move(out));
}

bool has(const TrueEquationStream& s, const char* text) {
  const auto f = canonical_form(parse_formula(text));
  return std::any_of(s.entries.begin(), s.entries.end(), [&](const StreamEntry& e) { return e.equation == f; });
}

}  // namespace

TEST(ElementEnumeration, RejectsRepeats) { EXPECT_THROW(E({"X", "1", "X"}), std::invalid_argument); }

TEST(ElementEnumeration, DefaultOrder) {
  auto e = ElementEnumeration::default_order({PolyElem::parse("X+1"), PolyElem::parse("1"), PolyElem::parse("X"),
                                              PolyElem::parse("0")});
  EXPECT_EQ(e.at(1), PolyElem::parse("0"));
  EXPECT_EQ(e.at(2), PolyElem::parse("1"));
  EXPECT_EQ(e.at(3), PolyElem::parse("X"));
  EXPECT_EQ(e.at(4), PolyElem::parse("X+1"));
}

TEST(TrueEquations, AtomicFactsPresent) {
  const auto elems = E({"0", "1", "X", "X+1"});
  const auto s = generate_true_equations(elems, 30);
  EXPECT_EQ(s.entries.size(), 30u);
  EXPECT_TRUE(has(s, "x1=0"));
  EXPECT_TRUE(has(s, "x2*x2=x2"));
  EXPECT_TRUE(has(s, "x3+x2=x4"));
  EXPECT_EQ(s.entries.front().equation.text(), "0=x1");
}

TEST(TrueEquations, AllTrueAndDistinct) {
  const auto elems = E({"0", "1", "2", "X", "X+1", "2X"});
  const auto s = generate_true_equations(elems, 60);
  const auto values = elems.as_free_values();
  std::set<EquationForm> seen;
  for (const auto& e : s.entries) {
    EXPECT_TRUE(e.equation.is_quantifier_free());
    EXPECT_FALSE(e.equation.mentions_free(0));
    EXPECT_TRUE(seen.insert(e.equation).second) << e.equation.text();
    // Holds identically in Z[X].
    auto side = [&](const PolyForm& p) {
      PolyElem acc;
      for (const auto& [mono, c] : p.entries()) {
        PolyElem prod = PolyElem::constant(c);
        for (auto v : mono) prod = prod * values.at(v);
        acc = acc + prod;
      }
      return acc;
    };
    EXPECT_EQ(side(e.equation.lhs), side(e.equation.rhs)) << e.equation.text();
  }
}

TEST(TrueEquations, BudgetTooSmall) {
  EXPECT_THROW(generate_true_equations(E({"0", "1", "2", "X", "X+1", "2X"}), 3), BudgetExceeded);
}

TEST(TrueEquations, LoneNonstandardElementGivesAShortStream) {
  // p(X) = q(X) in Z[X] forces p = q, so only 0=0 is available.
  const auto s = generate_true_equations(E({"X"}), 10, 21);
  ASSERT_EQ(s.entries.size(), 1u);
  EXPECT_EQ(s.entries[0].equation.text(), "0=0");
}

TEST(TrueEquations, FillerLengthCap) {
  const auto s = generate_true_equations(E({"0", "1"}), 500, 7);
  EXPECT_LT(s.entries.size(), 500u);
  for (const auto& e : s.entries) EXPECT_LE(e.equation.length(), 7u);
}

TEST(Table, LinearScheduleEvaluatesAtN) {
  const auto elems = E({"0", "1", "X", "X+1"});
  const auto s = generate_true_equations(elems, 20);
  const auto t = build_table(elems, s, 30, Schedule::Linear);
  for (std::size_t n = 1; n <= 30; ++n) {
    EXPECT_EQ(t.value(n, 1), 0);
    EXPECT_EQ(t.value(n, 2), 1);
    EXPECT_EQ(t.value(n, 3), BigInt(n));
    EXPECT_EQ(t.value(n, 4), BigInt(n + 1));
  }
}

TEST(Table, QuadraticSchedule) {
  const auto elems = E({"X^2-X", "1"});
  const auto s = generate_true_equations(elems, 6);
  const auto t = build_table(elems, s, 5, Schedule::Quadratic);
  EXPECT_EQ(t.threshold, 2);
  EXPECT_EQ(t.eval_points, (std::vector<BigInt>{2, 4, 9, 16, 25}));
  EXPECT_EQ(t.value(3, 1), 72);
}

TEST(Embedding, VerifiesSmallRun) {
  const auto elems = E({"0", "1", "X", "X+1"});
  const auto s = generate_true_equations(elems, 20);
  const auto t = build_table(elems, s, 30, Schedule::Linear);
  const auto r = verify_embedding(t, elems, s);
  EXPECT_TRUE(r.ok()) << (r.failures.empty() ? "" : r.failures.front());
  EXPECT_TRUE(r.invalid_rows.empty());
  // 0 + 1 = 1
  auto fact = std::find_if(r.facts.begin(), r.facts.end(), [](const FactCertificate& f) {
    return f.op == FactCertificate::Op::Add && f.i == 1 && f.j == 2 && f.k == 2;
  });
  ASSERT_NE(fact, r.facts.end());
  EXPECT_TRUE(fact->from_row.has_value());
  // X and X+1 differ on every row.
  auto inj = std::find_if(r.injectivity.begin(), r.injectivity.end(),
                          [](const InjectivityCertificate& c) { return c.i == 3 && c.j == 4; });
  ASSERT_NE(inj, r.injectivity.end());
  EXPECT_EQ(inj->from_row, 1u);
  // 1 <= X from the first row where N_n >= 1.
  auto ord = std::find_if(r.order.begin(), r.order.end(),
                          [](const OrderCertificate& c) { return c.i == 2 && c.j == 3; });
  ASSERT_NE(ord, r.order.end());
  EXPECT_EQ(ord->from_row, 1u);
  for (const auto& sc : r.standard) EXPECT_EQ(sc.from_row, 1u);
}

TEST(Embedding, DetectsBrokenTable) {
  const auto elems = E({"0", "1", "X"});
  const auto s = generate_true_equations(elems, 8);
  auto t = build_table(elems, s, 10, Schedule::Linear);
  t.rows.back()[1] = 5;  // 1 no longer maps to 1 in the last row
  const auto r = verify_embedding(t, elems, s);
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.invalid_rows, (std::vector<std::size_t>{10}));
}

TEST(Growth, GrowthAndStabilization) {
  const auto elems = E({"0", "3", "X"});
  const auto s = generate_true_equations(elems, 10);
  const auto t = build_table(elems, s, 120, Schedule::Linear);
  const auto r = check_growth(t, elems, 100);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.entries[0].value, 0);
  EXPECT_EQ(r.entries[1].value, 3);
  EXPECT_EQ(r.entries[2].from_row, 101u);
  const auto short_table = build_table(elems, s, 50, Schedule::Linear);
  EXPECT_FALSE(check_growth(short_table, elems, 100).ok());
}

TEST(Schedule, Names) {
  EXPECT_EQ(parse_schedule("linear"), Schedule::Linear);
  EXPECT_EQ(schedule_name(Schedule::Quadratic), "quadratic");
  EXPECT_THROW(parse_schedule("cubic"), std::invalid_argument);
}
