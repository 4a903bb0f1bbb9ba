#include "redpow/ordinal.hpp"
#include "redpow/ufamily.hpp"

#include <gtest/gtest.h>

using namespace redpow;

namespace {
OrdinalCNF O(const char* s) { return OrdinalCNF::parse(s); }
OrdinalSet Set(std::vector<const char*> v) {
  OrdinalSet out;
  for (auto s : v) out.push_back(O(s));
  return out;
}
}  // namespace

TEST(Ordinal, ParseAndPrint) {
  EXPECT_EQ(O("w^2*3+w*2+5").to_string(), "w^2*3+w*2+5");
  EXPECT_EQ(O("w^2*3+w*2+5").pretty(), "\xcf\x89^2\xc2\xb7" "3+\xcf\x89\xc2\xb7" "2+5");
  EXPECT_EQ(O("0"), OrdinalCNF{});
  EXPECT_EQ(O("7"), OrdinalCNF::finite(7));
  EXPECT_EQ(O("\xcf\x89+1"), O("w+1"));
  EXPECT_EQ(O(" w * 2 "), OrdinalCNF::omega_power(1, 2));
  EXPECT_THROW(O("w+w^2"), std::invalid_argument);
  EXPECT_THROW(O("w+w"), std::invalid_argument);
  EXPECT_THROW(O("w*0"), std::invalid_argument);
  EXPECT_THROW(O("3+0"), std::invalid_argument);
  EXPECT_THROW(O("w^"), std::invalid_argument);
  EXPECT_THROW(O(""), std::invalid_argument);
  EXPECT_EQ(parse_ordinal_list("0,1,2,w,w+1").size(), 5u);
}

TEST(Ordinal, Order) {
  const auto v = Set({"0", "1", "2", "3", "w", "w+1", "w*2", "w*2+5", "w^2", "w^2+w+1", "w^3"});
  for (std::size_t i = 0; i + 1 < v.size(); ++i) EXPECT_LT(v[i], v[i + 1]) << v[i].to_string();
}

TEST(Ordinal, Classification) {
  EXPECT_TRUE(O("w+1").is_successor());
  EXPECT_TRUE(O("w*2").is_limit());
  EXPECT_FALSE(O("0").is_limit());
  EXPECT_FALSE(O("0").is_successor());
  EXPECT_EQ(O("w+1").predecessor(), O("w"));
  EXPECT_EQ(O("w").successor(), O("w+1"));
  EXPECT_EQ(O("1").predecessor(), O("0"));
  EXPECT_THROW(O("w").predecessor(), std::invalid_argument);
}

TEST(FundamentalSequence, Examples) {
  EXPECT_EQ(fundamental_sequence(O("w"), 3), O("4"));
  EXPECT_EQ(fundamental_sequence(O("w^2"), 2), O("w*3"));
  EXPECT_EQ(fundamental_sequence(O("w*2"), 1), O("w+2"));
  EXPECT_EQ(fundamental_sequence(O("w^2+w"), 0), O("w^2+1"));
  EXPECT_THROW(fundamental_sequence(O("w+1"), 0), NotALimit);
  EXPECT_THROW(fundamental_sequence(O("0"), 0), NotALimit);
}

TEST(FundamentalSequence, IncreasingAndBelow) {
  for (const char* s : {"w", "w*2", "w^2", "w^2+w", "w^3*2"}) {
    const auto d = O(s);
    for (std::uint64_t i = 0; i < 10; ++i) {
      EXPECT_LT(fundamental_sequence(d, i), fundamental_sequence(d, i + 1));
      EXPECT_LT(fundamental_sequence(d, i), d);
    }
  }
}

TEST(UFamily, Zero) {
  UFamily fam(200);
  for (std::size_t n = 0; n <= 200; ++n) EXPECT_EQ(fam.u(O("0"), n), Set({"0"}));
  EXPECT_THROW(fam.u(O("0"), 201), HorizonExceeded);
}

TEST(UFamily, SuccessorExamples) {
  UFamily fam(200);
  for (std::size_t n = 0; n < 3; ++n) EXPECT_EQ(fam.u(O("1"), n), Set({"1"}));
  for (std::size_t n = 3; n <= 200; ++n) EXPECT_EQ(fam.u(O("1"), n), Set({"0", "1"}));
  EXPECT_EQ(fam.plan(O("2")).threshold, 5u);
  EXPECT_EQ(fam.plan(O("3")).threshold, 7u);
  EXPECT_EQ(fam.u(O("2"), 5), Set({"0", "1", "2"}));
  EXPECT_EQ(fam.plan(O("w+1")).threshold, 7u);
}

TEST(UFamily, OmegaExample) {
  UFamily fam(400);
  const auto& p = fam.plan(O("w"));
  ASSERT_GE(p.starts.size(), 2u);
  EXPECT_EQ(p.starts[0], 5u);
  EXPECT_EQ(p.starts[1], 16u);
  EXPECT_EQ(p.deltas[0], O("1"));
  EXPECT_EQ(fam.u(O("w"), 4), Set({"w"}));
  EXPECT_EQ(fam.u(O("w"), 5), Set({"0", "1", "w"}));
  EXPECT_EQ(fam.u(O("w"), 16), Set({"0", "1", "2", "w"}));
  for (std::size_t i = 0; i < p.starts.size(); ++i) {
    const std::size_t hi = i + 1 < p.starts.size() ? p.starts[i + 1] : 401;
    for (std::size_t n = p.starts[i]; n < hi; ++n) {
      OrdinalSet expect = fam.u(p.deltas[i], n);
      expect.push_back(O("w"));
      EXPECT_EQ(fam.u(O("w"), n), expect) << n;
    }
  }
}

TEST(LemmaClauses, AlphaOne) {
  UFamily fam(100);
  const auto r = check_lemma_clauses(fam, O("1"), 10, Set({"0", "1"}));
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.entries[0].n, 3u);
}

TEST(LemmaClauses, AlphaZero) {
  UFamily fam(100);
  const auto r = check_lemma_clauses(fam, O("0"), 10, Set({"0"}));
  EXPECT_TRUE(r.ok());
  ASSERT_EQ(r.ratios.size(), 3u);
  EXPECT_EQ(r.ratios[2].denominator, 8u);
  EXPECT_EQ(r.ratios[2].from_n, 8u);
}

TEST(LemmaClauses, OmegaPlusOneCoherence) {
  UFamily fam(512);
  const auto r = check_lemma_clauses(fam, O("w+1"), 64, standard_notation_set());
  EXPECT_TRUE(r.ok());
  for (std::size_t n = 0; n <= 64; ++n) {
    const auto& s = fam.u(O("w+1"), n);
    if (s.size() < 2) continue;
    // Largest element below w+1 is w, whose own family is the cut.
    EXPECT_EQ(s[s.size() - 2], O("w"));
    EXPECT_EQ(fam.u(O("w"), n), OrdinalSet(s.begin(), s.end() - 1));
  }
}

TEST(LemmaClauses, FullNotationSet) {
  UFamily fam(1024);
  for (const auto& a : standard_notation_set()) {
    const auto r = check_lemma_clauses(fam, a, 64, standard_notation_set());
    EXPECT_TRUE(r.ok()) << a.to_string() << ": " << (r.violations.empty() ? "" : r.violations.front().detail);
  }
}

TEST(LemmaClauses, DetectsViolations) {
  UFamily fam(20);
  // 3 is never an element of u^w_n for n <= 20.
  const auto r = check_lemma_clauses(fam, O("w"), 10, Set({"3"}));
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.violations.front().clause, "iii");
  EXPECT_THROW(check_lemma_clauses(fam, O("w"), 20, {}), HorizonExceeded);
}
