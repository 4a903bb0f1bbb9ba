#include "redpow/json_io.hpp"
#include "redpow/render.hpp"

#include <gtest/gtest.h>

using namespace redpow;

TEST(Json, BigIntSwitchesToStringWhenLarge) {
  EXPECT_EQ(big_to_json(BigInt(42)), json(42));
  const BigInt huge = BigInt(1) << 100;
  EXPECT_TRUE(big_to_json(huge).is_string());
  EXPECT_EQ(big_from_json(big_to_json(huge)), huge);
  EXPECT_EQ(big_from_json(json(-7)), BigInt(-7));
}

TEST(Json, PolyRoundTripAndAlternateSpellings) {
  const auto p = PolyElem::parse("2X^2-X+3");
  EXPECT_EQ(poly_from_json(poly_to_json(p)), p);
  EXPECT_EQ(poly_from_json(json("2X^2-X+3")), p);
  EXPECT_EQ(poly_from_json(json(5)), PolyElem::parse("5"));
}

TEST(Json, CustomFamilyRoundTrip) {
  const json j = json::parse(R"({"sets":[{"elements":[0,1],"from":4},{"elements":[3],"from":null}],"tail":"tails"})");
  const auto f = family_from_json(j);
  EXPECT_TRUE(f.contains(0, 1));
  EXPECT_TRUE(f.contains(0, 9));
  EXPECT_FALSE(f.contains(0, 2));
  EXPECT_TRUE(f.contains(1, 3));
  EXPECT_FALSE(f.contains(1, 4));
  EXPECT_TRUE(f.contains(5, 5));
  EXPECT_FALSE(f.contains(5, 4));
  EXPECT_EQ(family_to_json(f), j);
  EXPECT_EQ(family_to_json(RegularFamily::diagonal()), json("diagonal"));
}

TEST(Json, SystemAndAssignment) {
  const auto sys = system_from_json(json::array({"x0+1=x1", "x1*x1=x0+x0"}));
  EXPECT_EQ(sys.equations.size(), 2u);
  EXPECT_EQ(sys.var_map, (std::vector<std::uint32_t>{0, 1}));
  const json a = json::parse(R"({"x0":3,"x1":"123456789012345678901234567890"})");
  const auto sigma = assignment_from_json(a);
  EXPECT_EQ(sigma.at(0), BigInt(3));
  EXPECT_EQ(assignment_to_json(sigma), a);
  EXPECT_THROW(assignment_from_json(json::parse(R"({"x0":"X"})")), std::exception);
  EXPECT_THROW(system_from_json(json::array({"x0+=1"})), SyntaxError);
}

namespace {

EmbedArtifact small_artifact() {
  auto elems = ElementEnumeration::default_order({PolyElem::parse("0"), PolyElem::parse("1"), PolyElem::parse("X")});
  auto stream = generate_true_equations(elems, 20);
  auto table = build_table(elems, stream, 6);
  return {std::move(elems), std::move(stream), std::move(table)};
}

}  // namespace

TEST(Json, EmbedArtifactRoundTrip) {
  const auto a = small_artifact();
  const json j = to_json(a);
  const auto back = embed_artifact_from_json(j);
  EXPECT_EQ(to_json(back).dump(), j.dump());
  EXPECT_EQ(back.table.rows, a.table.rows);
  EXPECT_EQ(j.at("table").at("rows").size(), 6u);
}

TEST(Render, TextAndCsv) {
  const auto a = small_artifact();
  const auto csv = render_table_csv(a);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "row,m1,m2,m3");
  EXPECT_NE(csv.find("\nP1,0,1,"), std::string::npos);
  const auto text = render_table_text(a);
  EXPECT_NE(text.find("m3"), std::string::npos);
  EXPECT_NE(text.find("P6"), std::string::npos);
  EXPECT_NE(text.find("-+-"), std::string::npos);
}

TEST(Render, UFamilyListsEachLevel) {
  UFamily fam(256);
  const auto out = render_ufamily(fam, OrdinalCNF::parse("w"), 3);
  EXPECT_EQ(std::count(out.begin(), out.end(), '\n'), 4);
  EXPECT_NE(out.find("{ω}"), std::string::npos);
}
