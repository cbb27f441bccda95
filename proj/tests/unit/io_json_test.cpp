#include <gtest/gtest.h>

#include "affinoid/catalog/fixtures.hpp"
#include "affinoid/errors.hpp"
#include "affinoid/io/json.hpp"
#include "affinoid/suite.hpp"

namespace affinoid {
namespace {

using io::Json;

TEST(GroupoidJson, CatalogRoundTrip) {
  for (const auto& id : catalog::groupoid_ids()) {
    const GroupoidData d = catalog::lookup(id);
    const Json j = io::groupoid_to_json(d);
    const GroupoidData back = io::groupoid_from_json(io::parse_text(j.dump(), id));
    EXPECT_EQ(back.name, d.name);
    EXPECT_EQ(back.src, d.src);
    EXPECT_EQ(back.mult, d.mult);
    EXPECT_EQ(back.comp_param, d.comp_param);
    EXPECT_EQ(back.splitting, d.splitting);
    EXPECT_EQ(io::groupoid_to_json(back).dump(), j.dump());
  }
}

TEST(GroupoidJson, ErrorsNameTheField) {
  Json j = io::groupoid_to_json(catalog::make_pair(1));
  j["inv"][1] = "x1 +";
  try {
    io::groupoid_from_json(j);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("groupoid.inv[1]"), std::string::npos) << e.what();
  }
  j = io::groupoid_to_json(catalog::make_pair(1));
  j.erase("comp_param");
  EXPECT_THROW(io::groupoid_from_json(j), ParseError);
  j = io::groupoid_to_json(catalog::make_pair(1));
  j["src"].push_back("x1");
  EXPECT_THROW(io::groupoid_from_json(j), ParseError);
}

TEST(FieldJson, FixturesRoundTrip) {
  for (const auto& e : catalog::entries())
    for (const auto& f : e.fixtures) {
      const auto kind = f.kind == catalog::FixtureKind::multivector ? io::FieldKind::mv
                        : f.kind == catalog::FixtureKind::form      ? io::FieldKind::form
                                                                    : io::FieldKind::tensor;
      const Json j = io::field_to_json(kind, f.field);
      const io::FieldInput back = io::field_from_json(io::parse_text(j.dump(), f.name), e.groupoid.dim_G);
      EXPECT_EQ(back.kind, kind);
      EXPECT_EQ(back.field, f.field) << e.id << "/" << f.name;
    }
}

TEST(FieldJson, UnsortedIndicesCarryTheirSign) {
  const Json j = io::parse_text(
      R"({"kind":"mv","dim":3,"degree":[2,0],"coeffs":[{"idx":[3,1],"poly":"x1"},{"idx":[1,3],"poly":"2"}]})", "t");
  const MultiVectorField m = io::field_from_json(j).multivector();
  EXPECT_EQ(m[0b101], parse_poly("2 - x1", 3));
  EXPECT_TRUE(m[0b011].is_zero());
}

TEST(FieldJson, RejectsMalformedEntries) {
  auto bad = [](const char* text) { return io::field_from_json(io::parse_text(text, "t"), 2); };
  EXPECT_THROW(bad(R"({"kind":"mv","dim":2,"degree":[2,0],"coeffs":[{"idx":[1,1],"poly":"1"}]})"), ParseError);
  EXPECT_THROW(bad(R"({"kind":"mv","dim":2,"degree":[1,0],"coeffs":[{"idx":[3],"poly":"1"}]})"), ParseError);
  EXPECT_THROW(bad(R"({"kind":"mv","dim":2,"degree":[1,0],"coeffs":[{"idx":[0],"poly":"1"}]})"), ParseError);
  EXPECT_THROW(bad(R"({"kind":"mv","dim":3,"degree":[1,0],"coeffs":[]})"), ParseError);
  EXPECT_THROW(bad(R"({"kind":"form","dim":2,"degree":[1,0],"coeffs":[]})"), ParseError);
  EXPECT_THROW(bad(R"({"kind":"mv","dim":2,"degree":[1,0],"coeffs":[{"idx":[1],"poly":"x3"}]})"), ParseError);
  EXPECT_THROW(bad(R"({"kind":"vector","dim":2,"degree":[1,0],"coeffs":[]})"), ParseError);
  EXPECT_THROW(io::parse_text(R"({"kind":"mv",)", "t"), ParseError);
}

TEST(FieldJson, ErrorNamesTheEntry) {
  try {
    io::field_from_json(io::parse_text(
        R"({"kind":"mv","dim":2,"degree":[1,0],"coeffs":[{"idx":[1],"poly":"1"},{"idx":[2],"poly":"1/0"}]})", "t"));
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("field.coeffs[1].poly"), std::string::npos) << e.what();
  }
}

TEST(PointJson, RationalsAreStrings) {
  const std::vector<Rational> p{Rational(-3, 2), Rational(0), Rational(7)};
  const Json j = io::to_json(p);
  EXPECT_EQ(j.dump(), R"(["-3/2","0","7"])");
  EXPECT_EQ(io::point_from_json(j, "p"), p);
}

TEST(Report, SchemaEchoesOptions) {
  CheckOptions o;
  o.seed = 9;
  o.mode = CheckMode::sampled;
  Report r{"check", "catalog:pair1", o, {{"c", "lem:hor1", "i", false, "d", {Rational(1, 3)}}}, {}};
  const Json j = report_to_json(r);
  EXPECT_EQ(j["schema"], "affinoid-report/1");
  EXPECT_EQ(j["seed"], 9);
  EXPECT_EQ(j["mode"], "sampled");
  EXPECT_EQ(j["pass"], false);
  EXPECT_EQ(j["checks"][0]["ref"], "lem:hor1");
  EXPECT_EQ(j["checks"][0]["witness"][0], "1/3");
  EXPECT_FALSE(j.contains("result"));
}

}  // namespace
}  // namespace affinoid
