#include <gtest/gtest.h>

#include "dormant/error.hpp"
#include "dormant/json.hpp"

namespace {

using namespace dormant;

TEST(Json, ClassRoundTripCanonicalizes) {
  const RadiusClass c = RadiusClass::of(Prime(7), {2, 4, 6});
  EXPECT_EQ(to_json(c).dump(), R"({"elems":[0,2,4],"p":7})");
  EXPECT_EQ(radius_from_json(Json::parse(R"({"p":7,"elems":[6,2,4]})")), c);
  EXPECT_THROW((void)radius_from_json(Json::parse(R"({"p":7})")), InvalidInput);
  EXPECT_THROW((void)radius_from_json(Json::parse(R"({"p":8,"elems":[0,1]})")), InvalidInput);
}

TEST(Json, TripleRequiresSharedShape) {
  const Json ok = Json::parse(R"([{"p":5,"elems":[0,1]},{"p":5,"elems":[0,2]},{"p":5,"elems":[1,3]}])");
  const RadiiTriple t = triple_from_json(ok);
  EXPECT_EQ(to_json(t), Json::parse(R"([{"p":5,"elems":[0,1]},{"p":5,"elems":[0,2]},{"p":5,"elems":[0,2]}])"));
  const Json mixed = Json::parse(R"([{"p":5,"elems":[0,1]},{"p":5,"elems":[0,1,2]},{"p":5,"elems":[0,1]}])");
  EXPECT_THROW((void)triple_from_json(mixed), InvalidInput);
  EXPECT_THROW((void)triple_from_json(Json::array()), InvalidInput);
}

TEST(Json, BigIntegersBecomeStrings) {
  const Integer big = Integer(1) << 80;
  EXPECT_TRUE(to_json(big).is_string());
  EXPECT_EQ(integer_from_json(to_json(big)), big);
  EXPECT_EQ(to_json(Integer(56)), Json(56));
  EXPECT_THROW((void)integer_from_json(Json("x")), InvalidInput);
}

TEST(Json, BaseTableRecords) {
  const BaseTable t = BaseTable::build(Prime(5), 2);
  const Json j = to_json(t);
  ASSERT_EQ(j.size(), 8U);
  std::size_t ones = 0;
  for (const Json& rec : j) {
    EXPECT_EQ(rec.at("p"), 5);
    EXPECT_EQ(rec.at("n"), 2);
    if (rec.at("N") == 1) ++ones;
    EXPECT_EQ(triple_from_json(rec.at("triple")), triple_from_json(to_json(triple_from_json(rec.at("triple")))));
  }
  EXPECT_EQ(ones, 5U);
}

TEST(Json, OverrideFileFormatRoundTrip) {
  const BaseTable t = BaseTable::build(Prime(7), 3);
  Json records = Json::array();
  for (const Json& rec : to_json(t)) {
    if (rec.at("N") == 2) records.push_back(rec);
  }
  ASSERT_EQ(records.size(), 1U);
  const OverrideTable o = OverrideTable::from_json(records.dump());
  EXPECT_EQ(o.entries().size(), 1U);  // (w5, w5, w5) has a single ordering
}

TEST(Json, AxiomReport) {
  const Json j = to_json(check_axioms(Prime(5), 3));
  EXPECT_TRUE(j.at("passed").get<bool>());
  EXPECT_EQ(j.at("axioms").size(), 7U);
}

}  // namespace
