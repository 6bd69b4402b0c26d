#include <gtest/gtest.h>

#include "steenrod/json_io.hpp"
#include "steenrod/random.hpp"

using namespace steenrod;

TEST(Json, PresentationRoundTrip) {
  const auto a = adjoin_epsilon(steenrod_dual(3, 2));
  EXPECT_EQ(*presentation_from_json(to_json(*a)), *a);
  const auto j = to_json(*make_algebra(2, {{"z1", 1, kNoCap}}));
  EXPECT_TRUE(j["generators"][0]["cap"].is_null());
}

TEST(Json, GroupElementRoundTrip) {
  Sampler rng(6);
  for (unsigned p : {2u, 3u}) {
    const auto a = sample_algebra(p, 3);
    for (int s = 0; s < 10; ++s) {
      const auto g = rng.group_element(a, 3);
      EXPECT_EQ(group_element_from_json(to_json(g)), g);
      const auto l = rng.group_element(a, 2, Flavor::at_level(1));
      EXPECT_EQ(group_element_from_json(to_json(l)), l);
    }
  }
}

TEST(Json, RejectsMalformedInput) {
  EXPECT_THROW(presentation_from_json(Json::parse(R"({"p": 2})")), std::invalid_argument);
  EXPECT_THROW(presentation_from_json(Json::parse(R"({"p": 2, "generators": [{"name": "z", "degree": 1, "cap": 0}]})")),
               std::invalid_argument);
  const auto a = steenrod_dual(3, 1);
  EXPECT_THROW(element_from_json(Json::parse(R"([{"coeff": 1, "exponents": [2, 0, 0]}])"), a), std::invalid_argument);
  EXPECT_THROW(element_from_json(Json::parse(R"([{"coeff": 1, "exponents": [1]}])"), a), std::invalid_argument);
  EXPECT_THROW(element_from_json(Json::parse(R"({"coeff": 1})"), a), std::invalid_argument);
}

TEST(Json, CoefficientsReduceModP) {
  const auto a = steenrod_dual(3, 1);
  const auto x = element_from_json(Json::parse(R"([{"coeff": -1, "exponents": [0, 0, 1]}])"), a);
  EXPECT_EQ(x, Element::generator(a, "x1").scaled(2));
}

TEST(Json, FiltrationLevels) {
  EXPECT_EQ(to_json(FiltrationLevel::bottom()), "bottom");
  EXPECT_EQ(to_json(FiltrationLevel::top()), "top");
  EXPECT_EQ(to_json(FiltrationLevel::twice(3)), 1.5);
}
