#include <gtest/gtest.h>

#include "latreg/model_parser.hpp"

using namespace latreg;

namespace {
const Direction one = Direction::unity();
const Direction x = Direction::column("x");
const Direction y = Direction::column("y");

std::size_t error_position(const std::string& expr) {
  try {
    parse_model(expr);
  } catch (const ModelParseError& e) {
    return e.position();
  }
  ADD_FAILURE() << "no parse error for '" << expr << "'";
  return 0;
}
}  // namespace

TEST(ModelParser, Models) {
  EXPECT_EQ(parse_model("1 = x + y"), (ModelSpec{one, {x, y}}));
  EXPECT_EQ(parse_model("y = 1 + x"), (ModelSpec{y, {one, x}}));
  EXPECT_EQ(parse_model("1=x+y+x*y"), (ModelSpec{one, {x, y, x * y}}));
  EXPECT_EQ(parse_model("  y =  1 "), (ModelSpec{y, {one}}));
  EXPECT_EQ(parse_model("1 = y*x"), (ModelSpec{one, {x * y}}));
  EXPECT_EQ(parse_model("wind_speed = 1 + temp.c"),
            (ModelSpec{Direction::column("wind_speed"), {one, Direction::column("temp.c")}}));
}

TEST(ModelParser, ErrorPositions) {
  EXPECT_EQ(error_position("1 x + y"), 2u);
  EXPECT_EQ(error_position("1 = x + "), 8u);
  EXPECT_EQ(error_position("1 = x + 2"), 8u);
  EXPECT_EQ(error_position("1 = x $ y"), 6u);
  EXPECT_EQ(error_position("x*y = 1"), 0u);
  EXPECT_EQ(error_position("1 = x + x"), 8u);
  EXPECT_EQ(error_position("y = 1 + y"), 8u);
  EXPECT_EQ(error_position("1 = a + b + c + d"), 16u);
  EXPECT_EQ(error_position(""), 0u);
}

TEST(ModelParser, MessageHasCaret) {
  try {
    parse_model("1 = x + ?");
    FAIL();
  } catch (const ModelParseError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("position 8"), std::string::npos);
    EXPECT_NE(what.find("\n          ^"), std::string::npos);
  }
}
