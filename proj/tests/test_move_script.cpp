#include <gtest/gtest.h>

#include "eqsig/error.hpp"
#include "eqsig/move_script.hpp"

using namespace eqsig;

namespace {

std::size_t error_position(const std::string& text) {
  try {
    parse_move_script(text);
  } catch (const ScriptError& e) {
    return e.position();
  }
  ADD_FAILURE() << "no error for: " << text;
  return 0;
}

}  // namespace

TEST(MoveScript, ParsesEachKind) {
  EXPECT_EQ(parse_move_script("B k=1 sign=+1"), (std::vector<MoveSpec>{TypeB{1, 1}}));
  EXPECT_EQ(parse_move_script("C sign=+1 color=bicolored"),
            (std::vector<MoveSpec>{TypeC{1, CrossingColor::Bicolored}}));
  EXPECT_EQ(parse_move_script("A1 k=4 sign=-1 color=unicolored"),
            (std::vector<MoveSpec>{TypeA1{4, -1, CrossingColor::Unicolored, std::nullopt}}));
  const auto two = parse_move_script("A2 i=1 j=4 sign=+1 color=bicolored eps=+1; A1 k=4 sign=1 color=unicolored");
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0], MoveSpec(TypeA2{1, 4, 1, CrossingColor::Bicolored, 1, false}));
  EXPECT_EQ(parse_move_script("A2 i=2 j=2 sign=-1 color=unicolored mixed=true"),
            (std::vector<MoveSpec>{TypeA2{2, 2, -1, CrossingColor::Unicolored, std::nullopt, true}}));
}

TEST(MoveScript, WhitespaceAndEmptyStatements) {
  EXPECT_EQ(parse_move_script("  B   k=2  sign=-1 ;; "), (std::vector<MoveSpec>{TypeB{2, -1}}));
  EXPECT_TRUE(parse_move_script("").empty());
  EXPECT_TRUE(parse_move_script(" ; ").empty());
}

TEST(MoveScript, Errors) {
  EXPECT_THROW(parse_move_script("A2 i=2 j=2 sign=-1 color=unicolored"), ScriptError);
  EXPECT_THROW(parse_move_script("A1 k=1 sign=+1 color=bicolored"), ScriptError);
  EXPECT_THROW(parse_move_script("A1 k=1 sign=+1 color=unicolored eps=+1"), ScriptError);
  EXPECT_THROW(parse_move_script("B k=1"), ScriptError);
  EXPECT_THROW(parse_move_script("B k=1 sign=2"), ScriptError);
  EXPECT_THROW(parse_move_script("B k=0 sign=1"), ScriptError);
  EXPECT_THROW(parse_move_script("B k=+1 sign=1"), ScriptError);
  EXPECT_THROW(parse_move_script("B k=1 sign=1 k=2"), ScriptError);
  EXPECT_THROW(parse_move_script("B k=1 sign=1 color=unicolored"), ScriptError);
  EXPECT_THROW(parse_move_script("D k=1"), ScriptError);
  EXPECT_THROW(parse_move_script("C sign=+1 color=purple"), ScriptError);
  EXPECT_THROW(parse_move_script("B k sign=1"), ScriptError);
  EXPECT_THROW(parse_move_script("A2 i=1 j=2 sign=1 color=unicolored mixed=maybe"), ScriptError);
}

TEST(MoveScript, ErrorPositions) {
  EXPECT_EQ(error_position("D k=1"), 0u);
  EXPECT_EQ(error_position("B k=1 sign=+1; B k=x sign=1"), 19u);  // offset of the bad value
  EXPECT_EQ(error_position("B k=1 sign=7"), 11u);
}

TEST(MoveScript, FormatRoundTrip) {
  const std::vector<MoveSpec> moves{
      TypeB{3, -1}, TypeA1{2, 1, CrossingColor::Bicolored, -1},
      TypeA2{1, 4, 1, CrossingColor::Bicolored, 1, false},
      TypeA2{2, 2, -1, CrossingColor::Unicolored, std::nullopt, true},
      TypeC{-1, CrossingColor::Unicolored}};
  EXPECT_EQ(format_move(moves[2]), "A2 i=1 j=4 sign=+1 color=bicolored eps=+1");
  EXPECT_EQ(parse_move_script(format_move_script(moves)), moves);
}
