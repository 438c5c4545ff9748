#include "doctest.h"
#include "kpasep/word.hpp"

#include <stdexcept>

using namespace kpasep;

TEST_CASE("word parsing and rendering") {
  CHECK(to_string(parse_word("daaddedae")) == "daaddedae");
  CHECK(to_string(parse_word("a1a1e")) == "aae");
  CHECK(to_string(parse_word("a2da1ea2a1eed")) == "a2da1ea2a1eed");
  CHECK_THROWS_AS(parse_word("dx"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("a0"), std::invalid_argument);
  CHECK_THROWS_AS(check_word(parse_word("a2"), 2), std::invalid_argument);
  CHECK_NOTHROW(check_word(parse_word("a2"), 3));
}

TEST_CASE("letter order and inversions") {
  CHECK(word_less(parse_word("d"), parse_word("a")));
  CHECK(word_less(parse_word("a1"), parse_word("a2")));
  CHECK(word_less(parse_word("a2"), parse_word("e")));
  CHECK(inversions(parse_word("de")) == 1);
  CHECK(inversions(parse_word("dae")) == 3);
  CHECK(inversions(parse_word("ea")) == 0);
  CHECK(inversions(parse_word("a1a2")) == 0);
  CHECK(inversions(parse_word("a2a1")) == 1);
  CHECK(sector_of(parse_word("a2da1ea2a1eed"), 3) == std::vector<int>{2, 2});
}
