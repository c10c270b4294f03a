#include <doctest.h>

#include "fixtures.hpp"
#include "mmambig/classify.hpp"
#include "mmambig/core.hpp"
#include "mmambig/sentence.hpp"

using namespace mmambig;

TEST_CASE("time intervals") {
  CHECK(TimeInterval{3, 5}.valid());
  CHECK(TimeInterval{3, 3}.valid());
  CHECK_FALSE(TimeInterval{5, 3}.valid());
  CHECK(TimeInterval{0, 2}.intersects({2, 9}));
  CHECK_FALSE(TimeInterval{0, 2}.intersects({3, 9}));
  CHECK(TimeInterval{0, 2}.separation({5, 9}) == 3);
  CHECK(TimeInterval{5, 9}.separation({0, 2}) == 3);
  CHECK(TimeInterval{0, 5}.separation({3, 9}) <= 0);
}

TEST_CASE("expand_slot yields one element per concept") {
  ElementSlot slot;
  slot.id = 3;
  slot.mod = "sketch";
  slot.repr = "river_road";
  slot.time = {3, 5};
  slot.role = "nn";
  slot.concepts = {"river", "road"};

  auto elements = expand_slot(slot);
  REQUIRE(elements.size() == 2);
  CHECK(elements[0].concept_name == "river");
  CHECK(elements[1].concept_name == "road");
  for (const auto& e : elements) {
    CHECK(e.mod == slot.mod);
    CHECK(e.repr == slot.repr);
    CHECK(e.time == slot.time);
    CHECK(e.role == slot.role);
  }
}

TEST_CASE("validate_sentence accepts a well-formed built sentence") {
  auto sentence = fixtures::load_case("lexical");
  CHECK(validate_sentence(sentence, &fixtures::grammar()).empty());
}

TEST_CASE("validate_sentence reports violated invariants") {
  MultimodalSentence sentence;
  ElementSlot bad;
  bad.id = 0;
  bad.mod = "speech";
  bad.repr = "x";
  bad.time = {5, 3};
  bad.role = "nn";
  sentence.slots.push_back(bad);

  auto violations = validate_sentence(sentence);
  REQUIRE(violations.size() >= 2);
  bool saw_interval = false, saw_concepts = false;
  for (const auto& v : violations) {
    if (v.find("start <= end") != std::string::npos) saw_interval = true;
    if (v.find("empty concepts") != std::string::npos) saw_concepts = true;
  }
  CHECK(saw_interval);
  CHECK(saw_concepts);
}

TEST_CASE("validate_sentence flags interpretation map defects") {
  auto sentence = fixtures::load_case("lexical");
  REQUIRE(sentence.trees.size() == 1);
  sentence.interpretation_map = std::vector<int>{0, 0};
  auto violations = validate_sentence(sentence);
  CHECK_FALSE(violations.empty());
}

TEST_CASE("validation is deterministic") {
  auto sentence = fixtures::load_case("gap");
  auto first = validate_sentence(sentence, &fixtures::grammar());
  auto second = validate_sentence(sentence, &fixtures::grammar());
  CHECK(first == second);
}
