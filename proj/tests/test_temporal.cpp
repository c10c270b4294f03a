#include <doctest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "mmambig/temporal.hpp"

using namespace mmambig;

namespace {

ElementSlot slot(int id, std::string mod, std::string repr, std::int64_t ts, std::int64_t te,
                 std::string role, std::vector<std::string> concepts, int input_index = -1) {
  ElementSlot s;
  s.id = id;
  s.mod = std::move(mod);
  s.repr = std::move(repr);
  s.time = {ts, te};
  s.role = std::move(role);
  s.concepts = std::move(concepts);
  s.input_index = input_index < 0 ? id : input_index;
  s.deictic = s.has_concept("deictic");
  return s;
}

TimeInterval random_interval(std::mt19937& rng) {
  std::int64_t start = static_cast<std::int64_t>(rng() % 40);
  return {start, start + static_cast<std::int64_t>(rng() % 10)};
}

}  // namespace

TEST_CASE("close_by on intersecting and separated intervals") {
  CHECK(close_by({12, 15}, {11, 14}, 0));
  CHECK(close_by({3, 7}, {3, 7}, 0));
  CHECK_FALSE(close_by({0, 2}, {5, 9}, 2));
  CHECK(close_by({0, 2}, {3, 9}, 2));
}

TEST_CASE("close_by is symmetric and monotone in the threshold") {
  std::mt19937 rng(20240811);
  for (int i = 0; i < 500; ++i) {
    TimeInterval a = random_interval(rng);
    TimeInterval b = random_interval(rng);
    std::int64_t theta = static_cast<std::int64_t>(rng() % 8);
    std::int64_t wider = theta + static_cast<std::int64_t>(rng() % 8);
    CHECK(close_by(a, b, theta) == close_by(b, a, theta));
    if (close_by(a, b, theta)) CHECK(close_by(a, b, wider));
  }
}

TEST_CASE("group_candidates merges identical keys and keeps concept order") {
  auto raw = fixtures::case_raw("lexical");
  auto slots = group_candidates(raw.entries);
  REQUIRE(slots.size() == 5);
  const ElementSlot* fused = nullptr;
  for (const auto& s : slots)
    if (s.repr == "river_road") fused = &s;
  REQUIRE(fused != nullptr);
  CHECK(fused->concepts == std::vector<std::string>{"river", "road"});
}

TEST_CASE("group_candidates trivial inputs") {
  CHECK(group_candidates({}).empty());

  std::vector<RawEntry> distinct;
  for (int i = 0; i < 4; ++i) {
    RawEntry e;
    e.mod = "speech";
    e.repr = "w" + std::to_string(i);
    e.ts = 3 * i;
    e.te = 3 * i + 1;
    e.conc = "c" + std::to_string(i);
    distinct.push_back(e);
  }
  auto slots = group_candidates(distinct);
  REQUIRE(slots.size() == 4);
  for (const auto& s : slots) CHECK(s.concepts.size() == 1);
}

TEST_CASE("group_candidates rejects conflicting explicit roles") {
  RawEntry a, b;
  a.mod = b.mod = "sketch";
  a.repr = b.repr = "shape";
  a.ts = b.ts = 0;
  a.te = b.te = 2;
  a.conc = "river";
  b.conc = "road";
  a.role = "nn";
  b.role = "jj";
  CHECK_THROWS_AS(group_candidates({a, b}), Error);
}

TEST_CASE("cooperation kinds") {
  auto spoken_lake = slot(0, "speech", "lake", 12, 15, "nn", {"lake"});
  auto drawn_lake = slot(1, "sketch", "sketch_lake", 11, 14, "nn", {"lake"});
  CHECK(cooperation(spoken_lake, drawn_lake, 2) == CooperationKind::Redundant);

  auto deictic = slot(2, "speech", "this", 4, 6, "dt", {"deictic"});
  auto drawn_river = slot(3, "sketch", "sketch_river", 5, 9, "nn", {"river"});
  CHECK(cooperation(deictic, drawn_river, 2) == CooperationKind::Complementary);

  auto far = slot(4, "sketch", "sketch_road", 40, 44, "nn", {"road"});
  CHECK(cooperation(spoken_lake, far, 2) == CooperationKind::Independent);
}

TEST_CASE("cooperation is symmetric") {
  std::mt19937 rng(77);
  const std::vector<std::string> mods = {"speech", "sketch"};
  const std::vector<std::string> concepts = {"lake", "river", "deictic"};
  for (int i = 0; i < 300; ++i) {
    auto a = slot(0, mods[rng() % 2], "ra", 0, 0, rng() % 2 ? "nn" : "dt",
                  {concepts[rng() % 3]});
    a.time = random_interval(rng);
    auto b = slot(1, mods[rng() % 2], "rb", 0, 0, rng() % 2 ? "nn" : "dt",
                  {concepts[rng() % 3]});
    b.time = random_interval(rng);
    CHECK(cooperation(a, b, 2) == cooperation(b, a, 2));
  }
}

TEST_CASE("bind_deictics resolves competition by nearness") {
  // "find this near this" plus one sketch: the later deictic overlaps the
  // sketch and wins it; the earlier one ends up unbound.
  std::vector<ElementSlot> slots_ = {
      slot(0, "speech", "find", 1, 3, "vb", {"find"}),
      slot(1, "speech", "this", 5, 7, "dt", {"deictic"}),
      slot(2, "speech", "near", 8, 9, "in", {"near"}),
      slot(3, "speech", "this", 10, 12, "dt", {"deictic"}),
      slot(4, "sketch", "sketch_lake", 10, 13, "nn", {"lake"}),
  };
  auto bindings = bind_deictics(slots_, kDefaultThreshold);
  REQUIRE(bindings.size() == 2);
  CHECK(bindings[0].deictic_slot == 1);
  CHECK_FALSE(bindings[0].bound_to.has_value());
  CHECK(bindings[1].deictic_slot == 3);
  REQUIRE(bindings[1].bound_to.has_value());
  CHECK(*bindings[1].bound_to == 4);
}

TEST_CASE("bind_deictics binds an overlapping sketch") {
  std::vector<ElementSlot> slots_ = {
      slot(0, "speech", "this", 6, 8, "dt", {"deictic"}),
      slot(1, "sketch", "sketch_river", 7, 13, "nn", {"river"}),
  };
  auto bindings = bind_deictics(slots_, kDefaultThreshold);
  REQUIRE(bindings.size() == 1);
  REQUIRE(bindings[0].bound_to.has_value());
  CHECK(*bindings[0].bound_to == 1);
}

TEST_CASE("bind_deictics with no deictics") {
  std::vector<ElementSlot> slots_ = {
      slot(0, "speech", "show", 0, 2, "vb", {"show"}),
      slot(1, "sketch", "sketch_lake", 1, 4, "nn", {"lake"}),
  };
  CHECK(bind_deictics(slots_, kDefaultThreshold).empty());
}

TEST_CASE("bind_deictics never shares a target") {
  std::mt19937 rng(424242);
  for (int round = 0; round < 200; ++round) {
    std::vector<ElementSlot> slots_;
    int n = 2 + static_cast<int>(rng() % 6);
    for (int i = 0; i < n; ++i) {
      bool deictic = rng() % 2 == 0;
      auto s = slot(i, rng() % 2 ? "speech" : "sketch", "r" + std::to_string(i), 0, 0,
                    deictic ? "dt" : "nn", {deictic ? "deictic" : "lake"});
      s.time = random_interval(rng);
      slots_.push_back(std::move(s));
    }
    auto bindings = bind_deictics(slots_, 3);
    std::set<int> targets;
    for (const auto& b : bindings) {
      if (!b.bound_to) continue;
      CHECK(targets.insert(*b.bound_to).second);
    }
  }
}

TEST_CASE("assemble_leaves reorders an intersecting bound pair") {
  // The sketch starts before the deictic but must parse right after it.
  auto raw = fixtures::case_raw("lexical");
  auto sentence = build_sentence(raw, fixtures::lexicon(), fixtures::grammar());
  std::vector<std::string> roles;
  for (const auto& leaf : sentence.leaves) roles.push_back(leaf.role);
  CHECK(roles == std::vector<std::string>{"vb", "dt", "nn", "in", "nn"});
}

TEST_CASE("assemble_leaves fuses redundant and cross-modal pairs") {
  auto unambiguous = fixtures::load_case("unambiguous");
  REQUIRE(unambiguous.leaves.size() == 5);
  CHECK(unambiguous.leaves[4].slot_ids.size() == 2);

  auto temporal = fixtures::load_case("temporal_semantic");
  std::vector<std::string> roles;
  for (const auto& leaf : temporal.leaves) roles.push_back(leaf.role);
  CHECK(roles == std::vector<std::string>{"dt", "vb", "dt", "nn"});
  CHECK(temporal.leaves[3].slot_ids.size() == 2);
}

TEST_CASE("assemble_leaves keeps a unit-bound slot out of fusion") {
  auto attachment = fixtures::load_case("attachment");
  std::vector<std::string> roles;
  for (const auto& leaf : attachment.leaves) roles.push_back(leaf.role);
  CHECK(roles == std::vector<std::string>{"vb", "dt", "nn", "in", "nn", "in", "nn"});
  for (const auto& leaf : attachment.leaves) CHECK(leaf.slot_ids.size() == 1);
}
