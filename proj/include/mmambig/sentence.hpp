#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mmambig/core.hpp"
#include "mmambig/graph.hpp"
#include "mmambig/parse.hpp"

namespace mmambig {

// The assembled unit: timed slots, their parse forest merged into a
// syntax-graph, and the candidate natural-language descriptions.
struct MultimodalSentence {
  std::vector<ElementSlot> slots;      // ordered by time.start, ties by input
  std::vector<Leaf> leaves;
  std::vector<SyntaxTree> trees;
  SyntaxGraph graph;
  std::vector<std::string> descriptions;
  // Tree index -> description index; present only when it can be injective
  // and cover every description (equal counts).
  std::optional<std::vector<int>> interpretation_map;
};

// Returns every violated invariant as a human-readable line; empty = ok.
// When a grammar is supplied, slot roles are also checked against its
// terminal alphabet.
std::vector<std::string> validate_sentence(const MultimodalSentence& sentence,
                                           const Grammar* grammar = nullptr);

}  // namespace mmambig
