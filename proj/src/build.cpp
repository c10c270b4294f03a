#include "mmambig/build.hpp"

#include <algorithm>
#include <numeric>

namespace mmambig {

MultimodalSentence build_sentence(const RawInput& raw, const Lexicon& lexicon,
                                  const Grammar& grammar, std::int64_t threshold,
                                  const ParseOptions& options) {
  MultimodalSentence sentence;
  sentence.descriptions = raw.sentences;
  sentence.slots = group_candidates(raw.entries);

  for (auto& slot : sentence.slots) {
    if (lexicon.marks_deictic(slot.repr)) slot.deictic = true;
    std::string resolved;
    for (const auto& concept_name : slot.concepts) {
      auto role = lexicon.role_of(slot.repr, concept_name, slot.role);
      if (!role)
        throw Error(ErrorCode::UnknownWord,
                    "no role for `" + slot.repr + "` (concept `" + concept_name + "`)");
      if (resolved.empty()) {
        resolved = *role;
      } else if (resolved != *role) {
        throw Error(ErrorCode::ConflictingRole,
                    "concepts of `" + slot.repr + "` resolve to roles `" + resolved +
                        "` and `" + *role + "`");
      }
    }
    slot.role = resolved;
  }

  std::stable_sort(sentence.slots.begin(), sentence.slots.end(),
                   [](const ElementSlot& a, const ElementSlot& b) {
                     if (a.time.start != b.time.start) return a.time.start < b.time.start;
                     return a.input_index < b.input_index;
                   });

  auto bindings = bind_deictics(sentence.slots, threshold);
  sentence.leaves = assemble_leaves(sentence.slots, bindings, threshold);
  sentence.trees = parse_with_gap(sentence.leaves, grammar, grammar.start, options);
  if (sentence.trees.empty())
    throw Error(ErrorCode::Unparseable, "no parse exists even with one null insertion");
  sentence.graph = build_syntax_graph(sentence.trees, sentence.slots);

  if (!sentence.descriptions.empty() &&
      sentence.trees.size() == sentence.descriptions.size()) {
    std::vector<int> identity(sentence.trees.size());
    std::iota(identity.begin(), identity.end(), 0);
    sentence.interpretation_map = std::move(identity);
  }
  return sentence;
}

}  // namespace mmambig
