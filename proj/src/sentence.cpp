#include "mmambig/sentence.hpp"

#include <algorithm>
#include <set>

namespace mmambig {

std::vector<std::string> validate_sentence(const MultimodalSentence& sentence,
                                           const Grammar* grammar) {
  std::vector<std::string> violations;
  auto flag = [&](const std::string& message) { violations.push_back(message); };

  for (const auto& slot : sentence.slots) {
    std::string where = "slot s" + std::to_string(slot.id);
    if (!slot.time.valid()) flag(where + ": start <= end violated");
    if (slot.time.start < 0) flag(where + ": negative start time");
    if (slot.mod.empty()) flag(where + ": empty modality");
    if (slot.repr.empty()) flag(where + ": empty representation");
    if (slot.concepts.empty()) flag(where + ": empty concepts");
    for (const auto& c : slot.concepts)
      if (c.empty()) flag(where + ": empty concept name");
    if (slot.role.empty()) flag(where + ": no syntactic role assigned");
    else if (grammar && !grammar->is_terminal(slot.role))
      flag(where + ": role `" + slot.role + "` is not a grammar terminal");
  }

  std::set<int> ids;
  for (const auto& slot : sentence.slots)
    if (!ids.insert(slot.id).second)
      flag("duplicate slot id s" + std::to_string(slot.id));

  for (std::size_t i = 1; i < sentence.slots.size(); ++i) {
    const auto& prev = sentence.slots[i - 1];
    const auto& cur = sentence.slots[i];
    bool ordered = prev.time.start < cur.time.start ||
                   (prev.time.start == cur.time.start && prev.input_index <= cur.input_index);
    if (!ordered)
      flag("slots s" + std::to_string(prev.id) + " and s" + std::to_string(cur.id) +
           " are not ordered by start time");
  }

  if (sentence.interpretation_map) {
    const auto& map = *sentence.interpretation_map;
    if (map.size() != sentence.trees.size())
      flag("interpretation map does not cover every tree");
    std::set<int> seen;
    for (int target : map) {
      if (target < 0 || target >= static_cast<int>(sentence.descriptions.size()))
        flag("interpretation map points past the descriptions");
      else if (!seen.insert(target).second)
        flag("interpretation map is not injective");
    }
    if (seen.size() != sentence.descriptions.size())
      flag("interpretation map does not reach every description");
  }

  return violations;
}

}  // namespace mmambig
