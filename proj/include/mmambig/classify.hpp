#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mmambig/graph.hpp"
#include "mmambig/sentence.hpp"
#include "mmambig/temporal.hpp"

namespace mmambig {

enum class AmbiguityClass {
  Lexical,
  TemporalSemantic,
  Target,
  Gap,
  Analytic,
  Attachment,
  Unambiguous,
};

inline constexpr int kClassCount = 7;

const char* to_string(AmbiguityClass cls);
AmbiguityClass ambiguity_class_from_string(const std::string& name);

// A fired rule with the nodes/slots that witnessed it.
struct Evidence {
  AmbiguityClass cls = AmbiguityClass::Unambiguous;
  std::vector<std::string> witnesses;  // graph node ids or slot ids ("s<k>")
  std::string rule;                    // the instantiated condition
};

struct ClassificationReport {
  AmbiguityClass primary = AmbiguityClass::Unambiguous;
  std::vector<Evidence> evidences;
  SyntaxGraph graph;
  std::vector<std::string> descriptions;
};

// Detectors return one Evidence per witness combination; empty = not
// detected. All read the built graph plus the slot table.
std::vector<Evidence> detect_lexical(const SyntaxGraph& graph,
                                     const std::vector<ElementSlot>& slots,
                                     std::int64_t threshold);
std::vector<Evidence> detect_temporal_semantic(const SyntaxGraph& graph,
                                               const std::vector<ElementSlot>& slots,
                                               std::int64_t threshold);
std::vector<Evidence> detect_target(const SyntaxGraph& graph,
                                    const std::vector<ElementSlot>& slots,
                                    std::int64_t threshold);
std::vector<Evidence> detect_gap(const SyntaxGraph& graph,
                                 const std::vector<ElementSlot>& slots,
                                 std::int64_t threshold);
std::vector<Evidence> detect_analytic(const SyntaxGraph& graph,
                                      const std::vector<ElementSlot>& slots,
                                      std::int64_t threshold);
std::vector<Evidence> detect_attachment(const SyntaxGraph& graph,
                                        const std::vector<ElementSlot>& slots,
                                        std::int64_t threshold);

// Runs all six detectors and picks the primary class by precedence
// Gap > Attachment > Analytic > Lexical > Target > TemporalSemantic;
// Unambiguous iff nothing fired. All fired evidences are kept.
ClassificationReport classify(const MultimodalSentence& sentence,
                              std::int64_t threshold = kDefaultThreshold);

// Deterministic text rendering; first line is `primary=<class>`.
std::string report_to_text(const ClassificationReport& report);

}  // namespace mmambig
