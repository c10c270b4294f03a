#include "mmambig/classify.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace mmambig {

const char* to_string(AmbiguityClass cls) {
  switch (cls) {
    case AmbiguityClass::Lexical: return "Lexical";
    case AmbiguityClass::TemporalSemantic: return "TemporalSemantic";
    case AmbiguityClass::Target: return "Target";
    case AmbiguityClass::Gap: return "Gap";
    case AmbiguityClass::Analytic: return "Analytic";
    case AmbiguityClass::Attachment: return "Attachment";
    case AmbiguityClass::Unambiguous: return "Unambiguous";
  }
  return "Unambiguous";
}

AmbiguityClass ambiguity_class_from_string(const std::string& name) {
  std::string key;
  for (char c : name)
    if (c != '-' && c != '_') key += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (key == "lexical") return AmbiguityClass::Lexical;
  if (key == "temporalsemantic") return AmbiguityClass::TemporalSemantic;
  if (key == "target") return AmbiguityClass::Target;
  if (key == "gap") return AmbiguityClass::Gap;
  if (key == "analytic") return AmbiguityClass::Analytic;
  if (key == "attachment") return AmbiguityClass::Attachment;
  if (key == "unambiguous") return AmbiguityClass::Unambiguous;
  throw Error(ErrorCode::IoFailure, "unknown ambiguity class: " + name);
}

namespace {

std::string time_text(const TimeInterval& t) {
  return "(" + std::to_string(t.start) + "," + std::to_string(t.end) + ")";
}

std::string join_path(const std::vector<std::string>& path) {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += '.';
    out += path[i];
  }
  return out.empty() ? "<root>" : out;
}

struct TerminalPair {
  int left = 0;
  int right = 0;
  int parent = 0;
};

// Unordered terminal-node pairs sharing at least one parent; the witness
// parent is the first such node in id order.
std::vector<TerminalPair> same_parent_pairs(const SyntaxGraph& graph) {
  std::vector<TerminalPair> pairs;
  std::set<std::pair<int, int>> seen;
  for (std::size_t n = 0; n < graph.nodes.size(); ++n) {
    const auto& node = graph.nodes[n];
    if (node.kind != NodeKind::Internal) continue;
    std::vector<int> terminal_children;
    for (int child : node.children)
      if (graph.nodes[static_cast<std::size_t>(child)].kind == NodeKind::Terminal)
        terminal_children.push_back(child);
    for (std::size_t i = 0; i < terminal_children.size(); ++i) {
      for (std::size_t j = i + 1; j < terminal_children.size(); ++j) {
        int a = std::min(terminal_children[i], terminal_children[j]);
        int b = std::max(terminal_children[i], terminal_children[j]);
        if (!seen.insert({a, b}).second) continue;
        pairs.push_back(TerminalPair{a, b, static_cast<int>(n)});
      }
    }
  }
  return pairs;
}

struct PairView {
  const GraphNode* node_a;
  const GraphNode* node_b;
  const ElementSlot* slot_a;
  const ElementSlot* slot_b;
};

std::optional<PairView> pair_view(const SyntaxGraph& graph, const TerminalPair& pair) {
  PairView v;
  v.node_a = &graph.nodes[static_cast<std::size_t>(pair.left)];
  v.node_b = &graph.nodes[static_cast<std::size_t>(pair.right)];
  v.slot_a = graph.slot_by_id(v.node_a->slot_id);
  v.slot_b = graph.slot_by_id(v.node_b->slot_id);
  if (!v.slot_a || !v.slot_b) return std::nullopt;
  return v;
}

}  // namespace

std::vector<Evidence> detect_lexical(const SyntaxGraph& graph,
                                     const std::vector<ElementSlot>&, std::int64_t) {
  std::vector<Evidence> out;
  for (const auto& pair : same_parent_pairs(graph)) {
    auto v = pair_view(graph, pair);
    if (!v) continue;
    if (v->node_a->concept_name == v->node_b->concept_name) continue;
    if (v->slot_a->repr != v->slot_b->repr) continue;
    if (v->slot_a->mod != v->slot_b->mod) continue;
    if (v->node_a->label != v->node_b->label) continue;
    Evidence e;
    e.cls = AmbiguityClass::Lexical;
    e.witnesses = {v->node_a->id, v->node_b->id, graph.nodes[static_cast<std::size_t>(pair.parent)].id};
    e.rule = "concept(" + v->node_a->concept_name + ") != concept(" + v->node_b->concept_name +
             ") ; repr == `" + v->slot_a->repr + "` ; mod == `" + v->slot_a->mod +
             "` ; role == `" + v->node_a->label + "` ; shared parent " +
             graph.nodes[static_cast<std::size_t>(pair.parent)].id;
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<Evidence> detect_temporal_semantic(const SyntaxGraph& graph,
                                               const std::vector<ElementSlot>&,
                                               std::int64_t threshold) {
  std::vector<Evidence> out;
  for (const auto& pair : same_parent_pairs(graph)) {
    auto v = pair_view(graph, pair);
    if (!v) continue;
    if (v->node_a->concept_name == v->node_b->concept_name) continue;
    if (v->slot_a->repr == v->slot_b->repr) continue;
    if (v->slot_a->mod == v->slot_b->mod) continue;
    if (v->node_a->label != v->node_b->label) continue;
    if (!close_by(v->slot_a->time, v->slot_b->time, threshold)) continue;
    Evidence e;
    e.cls = AmbiguityClass::TemporalSemantic;
    e.witnesses = {v->node_a->id, v->node_b->id, graph.nodes[static_cast<std::size_t>(pair.parent)].id};
    e.rule = "concept(" + v->node_a->concept_name + ") != concept(" + v->node_b->concept_name +
             ") ; repr `" + v->slot_a->repr + "` != `" + v->slot_b->repr + "` ; mod `" +
             v->slot_a->mod + "` != `" + v->slot_b->mod + "` ; role == `" +
             v->node_a->label + "` ; CloseBy " + time_text(v->slot_a->time) + " " +
             time_text(v->slot_b->time);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<Evidence> detect_target(const SyntaxGraph& graph,
                                    const std::vector<ElementSlot>&, std::int64_t) {
  std::vector<Evidence> out;
  for (const auto& pair : same_parent_pairs(graph)) {
    auto v = pair_view(graph, pair);
    if (!v) continue;
    if (v->node_a->concept_name == v->node_b->concept_name) continue;
    if (v->slot_a->repr == v->slot_b->repr) continue;
    if (v->slot_a->mod != v->slot_b->mod) continue;
    if (v->node_a->label != v->node_b->label) continue;
    Evidence e;
    e.cls = AmbiguityClass::Target;
    e.witnesses = {v->node_a->id, v->node_b->id, graph.nodes[static_cast<std::size_t>(pair.parent)].id};
    e.rule = "concept(" + v->node_a->concept_name + ") != concept(" + v->node_b->concept_name +
             ") ; repr `" + v->slot_a->repr + "` != `" + v->slot_b->repr + "` ; mod == `" +
             v->slot_a->mod + "` ; role == `" + v->node_a->label + "`";
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<Evidence> detect_gap(const SyntaxGraph& graph,
                                 const std::vector<ElementSlot>& slots,
                                 std::int64_t threshold) {
  std::vector<Evidence> out;
  auto parents = graph.parent_index();
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    const auto& node = graph.nodes[i];
    if (node.kind != NodeKind::Null) continue;
    std::string parent_id = parents[i].empty()
                                ? std::string("<none>")
                                : graph.nodes[static_cast<std::size_t>(parents[i][0])].id;
    Evidence e;
    e.cls = AmbiguityClass::Gap;
    e.witnesses = {node.id, parent_id};
    e.rule = "null terminal with role `" + node.label + "` under " + parent_id;
    out.push_back(std::move(e));
  }
  for (const auto& binding : bind_deictics(slots, threshold)) {
    if (binding.bound_to) continue;
    const ElementSlot* slot = graph.slot_by_id(binding.deictic_slot);
    std::string repr = slot ? slot->repr : "?";
    Evidence e;
    e.cls = AmbiguityClass::Gap;
    e.witnesses = {"s" + std::to_string(binding.deictic_slot)};
    e.rule = "deictic s" + std::to_string(binding.deictic_slot) + " (`" + repr +
             "`) is not associated to any element";
    out.push_back(std::move(e));
  }
  return out;
}

namespace {

// A terminal's path multiplicity is attributed to attachment (and skipped
// by the analytic rule) when every root path runs through a pp and the
// label suffixes after the last pp coincide.
bool explained_by_pp(const std::vector<std::vector<std::string>>& paths) {
  std::set<std::vector<std::string>> suffixes;
  for (const auto& path : paths) {
    auto it = std::find(path.rbegin(), path.rend(), "pp");
    if (it == path.rend()) return false;
    suffixes.insert(std::vector<std::string>(it.base(), path.end()));
  }
  return suffixes.size() == 1;
}

}  // namespace

std::vector<Evidence> detect_analytic(const SyntaxGraph& graph,
                                      const std::vector<ElementSlot>&, std::int64_t) {
  std::vector<Evidence> out;
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    const auto& node = graph.nodes[i];
    if (node.kind != NodeKind::Terminal) continue;
    auto paths = syntactic_paths_to(graph, static_cast<int>(i));
    if (paths.size() < 2) continue;
    if (explained_by_pp(paths)) continue;
    Evidence e;
    e.cls = AmbiguityClass::Analytic;
    e.witnesses = {node.id};
    std::string rendered;
    for (std::size_t p = 0; p < paths.size(); ++p) {
      if (p) rendered += " | ";
      rendered += join_path(paths[p]);
    }
    e.rule = std::to_string(paths.size()) + " role paths reach " + node.id + ": " + rendered;
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<Evidence> detect_attachment(const SyntaxGraph& graph,
                                        const std::vector<ElementSlot>&, std::int64_t) {
  std::vector<Evidence> out;
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    const auto& node = graph.nodes[i];
    if (node.kind != NodeKind::Internal || node.label != "pp") continue;
    auto paths = syntactic_paths_to(graph, static_cast<int>(i));
    if (paths.size() < 2) continue;
    Evidence e;
    e.cls = AmbiguityClass::Attachment;
    e.witnesses = {node.id};
    std::string rendered;
    for (std::size_t p = 0; p < paths.size(); ++p) {
      if (p) rendered += " | ";
      rendered += join_path(paths[p]);
    }
    e.rule = "pp node " + node.id + " lies on " + std::to_string(paths.size()) +
             " role paths: " + rendered;
    out.push_back(std::move(e));
  }
  return out;
}

ClassificationReport classify(const MultimodalSentence& sentence, std::int64_t threshold) {
  if (sentence.trees.empty() || sentence.graph.nodes.empty())
    throw Error(ErrorCode::Unparseable, "sentence has no built syntax-graph");

  ClassificationReport report;
  report.graph = sentence.graph;
  report.descriptions = sentence.descriptions;

  struct Stage {
    AmbiguityClass cls;
    std::vector<Evidence> evidences;
  };
  std::vector<Stage> stages;
  stages.push_back({AmbiguityClass::Gap,
                    detect_gap(sentence.graph, sentence.slots, threshold)});
  stages.push_back({AmbiguityClass::Attachment,
                    detect_attachment(sentence.graph, sentence.slots, threshold)});
  stages.push_back({AmbiguityClass::Analytic,
                    detect_analytic(sentence.graph, sentence.slots, threshold)});
  stages.push_back({AmbiguityClass::Lexical,
                    detect_lexical(sentence.graph, sentence.slots, threshold)});
  stages.push_back({AmbiguityClass::Target,
                    detect_target(sentence.graph, sentence.slots, threshold)});
  stages.push_back({AmbiguityClass::TemporalSemantic,
                    detect_temporal_semantic(sentence.graph, sentence.slots, threshold)});

  report.primary = AmbiguityClass::Unambiguous;
  for (auto& stage : stages) {
    if (!stage.evidences.empty() && report.primary == AmbiguityClass::Unambiguous)
      report.primary = stage.cls;
    for (auto& e : stage.evidences) report.evidences.push_back(std::move(e));
  }
  return report;
}

std::string report_to_text(const ClassificationReport& report) {
  std::ostringstream out;
  out << "primary=" << to_string(report.primary) << "\n";
  out << "evidences=" << report.evidences.size() << "\n";
  for (std::size_t i = 0; i < report.evidences.size(); ++i) {
    const auto& e = report.evidences[i];
    out << "evidence " << i << ": class=" << to_string(e.cls) << " witnesses=";
    for (std::size_t w = 0; w < e.witnesses.size(); ++w) {
      if (w) out << ',';
      out << e.witnesses[w];
    }
    out << " rule=" << e.rule << "\n";
  }
  out << "descriptions=" << report.descriptions.size() << "\n";
  for (std::size_t i = 0; i < report.descriptions.size(); ++i)
    out << "description " << i << ": " << report.descriptions[i] << "\n";
  return out.str();
}

}  // namespace mmambig
