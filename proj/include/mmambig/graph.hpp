#pragma once

#include <string>
#include <vector>

#include "mmambig/core.hpp"
#include "mmambig/parse.hpp"

namespace mmambig {

enum class NodeKind { Internal, Terminal, Null };

struct GraphNode {
  std::string id;     // "n<k>" in topological order, roots first
  std::string label;  // tag for internals/nulls, role for terminals
  NodeKind kind = NodeKind::Internal;
  int slot_id = -1;             // Terminal only
  std::string concept_name;          // Terminal only
  std::vector<int> children;    // ordered child indices
};

// Acyclic merge of a parse forest with shared substructure collapsed.
// Each input tree corresponds to one root; common subtrees are one node.
struct SyntaxGraph {
  std::vector<GraphNode> nodes;
  std::vector<int> roots;
  std::vector<ElementSlot> slots;

  const ElementSlot* slot_by_id(int id) const;
  std::vector<std::vector<int>> parent_index() const;
  int index_of(const std::string& node_id) const;  // -1 when absent
};

// Bottom-up hash-consing merge. Terminal nodes are keyed by (slot, concept);
// a multi-concept slot fans out into one terminal node per concept under the
// shared preterminal. Throws EmptyForest on an empty tree list.
SyntaxGraph build_syntax_graph(const std::vector<SyntaxTree>& trees,
                               const std::vector<ElementSlot>& slots);

// Inverse of the merge: one tree per root, with terminal fan-outs folded
// back into their leaf groups. Result is sorted by canonical key.
std::vector<SyntaxTree> unfold(const SyntaxGraph& graph);

// All distinct label sequences along directed paths from `from` (or any
// root when from < 0) to `target`, excluding the source label and including
// the target's, lexicographically sorted. Throws NodeNotFound or
// PathLimitExceeded (more than 256 distinct sequences).
std::vector<std::vector<std::string>> syntactic_paths_to(const SyntaxGraph& graph,
                                                         int target,
                                                         int from = -1);

// Deterministic DOT rendering; byte-identical across runs for equal graphs.
std::string to_dot(const SyntaxGraph& graph);

}  // namespace mmambig
