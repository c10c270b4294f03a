#include "mmambig/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace mmambig {

namespace {

struct Builder {
  const std::vector<ElementSlot>& slots;
  std::vector<GraphNode> nodes;
  std::map<std::string, int> interned;

  int intern(const std::string& key, GraphNode node) {
    auto it = interned.find(key);
    if (it != interned.end()) return it->second;
    int index = static_cast<int>(nodes.size());
    nodes.push_back(std::move(node));
    interned.emplace(key, index);
    return index;
  }

  int terminal_node(int slot_id, const std::string& role, const std::string& concept_value) {
    GraphNode node;
    node.label = role;
    node.kind = NodeKind::Terminal;
    node.slot_id = slot_id;
    node.concept_name = concept_value;
    return intern("t|" + std::to_string(slot_id) + "|" + concept_value, std::move(node));
  }

  int null_node(const std::string& role) {
    GraphNode node;
    node.label = role;
    node.kind = NodeKind::Null;
    return intern("0|" + role, std::move(node));
  }

  int internal_node(const std::string& label, const std::vector<int>& children) {
    GraphNode node;
    node.label = label;
    node.children = children;
    std::ostringstream key;
    key << "n|" << label;
    for (int c : children) key << '|' << c;
    return intern(key.str(), std::move(node));
  }

  int cons(const SyntaxTree& tree) {
    if (tree.is_leaf()) {
      std::vector<int> children;
      if (tree.leaf->is_null) {
        children.push_back(null_node(tree.leaf->role));
      } else {
        for (int slot_id : tree.leaf->slot_ids) {
          const ElementSlot* slot = nullptr;
          for (const auto& s : slots)
            if (s.id == slot_id) slot = &s;
          if (!slot)
            throw Error(ErrorCode::NodeNotFound,
                        "leaf references unknown slot " + std::to_string(slot_id));
          for (const auto& concept_name : slot->concepts)
            children.push_back(terminal_node(slot_id, tree.leaf->role, concept_name));
        }
      }
      return internal_node(tree.label, children);
    }
    std::vector<int> children;
    children.reserve(tree.children.size());
    for (const auto& child : tree.children) children.push_back(cons(child));
    return internal_node(tree.label, children);
  }
};

// Renumber so ids follow a root-first preorder; parents precede children.
SyntaxGraph renumber(std::vector<GraphNode> nodes, std::vector<int> roots,
                     std::vector<ElementSlot> slots) {
  std::vector<int> order;
  std::vector<int> position(nodes.size(), -1);
  auto visit = [&](auto&& self, int index) -> void {
    if (position[static_cast<std::size_t>(index)] >= 0) return;
    position[static_cast<std::size_t>(index)] = static_cast<int>(order.size());
    order.push_back(index);
    for (int child : nodes[static_cast<std::size_t>(index)].children) self(self, child);
  };
  for (int root : roots) visit(visit, root);

  SyntaxGraph graph;
  graph.slots = std::move(slots);
  graph.nodes.resize(order.size());
  for (std::size_t new_index = 0; new_index < order.size(); ++new_index) {
    GraphNode node = nodes[static_cast<std::size_t>(order[new_index])];
    for (int& child : node.children) child = position[static_cast<std::size_t>(child)];
    node.id = "n" + std::to_string(new_index);
    graph.nodes[new_index] = std::move(node);
  }
  graph.roots.reserve(roots.size());
  for (int root : roots) graph.roots.push_back(position[static_cast<std::size_t>(root)]);
  return graph;
}

void check_acyclic(const SyntaxGraph& graph) {
  // Kahn over the reachable subgraph; every node must drain.
  std::vector<int> indegree(graph.nodes.size(), 0);
  for (const auto& node : graph.nodes)
    for (int child : node.children) ++indegree[static_cast<std::size_t>(child)];
  std::vector<int> queue;
  for (std::size_t i = 0; i < graph.nodes.size(); ++i)
    if (indegree[i] == 0) queue.push_back(static_cast<int>(i));
  std::size_t drained = 0;
  while (!queue.empty()) {
    int current = queue.back();
    queue.pop_back();
    ++drained;
    for (int child : graph.nodes[static_cast<std::size_t>(current)].children)
      if (--indegree[static_cast<std::size_t>(child)] == 0) queue.push_back(child);
  }
  if (drained != graph.nodes.size())
    throw Error(ErrorCode::EmptyForest, "syntax-graph contains a cycle");
}

}  // namespace

const ElementSlot* SyntaxGraph::slot_by_id(int id) const {
  for (const auto& slot : slots)
    if (slot.id == id) return &slot;
  return nullptr;
}

std::vector<std::vector<int>> SyntaxGraph::parent_index() const {
  std::vector<std::vector<int>> parents(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (int child : nodes[i].children)
      parents[static_cast<std::size_t>(child)].push_back(static_cast<int>(i));
  return parents;
}

int SyntaxGraph::index_of(const std::string& node_id) const {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].id == node_id) return static_cast<int>(i);
  return -1;
}

SyntaxGraph build_syntax_graph(const std::vector<SyntaxTree>& trees,
                               const std::vector<ElementSlot>& slots) {
  if (trees.empty()) throw Error(ErrorCode::EmptyForest, "no trees to merge");
  Builder builder{slots, {}, {}};
  std::vector<int> roots;
  for (const auto& tree : trees) {
    int root = builder.cons(tree);
    if (std::find(roots.begin(), roots.end(), root) == roots.end()) roots.push_back(root);
  }
  SyntaxGraph graph = renumber(std::move(builder.nodes), std::move(roots), slots);
  check_acyclic(graph);
  return graph;
}

namespace {

SyntaxTree unfold_node(const SyntaxGraph& graph, int index) {
  const GraphNode& node = graph.nodes[static_cast<std::size_t>(index)];
  bool preterminal = !node.children.empty();
  for (int child : node.children)
    preterminal = preterminal &&
                  graph.nodes[static_cast<std::size_t>(child)].kind != NodeKind::Internal;
  if (preterminal) {
    Leaf leaf;
    leaf.role = node.label;
    for (int child : node.children) {
      const GraphNode& c = graph.nodes[static_cast<std::size_t>(child)];
      if (c.kind == NodeKind::Null) {
        leaf.is_null = true;
      } else if (std::find(leaf.slot_ids.begin(), leaf.slot_ids.end(), c.slot_id) ==
                 leaf.slot_ids.end()) {
        leaf.slot_ids.push_back(c.slot_id);
      }
    }
    return make_leaf_tree(leaf);
  }
  std::vector<SyntaxTree> children;
  children.reserve(node.children.size());
  for (int child : node.children) children.push_back(unfold_node(graph, child));
  return make_internal_tree(node.label, std::move(children));
}

}  // namespace

std::vector<SyntaxTree> unfold(const SyntaxGraph& graph) {
  std::map<std::string, SyntaxTree> by_key;
  for (int root : graph.roots) {
    SyntaxTree tree = unfold_node(graph, root);
    by_key.emplace(tree_key(tree), std::move(tree));
  }
  std::vector<SyntaxTree> out;
  out.reserve(by_key.size());
  for (auto& [key, tree] : by_key) out.push_back(std::move(tree));
  return out;
}

std::vector<std::vector<std::string>> syntactic_paths_to(const SyntaxGraph& graph,
                                                         int target, int from) {
  constexpr std::size_t kDistinctPathCap = 256;
  constexpr std::size_t kTraversalCap = 1u << 17;

  if (target < 0 || target >= static_cast<int>(graph.nodes.size()))
    throw Error(ErrorCode::NodeNotFound, "path target out of range");
  if (from >= static_cast<int>(graph.nodes.size()))
    throw Error(ErrorCode::NodeNotFound, "path source out of range");

  std::vector<int> sources;
  if (from < 0)
    sources = graph.roots;
  else
    sources.push_back(from);

  std::set<std::vector<std::string>> distinct;
  std::size_t visited = 0;
  std::vector<std::string> labels;
  auto walk = [&](auto&& self, int index) -> void {
    if (++visited > kTraversalCap)
      throw Error(ErrorCode::PathLimitExceeded, "path traversal limit exceeded");
    if (index == target) {
      distinct.insert(labels);
      if (distinct.size() > kDistinctPathCap)
        throw Error(ErrorCode::PathLimitExceeded,
                    "more than " + std::to_string(kDistinctPathCap) + " distinct paths");
      // A node can both be the target and lead to it again only through a
      // cycle, which build_syntax_graph excludes; stop here.
      return;
    }
    for (int child : graph.nodes[static_cast<std::size_t>(index)].children) {
      labels.push_back(graph.nodes[static_cast<std::size_t>(child)].label);
      self(self, child);
      labels.pop_back();
    }
  };
  for (int source : sources) walk(walk, source);

  return {distinct.begin(), distinct.end()};
}

std::string to_dot(const SyntaxGraph& graph) {
  std::ostringstream out;
  out << "digraph syntax_graph {\n";
  for (const auto& node : graph.nodes) {
    out << "  " << node.id;
    if (node.kind == NodeKind::Terminal) {
      const ElementSlot* slot = graph.slot_by_id(node.slot_id);
      out << " [shape=box, label=\"";
      if (slot) {
        out << slot->mod << " : " << slot->repr << " : " << node.concept_name << " : ("
            << slot->time.start << "," << slot->time.end << ")";
      } else {
        out << node.concept_name;
      }
      out << "\"]";
    } else if (node.kind == NodeKind::Null) {
      out << " [shape=box, style=dashed, label=\"null : " << node.label << "\"]";
    } else {
      out << " [label=\"" << node.label << "\"]";
    }
    out << ";\n";
  }
  for (const auto& node : graph.nodes) {
    for (int child : node.children)
      out << "  " << node.id << " -> " << graph.nodes[static_cast<std::size_t>(child)].id
          << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace mmambig
