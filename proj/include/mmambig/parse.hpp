#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mmambig/core.hpp"
#include "mmambig/grammar.hpp"

namespace mmambig {

// Ordered rooted parse tree. Leaf nodes carry the Leaf payload and use its
// role as their label; internal nodes match a grammar production.
struct SyntaxTree {
  std::string label;
  std::vector<SyntaxTree> children;
  std::optional<Leaf> leaf;

  bool is_leaf() const { return leaf.has_value(); }
};

SyntaxTree make_leaf_tree(const Leaf& leaf);
SyntaxTree make_internal_tree(std::string label, std::vector<SyntaxTree> children);

// Canonical serialization; equal trees produce equal keys.
std::string tree_key(const SyntaxTree& tree);

// Leaves of the tree, left to right.
std::vector<Leaf> tree_leaves(const SyntaxTree& tree);

struct ParseOptions {
  std::size_t max_trees = 64;
};

// All distinct parse trees of the leaf sequence deriving `goal`, sorted by
// canonical key. Empty when no derivation exists. Throws UnknownTag when a
// non-null leaf role is not a grammar terminal, TooManyParses past the cap.
std::vector<SyntaxTree> parse_forest(const std::vector<Leaf>& leaves,
                                     const Grammar& grammar,
                                     const std::string& goal,
                                     const ParseOptions& options = {});

// parse_forest when it succeeds; otherwise all parses obtained by inserting
// exactly one null leaf (any position, any terminal role).
std::vector<SyntaxTree> parse_with_gap(const std::vector<Leaf>& leaves,
                                       const Grammar& grammar,
                                       const std::string& goal,
                                       const ParseOptions& options = {});

}  // namespace mmambig
