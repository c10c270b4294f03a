#include "mmambig/parse.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace mmambig {

SyntaxTree make_leaf_tree(const Leaf& leaf) {
  SyntaxTree t;
  t.label = leaf.role;
  t.leaf = leaf;
  return t;
}

SyntaxTree make_internal_tree(std::string label, std::vector<SyntaxTree> children) {
  SyntaxTree t;
  t.label = std::move(label);
  t.children = std::move(children);
  return t;
}

namespace {

void tree_key_rec(const SyntaxTree& tree, std::ostringstream& out) {
  if (tree.is_leaf()) {
    out << '[' << tree.label << ':';
    if (tree.leaf->is_null) {
      out << '~';
    } else {
      for (std::size_t i = 0; i < tree.leaf->slot_ids.size(); ++i) {
        if (i) out << ',';
        out << tree.leaf->slot_ids[i];
      }
    }
    out << ']';
    return;
  }
  out << '(' << tree.label;
  for (const auto& child : tree.children) {
    out << ' ';
    tree_key_rec(child, out);
  }
  out << ')';
}

void tree_leaves_rec(const SyntaxTree& tree, std::vector<Leaf>& out) {
  if (tree.is_leaf()) {
    out.push_back(*tree.leaf);
    return;
  }
  for (const auto& child : tree.children) tree_leaves_rec(child, out);
}

// Packed chart cell key: (symbol, span begin, span end).
using CellKey = std::tuple<std::string, int, int>;

struct Derivation {
  int prod = -1;  // production index; -1 marks a leaf cell
  std::vector<CellKey> kids;

  bool operator==(const Derivation& other) const = default;
};

using Chart = std::map<CellKey, std::vector<Derivation>>;

Chart build_chart(const std::vector<Leaf>& leaves, const Grammar& grammar) {
  Chart chart;
  const int n = static_cast<int>(leaves.size());
  for (int i = 0; i < n; ++i)
    chart[{leaves[i].role, i, i + 1}].push_back(Derivation{});

  for (int len = 1; len <= n; ++len) {
    for (int i = 0; i + len <= n; ++i) {
      const int j = i + len;
      // Productions with at least two symbols, or a single terminal.
      for (std::size_t pi = 0; pi < grammar.productions.size(); ++pi) {
        const Production& p = grammar.productions[pi];
        const int k = static_cast<int>(p.rhs.size());
        if (k == 1 && grammar.is_nonterminal(p.rhs[0])) continue;

        std::vector<CellKey> kids(static_cast<std::size_t>(k));
        auto match = [&](auto&& self, int idx, int pos) -> void {
          if (idx == k) {
            if (pos == j) chart[{p.lhs, i, j}].push_back(Derivation{static_cast<int>(pi), kids});
            return;
          }
          const std::string& sym = p.rhs[static_cast<std::size_t>(idx)];
          const int remaining = k - idx - 1;
          if (grammar.is_terminal(sym)) {
            if (pos + 1 + remaining <= j && chart.count({sym, pos, pos + 1})) {
              kids[static_cast<std::size_t>(idx)] = {sym, pos, pos + 1};
              self(self, idx + 1, pos + 1);
            }
            return;
          }
          for (int end = pos + 1; end + remaining <= j; ++end) {
            if (!chart.count({sym, pos, end})) continue;
            kids[static_cast<std::size_t>(idx)] = {sym, pos, end};
            self(self, idx + 1, end);
          }
        };
        match(match, 0, i);
      }
      // Unit productions over the same span, to fixpoint.
      bool changed = true;
      while (changed) {
        changed = false;
        for (std::size_t pi = 0; pi < grammar.productions.size(); ++pi) {
          const Production& p = grammar.productions[pi];
          if (p.rhs.size() != 1 || !grammar.is_nonterminal(p.rhs[0])) continue;
          CellKey child{p.rhs[0], i, j};
          if (!chart.count(child)) continue;
          Derivation d{static_cast<int>(pi), {child}};
          auto& cell = chart[{p.lhs, i, j}];
          if (std::find(cell.begin(), cell.end(), d) == cell.end()) {
            cell.push_back(std::move(d));
            changed = true;
          }
        }
      }
    }
  }
  return chart;
}

class Enumerator {
 public:
  Enumerator(const Chart& chart, const Grammar& grammar,
             const std::vector<Leaf>& leaves, std::size_t max_trees)
      : chart_(chart), grammar_(grammar), leaves_(leaves),
        work_limit_(max_trees * 64 + 1024) {}

  std::vector<SyntaxTree> expand(const CellKey& key) {
    std::set<std::string> chain;
    return expand(key, chain);
  }

 private:
  std::vector<SyntaxTree> expand(const CellKey& key, std::set<std::string>& unit_chain) {
    std::vector<SyntaxTree> out;
    auto it = chart_.find(key);
    if (it == chart_.end()) return out;
    for (const Derivation& d : it->second) {
      if (d.prod < 0) {
        out.push_back(make_leaf_tree(leaves_[static_cast<std::size_t>(std::get<1>(key))]));
        spend();
        continue;
      }
      const Production& p = grammar_.productions[static_cast<std::size_t>(d.prod)];
      const bool unit = p.rhs.size() == 1 && grammar_.is_nonterminal(p.rhs[0]);
      if (unit) {
        // Cut unit cycles within the span; each nonterminal appears at most
        // once along a same-span unit chain.
        const std::string& child_sym = std::get<0>(d.kids[0]);
        if (unit_chain.count(child_sym)) continue;
        unit_chain.insert(child_sym);
        auto subs = expand(d.kids[0], unit_chain);
        unit_chain.erase(child_sym);
        for (auto& sub : subs) {
          out.push_back(make_internal_tree(p.lhs, {std::move(sub)}));
          spend();
        }
        continue;
      }
      std::vector<std::vector<SyntaxTree>> kid_trees;
      kid_trees.reserve(d.kids.size());
      bool dead = false;
      for (const auto& kid : d.kids) {
        std::set<std::string> fresh;
        kid_trees.push_back(expand(kid, fresh));
        if (kid_trees.back().empty()) {
          dead = true;
          break;
        }
      }
      if (dead) continue;
      std::vector<std::vector<SyntaxTree>> combos{{}};
      for (const auto& options : kid_trees) {
        std::vector<std::vector<SyntaxTree>> next;
        for (const auto& prefix : combos) {
          for (const auto& option : options) {
            auto row = prefix;
            row.push_back(option);
            next.push_back(std::move(row));
            spend();
          }
        }
        combos = std::move(next);
      }
      for (auto& row : combos) {
        out.push_back(make_internal_tree(p.lhs, std::move(row)));
        spend();
      }
    }
    return out;
  }

  void spend() {
    if (++work_ > work_limit_)
      throw Error(ErrorCode::TooManyParses, "parse enumeration exceeded the tree cap");
  }

  const Chart& chart_;
  const Grammar& grammar_;
  const std::vector<Leaf>& leaves_;
  std::size_t work_limit_;
  std::size_t work_ = 0;
};

std::vector<SyntaxTree> dedup_sorted(std::vector<SyntaxTree> trees, std::size_t max_trees) {
  std::map<std::string, SyntaxTree> by_key;
  for (auto& t : trees) by_key.emplace(tree_key(t), std::move(t));
  if (by_key.size() > max_trees)
    throw Error(ErrorCode::TooManyParses,
                std::to_string(by_key.size()) + " parse trees exceed the cap of " +
                    std::to_string(max_trees));
  std::vector<SyntaxTree> out;
  out.reserve(by_key.size());
  for (auto& [key, tree] : by_key) out.push_back(std::move(tree));
  return out;
}

std::vector<SyntaxTree> parse_core(const std::vector<Leaf>& leaves, const Grammar& grammar,
                                   const std::string& goal, const ParseOptions& options) {
  Chart chart = build_chart(leaves, grammar);
  CellKey goal_key{goal, 0, static_cast<int>(leaves.size())};
  if (!chart.count(goal_key)) return {};
  Enumerator e(chart, grammar, leaves, options.max_trees);
  return dedup_sorted(e.expand(goal_key), options.max_trees);
}

void check_leaf_roles(const std::vector<Leaf>& leaves, const Grammar& grammar) {
  for (const auto& leaf : leaves) {
    if (!grammar.is_terminal(leaf.role))
      throw Error(ErrorCode::UnknownTag, "leaf role `" + leaf.role + "` is not a grammar terminal");
  }
}

}  // namespace

std::string tree_key(const SyntaxTree& tree) {
  std::ostringstream out;
  tree_key_rec(tree, out);
  return out.str();
}

std::vector<Leaf> tree_leaves(const SyntaxTree& tree) {
  std::vector<Leaf> out;
  tree_leaves_rec(tree, out);
  return out;
}

std::vector<SyntaxTree> parse_forest(const std::vector<Leaf>& leaves, const Grammar& grammar,
                                     const std::string& goal, const ParseOptions& options) {
  check_leaf_roles(leaves, grammar);
  return parse_core(leaves, grammar, goal, options);
}

std::vector<SyntaxTree> parse_with_gap(const std::vector<Leaf>& leaves, const Grammar& grammar,
                                       const std::string& goal, const ParseOptions& options) {
  auto plain = parse_forest(leaves, grammar, goal, options);
  if (!plain.empty()) return plain;

  std::vector<SyntaxTree> merged;
  for (std::size_t pos = 0; pos <= leaves.size(); ++pos) {
    for (const auto& role : grammar.terminals) {
      std::vector<Leaf> padded;
      padded.reserve(leaves.size() + 1);
      padded.insert(padded.end(), leaves.begin(), leaves.begin() + static_cast<long>(pos));
      padded.push_back(Leaf{role, {}, true});
      padded.insert(padded.end(), leaves.begin() + static_cast<long>(pos), leaves.end());
      auto trees = parse_core(padded, grammar, goal, options);
      merged.insert(merged.end(), std::make_move_iterator(trees.begin()),
                    std::make_move_iterator(trees.end()));
    }
  }
  return dedup_sorted(std::move(merged), options.max_trees);
}

}  // namespace mmambig
