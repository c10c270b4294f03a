#pragma once

// Test-only helpers: an exhaustive derivation enumerator kept independent of
// the chart parser, plus seeded random grammars, leaf sequences, and forests.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "mmambig/grammar.hpp"
#include "mmambig/parse.hpp"

namespace oracle {

struct Overflow {};

namespace detail {

using Active = std::set<std::tuple<std::string, std::size_t, std::size_t>>;

inline std::vector<mmambig::SyntaxTree> derive(const std::vector<mmambig::Leaf>& leaves,
                                               const mmambig::Grammar& g,
                                               const std::string& sym, std::size_t lo,
                                               std::size_t hi, Active& active,
                                               std::size_t& budget) {
  std::vector<mmambig::SyntaxTree> out;
  if (g.is_terminal(sym)) {
    if (hi - lo == 1 && leaves[lo].role == sym) {
      if (budget-- == 0) throw Overflow{};
      out.push_back(mmambig::make_leaf_tree(leaves[lo]));
    }
    return out;
  }
  auto key = std::make_tuple(sym, lo, hi);
  if (active.count(key)) return out;
  active.insert(key);
  for (const auto& p : g.productions) {
    if (p.lhs != sym) continue;
    std::vector<mmambig::SyntaxTree> row;
    auto split = [&](auto&& self, std::size_t idx, std::size_t pos) -> void {
      if (idx == p.rhs.size()) {
        if (pos == hi) {
          if (budget-- == 0) throw Overflow{};
          out.push_back(mmambig::make_internal_tree(p.lhs, row));
        }
        return;
      }
      std::size_t remaining = p.rhs.size() - idx - 1;
      for (std::size_t end = pos + 1; end + remaining <= hi; ++end) {
        auto subs = derive(leaves, g, p.rhs[idx], pos, end, active, budget);
        for (auto& sub : subs) {
          row.push_back(sub);
          self(self, idx + 1, end);
          row.pop_back();
        }
      }
    };
    split(split, 0, lo);
  }
  active.erase(key);
  return out;
}

}  // namespace detail

// Set of canonical keys of every derivation of `goal` over the leaves.
inline std::set<std::string> brute_force_keys(const std::vector<mmambig::Leaf>& leaves,
                                              const mmambig::Grammar& g,
                                              const std::string& goal,
                                              std::size_t budget = 2'000'000) {
  detail::Active active;
  auto trees = detail::derive(leaves, g, goal, 0, leaves.size(), active, budget);
  std::set<std::string> keys;
  for (const auto& t : trees) keys.insert(mmambig::tree_key(t));
  return keys;
}

struct RandomCase {
  mmambig::Grammar grammar;
  std::vector<mmambig::Leaf> leaves;
};

// Random grammar (<= 10 productions, unit productions acyclic by symbol
// order) and a leaf sequence (<= 6 leaves) over its terminal alphabet.
inline RandomCase random_case(std::uint64_t seed) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    std::seed_seq seq{seed, attempt};
    std::mt19937 rng(seq);
    const std::vector<std::string> nts = {"s", "x", "y"};
    const std::vector<std::string> ts = {"a", "b", "c", "d"};
    auto pick = [&](const std::vector<std::string>& pool) {
      return pool[rng() % pool.size()];
    };

    std::string text;
    const int n_prods = 1 + static_cast<int>(rng() % 10);
    for (int p = 0; p < n_prods; ++p) {
      std::string lhs = p == 0 ? "s" : pick(nts);
      std::size_t len = 1 + rng() % 3;
      std::vector<std::string> rhs;
      for (std::size_t k = 0; k < len; ++k) {
        if (rng() % 2) {
          rhs.push_back(pick(ts));
        } else {
          rhs.push_back(pick(nts));
        }
      }
      // keep single-nonterminal productions acyclic: lhs must precede rhs
      if (rhs.size() == 1 && rhs[0] != "a" && rhs[0] != "b" && rhs[0] != "c" && rhs[0] != "d") {
        auto li = std::find(nts.begin(), nts.end(), lhs) - nts.begin();
        auto ri = std::find(nts.begin(), nts.end(), rhs[0]) - nts.begin();
        if (li >= ri) rhs.push_back(pick(ts));
      }
      text += lhs + " ->";
      for (const auto& sym : rhs) text += " " + sym;
      text += "\n";
    }

    mmambig::Grammar grammar;
    try {
      grammar = mmambig::load_grammar(text);
    } catch (const mmambig::Error&) {
      continue;
    }
    if (grammar.terminals.empty()) continue;

    std::vector<std::string> terminal_pool(grammar.terminals.begin(), grammar.terminals.end());
    RandomCase out;
    out.grammar = std::move(grammar);
    const std::size_t n_leaves = rng() % 7;
    for (std::size_t i = 0; i < n_leaves; ++i)
      out.leaves.push_back(
          mmambig::Leaf{terminal_pool[rng() % terminal_pool.size()],
                        {static_cast<int>(i)}, false});
    return out;
  }
}

// Random forest over one shared slot sequence, for graph round-trips.
struct RandomForest {
  std::vector<mmambig::ElementSlot> slots;
  std::vector<mmambig::SyntaxTree> trees;
};

inline mmambig::SyntaxTree random_tree_over(std::mt19937& rng,
                                            const std::vector<mmambig::Leaf>& leaves,
                                            std::size_t lo, std::size_t hi, int depth) {
  const std::vector<std::string> labels = {"s", "np", "vp", "pp"};
  if (hi - lo == 1 && (depth > 0 && rng() % 3 == 0)) return mmambig::make_leaf_tree(leaves[lo]);
  if (hi - lo == 1 && depth > 3) return mmambig::make_leaf_tree(leaves[lo]);
  std::size_t parts = 1 + rng() % std::min<std::size_t>(3, hi - lo);
  std::vector<std::size_t> cuts{lo};
  while (cuts.size() < parts) {
    std::size_t cut = lo + 1 + rng() % (hi - lo);
    if (std::find(cuts.begin(), cuts.end(), cut) == cuts.end() && cut < hi) cuts.push_back(cut);
  }
  cuts.push_back(hi);
  std::sort(cuts.begin(), cuts.end());
  std::vector<mmambig::SyntaxTree> children;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    if (cuts[k + 1] - cuts[k] == 1 && rng() % 2) {
      children.push_back(mmambig::make_leaf_tree(leaves[cuts[k]]));
    } else {
      children.push_back(random_tree_over(rng, leaves, cuts[k], cuts[k + 1], depth + 1));
    }
  }
  std::string label = depth == 0 ? "s" : labels[rng() % labels.size()];
  return mmambig::make_internal_tree(label, std::move(children));
}

inline RandomForest random_forest(std::uint64_t seed) {
  std::seed_seq seq{seed, std::uint64_t{0xf02e57}};
  std::mt19937 rng(seq);
  const std::vector<std::string> roles = {"nn", "dt", "vb", "in", "jj"};
  const std::vector<std::string> mods = {"speech", "sketch", "handwriting"};
  const std::vector<std::string> concepts = {"lake", "river", "road", "house", "park"};

  RandomForest out;
  const std::size_t n = 1 + rng() % 6;
  std::vector<mmambig::Leaf> leaves;
  for (std::size_t i = 0; i < n; ++i) {
    mmambig::ElementSlot slot;
    slot.id = static_cast<int>(i);
    slot.mod = mods[rng() % mods.size()];
    slot.repr = "r" + std::to_string(i);
    slot.time = {static_cast<std::int64_t>(3 * i), static_cast<std::int64_t>(3 * i + 2)};
    slot.role = roles[rng() % roles.size()];
    slot.input_index = static_cast<int>(i);
    slot.concepts.push_back(concepts[rng() % concepts.size()]);
    if (rng() % 4 == 0) {
      std::string extra = concepts[rng() % concepts.size()];
      if (!slot.has_concept(extra)) slot.concepts.push_back(extra);
    }
    leaves.push_back(mmambig::Leaf{slot.role, {slot.id}, false});
    out.slots.push_back(std::move(slot));
  }

  std::set<std::string> seen;
  const std::size_t wanted = 1 + rng() % 4;
  for (int tries = 0; tries < 32 && out.trees.size() < wanted; ++tries) {
    auto tree = random_tree_over(rng, leaves, 0, leaves.size(), 0);
    if (seen.insert(mmambig::tree_key(tree)).second) out.trees.push_back(std::move(tree));
  }
  return out;
}

}  // namespace oracle
