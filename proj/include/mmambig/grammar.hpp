#pragma once

#include <set>
#include <string>
#include <vector>

#include "mmambig/core.hpp"

namespace mmambig {

struct Production {
  std::string lhs;
  std::vector<std::string> rhs;  // nonempty

  bool operator==(const Production& other) const = default;
};

struct Grammar {
  std::vector<Production> productions;
  std::string start = "s";
  std::set<std::string> terminals;
  std::set<std::string> nonterminals;

  bool is_terminal(const std::string& sym) const { return terminals.count(sym) > 0; }
  bool is_nonterminal(const std::string& sym) const { return nonterminals.count(sym) > 0; }
};

// Parses a grammar from text, one production per line:
//   lhs -> sym sym ...
// '#' starts a comment; a line '@start <sym>' overrides the start symbol.
// The tag "det" is normalized to "dt". Duplicate productions are dropped.
// Throws MalformedProduction (with line number) or MissingStartSymbol.
Grammar load_grammar(const std::string& text);
Grammar load_grammar_file(const std::string& path);

}  // namespace mmambig
