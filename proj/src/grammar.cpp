#include "mmambig/grammar.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace mmambig {

namespace {

std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::string normalize_tag(const std::string& token) {
  std::string t = lowercase(token);
  if (t == "det") return "dt";
  return t;
}

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace

Grammar load_grammar(const std::string& text) {
  Grammar g;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool start_overridden = false;

  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;

    if (tokens[0] == "@start") {
      if (tokens.size() != 2)
        throw Error(ErrorCode::MalformedProduction,
                    "line " + std::to_string(line_no) + ": @start takes one symbol");
      g.start = normalize_tag(tokens[1]);
      start_overridden = true;
      continue;
    }

    if (tokens.size() < 3 || tokens[1] != "->")
      throw Error(ErrorCode::MalformedProduction,
                  "line " + std::to_string(line_no) + ": expected `lhs -> sym ...`");

    Production p;
    p.lhs = normalize_tag(tokens[0]);
    for (std::size_t i = 2; i < tokens.size(); ++i) p.rhs.push_back(normalize_tag(tokens[i]));
    if (std::find(g.productions.begin(), g.productions.end(), p) == g.productions.end())
      g.productions.push_back(std::move(p));
  }

  for (const auto& p : g.productions) g.nonterminals.insert(p.lhs);
  for (const auto& p : g.productions)
    for (const auto& sym : p.rhs)
      if (!g.nonterminals.count(sym)) g.terminals.insert(sym);

  bool has_start = std::any_of(g.productions.begin(), g.productions.end(),
                               [&](const Production& p) { return p.lhs == g.start; });
  if (!has_start)
    throw Error(ErrorCode::MissingStartSymbol,
                start_overridden ? "no production for declared start symbol `" + g.start + "`"
                                 : "no production for start symbol `s`");
  return g;
}

Grammar load_grammar_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoFailure, "cannot open grammar file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_grammar(buf.str());
}

}  // namespace mmambig
