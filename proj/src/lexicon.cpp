#include "mmambig/lexicon.hpp"

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

}  // namespace

void Lexicon::add(const std::string& token, const std::string& role, bool deictic) {
  std::string key = lowercase(token);
  roles_[key] = lowercase(role);
  if (deictic) deictics_.insert(key);
}

std::optional<std::string> Lexicon::role_of(const std::string& repr,
                                            const std::string& concept_value,
                                            const std::string& explicit_role) const {
  if (!explicit_role.empty()) return lowercase(explicit_role);
  auto it = roles_.find(lowercase(repr));
  if (it != roles_.end()) return it->second;
  it = roles_.find(lowercase(concept_value));
  if (it != roles_.end()) return it->second;
  return std::nullopt;
}

bool Lexicon::marks_deictic(const std::string& repr) const {
  return deictics_.count(lowercase(repr)) > 0;
}

Lexicon load_lexicon(const std::string& text) {
  Lexicon lex;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream row(line);
    std::string token, role, flag;
    if (!(row >> token)) continue;
    if (!(row >> role))
      throw Error(ErrorCode::IoFailure,
                  "lexicon line " + std::to_string(line_no) + ": missing role for `" + token + "`");
    bool deictic = false;
    if (row >> flag) {
      if (flag != "deictic")
        throw Error(ErrorCode::IoFailure,
                    "lexicon line " + std::to_string(line_no) + ": unknown flag `" + flag + "`");
      deictic = true;
    }
    lex.add(token, role, deictic);
  }
  return lex;
}

Lexicon load_lexicon_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoFailure, "cannot open lexicon file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_lexicon(buf.str());
}

}  // namespace mmambig
