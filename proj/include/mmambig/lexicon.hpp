#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "mmambig/core.hpp"

namespace mmambig {

// Token -> syntactic role table with a deictic marker set. File format is
// one entry per line: `token role [deictic]`, '#' comments. Lookups are
// case-insensitive.
class Lexicon {
 public:
  void add(const std::string& token, const std::string& role, bool deictic = false);

  // Resolution order: explicit role, then repr token, then concept.
  std::optional<std::string> role_of(const std::string& repr,
                                     const std::string& concept_value,
                                     const std::string& explicit_role = "") const;

  bool marks_deictic(const std::string& repr) const;
  std::size_t size() const { return roles_.size(); }

 private:
  std::map<std::string, std::string> roles_;
  std::set<std::string> deictics_;
};

Lexicon load_lexicon(const std::string& text);
Lexicon load_lexicon_file(const std::string& path);

}  // namespace mmambig
