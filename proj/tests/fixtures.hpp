#pragma once

// Shared test fixtures: bundled grammar/lexicon and the golden input files.

#include <string>

#include "mmambig/build.hpp"
#include "mmambig/classify.hpp"
#include "mmambig/grammar.hpp"
#include "mmambig/lexicon.hpp"
#include "mmambig/xml_io.hpp"

#ifndef MMAMBIG_DATA_DIR
#define MMAMBIG_DATA_DIR "data"
#endif

namespace fixtures {

inline std::string data_dir() { return MMAMBIG_DATA_DIR; }

inline std::string case_path(const std::string& name) {
  return data_dir() + "/cases/" + name + ".xml";
}

inline const mmambig::Grammar& grammar() {
  static mmambig::Grammar g = mmambig::load_grammar_file(data_dir() + "/default.grammar");
  return g;
}

inline const mmambig::Lexicon& lexicon() {
  static mmambig::Lexicon l = mmambig::load_lexicon_file(data_dir() + "/default.lexicon");
  return l;
}

inline mmambig::RawInput case_raw(const std::string& name) {
  return mmambig::read_sentence_file(case_path(name));
}

inline mmambig::MultimodalSentence load_case(
    const std::string& name, std::int64_t threshold = mmambig::kDefaultThreshold) {
  return mmambig::build_sentence(case_raw(name), lexicon(), grammar(), threshold);
}

// Leaf sequence over synthetic slot ids, for direct parser tests.
inline std::vector<mmambig::Leaf> role_leaves(const std::vector<std::string>& roles) {
  std::vector<mmambig::Leaf> leaves;
  for (std::size_t i = 0; i < roles.size(); ++i)
    leaves.push_back(mmambig::Leaf{roles[i], {static_cast<int>(i)}, false});
  return leaves;
}

}  // namespace fixtures
