#pragma once

#include <cstdint>

#include "mmambig/grammar.hpp"
#include "mmambig/lexicon.hpp"
#include "mmambig/parse.hpp"
#include "mmambig/sentence.hpp"
#include "mmambig/temporal.hpp"
#include "mmambig/xml_io.hpp"

namespace mmambig {

// Full assembly pipeline: group entries into slots, resolve roles through
// the lexicon, bind deictics, build the leaf sequence, parse (with gap
// tolerance), and merge the forest into the syntax-graph.
// Throws UnknownWord, ConflictingRole, or Unparseable.
MultimodalSentence build_sentence(const RawInput& raw,
                                  const Lexicon& lexicon,
                                  const Grammar& grammar,
                                  std::int64_t threshold = kDefaultThreshold,
                                  const ParseOptions& options = {});

}  // namespace mmambig
