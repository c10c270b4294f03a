#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mmambig/core.hpp"

namespace mmambig {

// Parsed <input> document: nminput rows and nlsentence texts in file order.
struct RawInput {
  std::vector<RawEntry> entries;
  std::vector<std::string> sentences;
};

// Parses the sentence XML schema:
//   <input>
//     <nminput mod=".." repr=".." ts=".." te=".." conc=".." [role=".."]/>
//     <nlsentence sent=".."/>
//   </input>
// ts/te are either nonnegative integers (passed through) or timestamps
// "YYYY-MM-DD HH:MM:SS" (converted to seconds and shifted so the earliest
// ts becomes 0). Throws MalformedXml or SchemaViolation.
RawInput read_sentence_xml(const std::string& text);
RawInput read_sentence_file(const std::string& path);

// Serializes entries back to the same schema (integer times).
std::string write_sentence_xml(const RawInput& input);

// "YYYY-MM-DD HH:MM:SS" -> seconds since the civil epoch.
std::int64_t parse_datetime_seconds(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace mmambig
