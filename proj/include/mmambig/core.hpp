#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mmambig {

enum class ErrorCode {
  MalformedXml,
  SchemaViolation,
  UnknownWord,
  ConflictingRole,
  Unparseable,
  MissingStartSymbol,
  MalformedProduction,
  UnknownTag,
  TooManyParses,
  PathLimitExceeded,
  EmptyForest,
  NodeNotFound,
  IoFailure,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Inclusive interval in integer time units.
struct TimeInterval {
  std::int64_t start = 0;
  std::int64_t end = 0;

  bool valid() const { return start <= end; }

  bool intersects(const TimeInterval& other) const {
    return std::max(start, other.start) <= std::min(end, other.end);
  }

  // Distance between nearest endpoints; <= 0 when the intervals intersect.
  std::int64_t separation(const TimeInterval& other) const {
    return std::max(start, other.start) - std::min(end, other.end);
  }

  bool operator==(const TimeInterval& other) const = default;
};

// One attribute row from the input: (mod, repr, ts, te, conc) plus an
// optional explicit syntactic role.
struct RawEntry {
  std::string mod;
  std::string repr;
  std::int64_t ts = 0;
  std::int64_t te = 0;
  std::string conc;
  std::string role;  // empty unless the input names a role explicitly
};

// A group of concept alternatives sharing (mod, repr, time). Slots with
// more than one concept encode lexical alternatives of a single signal.
struct ElementSlot {
  int id = 0;
  std::string mod;
  std::string repr;
  TimeInterval time;
  std::string role;  // assigned from the lexicon or explicit role attribute
  std::vector<std::string> concepts;
  int input_index = 0;  // position of the first contributing entry
  bool deictic = false;

  bool has_concept(const std::string& c) const {
    for (const auto& k : concepts)
      if (k == c) return true;
    return false;
  }
};

// The fully expanded 5-tuple view of one (slot, concept) pair.
struct TerminalElement {
  std::string mod;
  std::string repr;
  TimeInterval time;
  std::string role;
  std::string concept_name;
};

struct NullTerminal {
  std::string role;
};

// Expands a slot into one TerminalElement per concept; the results differ
// only in the concept field.
std::vector<TerminalElement> expand_slot(const ElementSlot& slot);

// One parse leaf: either a fused group of slots sharing a role, or a null
// placeholder inserted by gap parsing.
struct Leaf {
  std::string role;
  std::vector<int> slot_ids;
  bool is_null = false;

  bool operator==(const Leaf& other) const = default;
};

}  // namespace mmambig
