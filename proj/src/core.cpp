#include "mmambig/core.hpp"

namespace mmambig {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedXml: return "MalformedXml";
    case ErrorCode::SchemaViolation: return "SchemaViolation";
    case ErrorCode::UnknownWord: return "UnknownWord";
    case ErrorCode::ConflictingRole: return "ConflictingRole";
    case ErrorCode::Unparseable: return "Unparseable";
    case ErrorCode::MissingStartSymbol: return "MissingStartSymbol";
    case ErrorCode::MalformedProduction: return "MalformedProduction";
    case ErrorCode::UnknownTag: return "UnknownTag";
    case ErrorCode::TooManyParses: return "TooManyParses";
    case ErrorCode::PathLimitExceeded: return "PathLimitExceeded";
    case ErrorCode::EmptyForest: return "EmptyForest";
    case ErrorCode::NodeNotFound: return "NodeNotFound";
    case ErrorCode::IoFailure: return "IoFailure";
  }
  return "Error";
}

std::vector<TerminalElement> expand_slot(const ElementSlot& slot) {
  std::vector<TerminalElement> out;
  out.reserve(slot.concepts.size());
  for (const auto& concept_name : slot.concepts) {
    out.push_back(TerminalElement{slot.mod, slot.repr, slot.time, slot.role, concept_name});
  }
  return out;
}

}  // namespace mmambig
