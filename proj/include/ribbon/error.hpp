#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ribbon {

enum class ErrorCode {
  syntax_error,
  invalid_label,
  duplicate_label,
  bad_token,
  unknown_label,
  duplicate_dart,
  missing_dart,
  isolated_vertex,
  empty_map,
  disconnected,
  index_out_of_range,
  loop_not_contractible,
  precondition_violation,
  malformed_word,
  unsupported_presentation,
  endpoint_mismatch,
  invalid_path,
  internal_invariant_violation,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::syntax_error: return "SyntaxError";
    case ErrorCode::invalid_label: return "InvalidLabel";
    case ErrorCode::duplicate_label: return "DuplicateLabel";
    case ErrorCode::bad_token: return "BadToken";
    case ErrorCode::unknown_label: return "UnknownLabel";
    case ErrorCode::duplicate_dart: return "DuplicateDart";
    case ErrorCode::missing_dart: return "MissingDart";
    case ErrorCode::isolated_vertex: return "IsolatedVertex";
    case ErrorCode::empty_map: return "EmptyMap";
    case ErrorCode::disconnected: return "Disconnected";
    case ErrorCode::index_out_of_range: return "IndexOutOfRange";
    case ErrorCode::loop_not_contractible: return "LoopNotContractible";
    case ErrorCode::precondition_violation: return "PreconditionViolation";
    case ErrorCode::malformed_word: return "MalformedWord";
    case ErrorCode::unsupported_presentation: return "UnsupportedPresentation";
    case ErrorCode::endpoint_mismatch: return "EndpointMismatch";
    case ErrorCode::invalid_path: return "InvalidPath";
    case ErrorCode::internal_invariant_violation: return "InternalInvariantViolation";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above; the
/// message is prefixed with the code name.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), detail_(message) {}

  ErrorCode code() const noexcept { return code_; }
  /// The message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace ribbon
