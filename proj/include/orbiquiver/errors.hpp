#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace orbi {

enum class ErrorKind {
  Schema,
  InvalidInput,
  InvalidPath,
  InvalidCycle,
  ComposeError,
  DimError,
  NotTransverse,
  NotReduced,
  NotLocalized,
  NonzeroCycleLabel,
  UnsupportedPresentation,
  SizeLimit,
  InternalError,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Schema: return "SchemaError";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::InvalidPath: return "InvalidPath";
    case ErrorKind::InvalidCycle: return "InvalidCycle";
    case ErrorKind::ComposeError: return "ComposeError";
    case ErrorKind::DimError: return "DimError";
    case ErrorKind::NotTransverse: return "NotTransverse";
    case ErrorKind::NotReduced: return "NotReduced";
    case ErrorKind::NotLocalized: return "NotLocalized";
    case ErrorKind::NonzeroCycleLabel: return "NonzeroCycleLabel";
    case ErrorKind::UnsupportedPresentation: return "UnsupportedPresentation";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::InternalError: return "InternalError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so
/// that front ends can map it to an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), message_(message) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// The message without the kind prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorKind kind_;
  std::string message_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace orbi
