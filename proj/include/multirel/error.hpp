#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace multirel {

enum class ErrorKind {
  ShapeMismatch,
  IdentityShapeMismatch,
  PowersetTooLarge,
  MaskTooWide,
  EnumerationTooLarge,
  InvalidValue,
  UnknownLaw,
  SyntaxError,
  UnboundVariable,
  TypeError,
};

std::string_view to_string(ErrorKind kind);

/// Every failed precondition in the library surfaces as this exception. The
/// kind is stable and is what callers (the CLI in particular) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// True for the errors that mean "the instance is too big", as opposed to
  /// malformed input.
  bool is_cap_error() const noexcept {
    return kind_ == ErrorKind::PowersetTooLarge || kind_ == ErrorKind::MaskTooWide ||
           kind_ == ErrorKind::EnumerationTooLarge;
  }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::IdentityShapeMismatch: return "IdentityShapeMismatch";
    case ErrorKind::PowersetTooLarge: return "PowersetTooLarge";
    case ErrorKind::MaskTooWide: return "MaskTooWide";
    case ErrorKind::EnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorKind::InvalidValue: return "InvalidValue";
    case ErrorKind::UnknownLaw: return "UnknownLaw";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnboundVariable: return "UnboundVariable";
    case ErrorKind::TypeError: return "TypeError";
  }
  return "Error";
}

}  // namespace multirel
