#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace linfactor {

/// Error categories. Everything except `Internal` is a violated precondition
/// on the caller's side; `Internal` means a closed-form/oracle cross-check failed.
enum class Errc {
  MixedFields,
  DivisionByZero,
  ZeroElement,
  NotCoprime,
  Overflow,
  InvalidField,
  ConstantPolynomial,
  ZeroPolynomial,
  DivisibleByX,
  NotIrreducible,
  SizeExceeded,
  DegenerateInput,
  TraceNonzero,
  DegreeDivisibleByP,
  NotANonsquare,
  EvenCharacteristic,
  OddCharacteristic,
  PreconditionViolated,
  ParseError,
  Internal,
};

constexpr std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::MixedFields: return "MixedFields";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ZeroElement: return "ZeroElement";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::Overflow: return "Overflow";
    case Errc::InvalidField: return "InvalidField";
    case Errc::ConstantPolynomial: return "ConstantPolynomial";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::DivisibleByX: return "DivisibleByX";
    case Errc::NotIrreducible: return "NotIrreducible";
    case Errc::SizeExceeded: return "SizeExceeded";
    case Errc::DegenerateInput: return "DegenerateInput";
    case Errc::TraceNonzero: return "TraceNonzero";
    case Errc::DegreeDivisibleByP: return "DegreeDivisibleByP";
    case Errc::NotANonsquare: return "NotANonsquare";
    case Errc::EvenCharacteristic: return "EvenCharacteristic";
    case Errc::OddCharacteristic: return "OddCharacteristic";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::ParseError: return "ParseError";
    case Errc::Internal: return "InternalError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

  Errc code() const noexcept { return code_; }
  bool internal() const noexcept { return code_ == Errc::Internal; }

 private:
  Errc code_;
};

/// Syntax error in polynomial or field-spec text; `position` is a byte offset
/// into `input`.
class ParseError : public Error {
 public:
  ParseError(std::string input, std::size_t position, const std::string& detail)
      : Error(Errc::ParseError, detail), input_(std::move(input)), position_(position), detail_(detail) {}

  const std::string& input() const noexcept { return input_; }
  const std::string& detail() const noexcept { return detail_; }
  std::size_t position() const noexcept { return position_; }

  /// Two-line rendering: the input, then a caret under the offending byte.
  std::string caret() const {
    return input_ + "\n" + std::string(position_, ' ') + "^";
  }

 private:
  std::string input_;
  std::size_t position_;
  std::string detail_;
};

[[noreturn]] inline void fail(Errc code, const std::string& detail) { throw Error(code, detail); }

inline void require(bool condition, Errc code, const std::string& detail) {
  if (!condition) fail(code, detail);
}

/// Asserts an invariant that, if false, means a closed form and a direct computation disagree.
inline void check_internal(bool condition, const std::string& detail) {
  if (!condition) fail(Errc::Internal, detail);
}

}  // namespace linfactor
