#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bfsi {

enum class ErrorCode : std::uint8_t {
  kInvalidParams,
  kTextTooShort,
  kPatternTooShort,
  kPatternTooLong,
  kBadMagic,
  kUnsupportedVersion,
  kTruncated,
  kCorrupt,
  kChecksumMismatch,
  kUnknownVerifier,
  kVerifierLimit,
  kIo,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI exit-code mapping) can branch without parsing text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised when a pattern is shorter than the variant allows; carries the bound.
class PatternLengthError : public Error {
 public:
  PatternLengthError(ErrorCode code, const std::string& what,
                     std::uint64_t bound)
      : Error(code, what), bound_(bound) {}

  std::uint64_t bound() const noexcept { return bound_; }

 private:
  std::uint64_t bound_;
};

}  // namespace bfsi
