#include "bfsi/params.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

#include "bfsi/error.hpp"

namespace bfsi {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidParams: return "invalid parameters";
    case ErrorCode::kTextTooShort: return "text too short";
    case ErrorCode::kPatternTooShort: return "pattern too short";
    case ErrorCode::kPatternTooLong: return "pattern too long";
    case ErrorCode::kBadMagic: return "bad magic";
    case ErrorCode::kUnsupportedVersion: return "unsupported version";
    case ErrorCode::kTruncated: return "truncated";
    case ErrorCode::kCorrupt: return "corrupt";
    case ErrorCode::kChecksumMismatch: return "index/text mismatch";
    case ErrorCode::kUnknownVerifier: return "unknown verifier";
    case ErrorCode::kVerifierLimit: return "verifier limit";
    case ErrorCode::kIo: return "io error";
  }
  return "unknown error";
}

std::string_view to_string(Variant v) noexcept {
  switch (v) {
    case Variant::kStd: return "std";
    case Variant::kSam: return "sam";
    case Variant::kMsam: return "msam";
  }
  return "?";
}

std::optional<Variant> parse_variant(std::string_view name) noexcept {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return std::tolower(ch); });
  if (lower == "std") return Variant::kStd;
  if (lower == "sam") return Variant::kSam;
  if (lower == "msam") return Variant::kMsam;
  return std::nullopt;
}

IndexParams IndexParams::normalized() const {
  IndexParams out = *this;
  if (variant != Variant::kSam) out.s = 0;
  if (variant != Variant::kMsam) {
    out.w = 0;
    out.p = 0;
  }
  return out;
}

std::optional<std::string> check_params(const IndexParams& params) {
  const auto& P = params;
  if (P.variant != Variant::kStd && P.variant != Variant::kSam &&
      P.variant != Variant::kMsam) {
    return "unknown variant";
  }
  if (P.q < 2) return "q must be >= 2";
  if (P.q > std::numeric_limits<std::uint16_t>::max()) return "q must fit in 16 bits";
  if (P.b < P.q) return "b must be >= q";
  if (P.r < 1) return "r must be >= 1";
  if (P.c < 1) return "c must be >= 1";
  if (P.c > std::numeric_limits<std::uint16_t>::max()) return "c must fit in 16 bits";
  if (P.u < 1) return "u must be >= 1";
  if (P.u > std::numeric_limits<std::uint16_t>::max()) return "u must fit in 16 bits";
  if (P.b > std::numeric_limits<std::uint64_t>::max() / P.r) {
    return "b * r overflows a 64-bit count";
  }
  if (P.variant == Variant::kSam && P.s < 1) return "s must be >= 1";
  if (P.variant == Variant::kMsam) {
    if (P.p < 1) return "p must be >= 1";
    if (P.p >= P.w) return "p must be < w";
    if (P.w > P.b) return "w must be <= b";
  }
  return std::nullopt;
}

void validate_params(const IndexParams& params) {
  if (auto problem = check_params(params)) {
    throw Error(ErrorCode::kInvalidParams, *problem);
  }
}

std::uint32_t derive_hash_count(std::uint32_t c) noexcept {
  const double optimum = std::round(static_cast<double>(c) * std::log(2.0));
  return std::max<std::uint32_t>(1, static_cast<std::uint32_t>(optimum));
}

std::uint64_t required_min_m(const IndexParams& params) noexcept {
  switch (params.variant) {
    case Variant::kStd:
      return params.q;
    case Variant::kSam:
      return std::uint64_t{params.q} + params.s - 1;
    case Variant::kMsam: {
      const std::uint64_t q = params.q, w = params.w, p = params.p;
      return std::max({q, w, w + q - p});
    }
  }
  return params.q;
}

}  // namespace bfsi
