#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace bfsi {

/// Exact matchers used to scan candidate blocks.
///
/// kAuto is a routing choice, not an engine: shift-or when the pattern fits a
/// machine word, Horspool otherwise.
enum class VerifierKind : std::uint8_t { kNaive, kBitParallel, kComparison, kAuto };

/// Longest pattern kBitParallel accepts.
inline constexpr std::size_t kBitParallelMaxPattern = 64;

std::string_view to_string(VerifierKind kind) noexcept;
std::optional<VerifierKind> parse_verifier(std::string_view name) noexcept;
/// Throws Error{kUnknownVerifier} for unrecognized names.
VerifierKind verifier_from_name(std::string_view name);

/// Engine kAuto resolves to for a pattern of length m.
VerifierKind route(VerifierKind kind, std::size_t m) noexcept;

/// Appends base + x for every x where haystack[x, x + m) == pattern, in
/// ascending order. Empty patterns match nothing. kBitParallel throws
/// Error{kVerifierLimit} when m exceeds kBitParallelMaxPattern.
void find_all_into(VerifierKind kind, std::string_view haystack,
                   std::string_view pattern, std::uint64_t base,
                   std::vector<std::uint64_t>& out);

std::vector<std::uint64_t> find_all(VerifierKind kind, std::string_view haystack,
                                    std::string_view pattern);

}  // namespace bfsi
