#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace bfsi {

enum class Variant : std::uint8_t { kStd = 0, kSam = 1, kMsam = 2 };

std::string_view to_string(Variant v) noexcept;
std::optional<Variant> parse_variant(std::string_view name) noexcept;

/// Default number of blocks per superblock: one lane fills one 64-bit word.
inline constexpr std::uint32_t kDefaultBlocksPerSuperblock = 64;

/// All tunables of the semi-index.
///
/// Fields that do not apply to the active variant (s for STD/MSAM, w and p
/// for STD/SAM) are kept at zero by normalized(); the index file stores them
/// the same way.
struct IndexParams {
  Variant variant = Variant::kStd;
  std::uint32_t q = 8;        // gram length
  std::uint64_t b = 8192;     // block size in bytes
  std::uint32_t r = kDefaultBlocksPerSuperblock;
  std::uint32_t c = 6;        // bits per inserted gram
  std::uint32_t u = 4;        // hash functions
  std::uint32_t s = 0;        // SAM sampling step
  std::uint32_t w = 0;        // MSAM window length
  std::uint32_t p = 0;        // MSAM minimizer length
  std::uint64_t seed = 0;

  /// Copy with fields unused by the variant reset to zero.
  IndexParams normalized() const;

  std::uint64_t superblock_span() const noexcept { return b * r; }

  friend bool operator==(const IndexParams&, const IndexParams&) = default;
};

/// Empty when valid, otherwise a message naming the first violated rule.
std::optional<std::string> check_params(const IndexParams& params);

/// Throws Error{kInvalidParams} when check_params reports a violation.
void validate_params(const IndexParams& params);

/// Bloom-optimal hash count for c bits per item: max(1, round(c ln 2)).
std::uint32_t derive_hash_count(std::uint32_t c) noexcept;

/// Shortest pattern the variant can filter losslessly.
std::uint64_t required_min_m(const IndexParams& params) noexcept;

struct BlockAddress {
  std::uint64_t superblock = 0;
  std::uint32_t block = 0;  // index within the superblock

  friend bool operator==(const BlockAddress&, const BlockAddress&) = default;
};

constexpr BlockAddress block_of(std::uint64_t position, std::uint64_t b,
                                std::uint32_t r) noexcept {
  const std::uint64_t global = position / b;
  return {global / r, static_cast<std::uint32_t>(global % r)};
}

/// Number of b-sized blocks covering n bytes (the last may be partial).
constexpr std::uint64_t block_count(std::uint64_t n, std::uint64_t b) noexcept {
  return (n + b - 1) / b;
}

}  // namespace bfsi
