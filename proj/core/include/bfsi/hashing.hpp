#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace bfsi {

/// Seeded 64-bit hash of a byte string.
///
/// Eight-byte little-endian chunks are folded in with the murmur3 fmix64
/// finalizer; the tail is packed into one more word tagged with its length.
/// The function is fixed so that index files stay portable across builds.
std::uint64_t hash_bytes(std::string_view bytes, std::uint64_t seed) noexcept;

/// The two independent mixes of one gram used for double hashing.
/// `step` is always odd.
struct GramKey {
  std::uint64_t base = 0;
  std::uint64_t step = 1;

  friend bool operator==(const GramKey&, const GramKey&) = default;
  friend auto operator<=>(const GramKey&, const GramKey&) = default;
};

GramKey gram_key(std::string_view gram, std::uint64_t seed) noexcept;

/// k-th row index (base + k * step) mod rows.
constexpr std::uint32_t row_of(const GramKey& key, std::uint32_t k,
                               std::uint32_t rows) noexcept {
  return static_cast<std::uint32_t>((key.base + k * key.step) % rows);
}

/// Fills out[k] = row_of(key, k, rows) for k < out.size().
void fill_rows(const GramKey& key, std::uint32_t rows,
               std::span<std::uint32_t> out) noexcept;

/// The u baseline row indices of one gram, each in [0, rows).
struct GramHashes {
  std::vector<std::uint32_t> rows;

  friend bool operator==(const GramHashes&, const GramHashes&) = default;
};

GramHashes base_hashes(std::string_view gram, std::uint32_t u,
                       std::uint32_t rows, std::uint64_t seed);

/// Bit offset of block j's cell in row h of an r-way interleaved table.
constexpr std::uint64_t lane_address(std::uint64_t h, std::uint32_t r,
                                     std::uint32_t j) noexcept {
  return h * r + j;
}

/// 64-bit FNV-1a, used as the text checksum stored in index files.
std::uint64_t fnv1a64(std::string_view bytes) noexcept;

}  // namespace bfsi
