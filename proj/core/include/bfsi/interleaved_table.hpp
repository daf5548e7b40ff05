#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bfsi/hashing.hpp"

namespace bfsi {

/// Fixed-width bitset over the r blocks of one superblock.
class BlockMask {
 public:
  BlockMask() = default;
  explicit BlockMask(std::uint32_t bits, bool value = false);

  std::uint32_t size() const noexcept { return bits_; }
  bool test(std::uint32_t j) const noexcept {
    return (words_[j >> 6] >> (j & 63)) & 1U;
  }
  void set(std::uint32_t j) noexcept { words_[j >> 6] |= std::uint64_t{1} << (j & 63); }
  bool any() const noexcept;
  std::uint32_t count() const noexcept;

  std::span<std::uint64_t> words() noexcept { return words_; }
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  friend bool operator==(const BlockMask&, const BlockMask&) = default;

 private:
  std::uint32_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Round rows up so that rows * r is a whole number of 64-bit words.
std::uint64_t align_rows(std::uint64_t rows, std::uint32_t r) noexcept;

/// The Bloom filter table of one superblock.
///
/// r per-block filters of `rows` bits each are interleaved: bit
/// h * r + j belongs to block j, row h. All blocks' cells of one row (a
/// "lane") are therefore r consecutive bits, and probing a gram against every
/// block of the superblock touches u contiguous lanes.
class InterleavedTable {
 public:
  InterleavedTable() = default;
  /// `rows * r` must be a multiple of 64 (see align_rows).
  InterleavedTable(std::uint32_t rows, std::uint32_t r);
  /// Adopts an existing word array; used by deserialization.
  InterleavedTable(std::uint32_t rows, std::uint32_t r,
                   std::vector<std::uint64_t> words);

  std::uint32_t rows() const noexcept { return rows_; }
  std::uint32_t blocks() const noexcept { return r_; }
  std::uint64_t bit_count() const noexcept { return std::uint64_t{rows_} * r_; }

  void insert(std::span<const std::uint32_t> hashes, std::uint32_t j) noexcept;
  bool test_block(std::span<const std::uint32_t> hashes,
                  std::uint32_t j) const noexcept;

  /// AND of the lanes at the given rows; bit j mirrors test_block(j).
  BlockMask test_lane(std::span<const std::uint32_t> hashes) const;
  /// Allocation-free form of test_lane: `out` holds ceil(r / 64) words.
  void lane_and(std::span<const std::uint32_t> hashes,
                std::span<std::uint64_t> out) const noexcept;

  bool bit(std::uint64_t offset) const noexcept {
    return (words_[offset >> 6] >> (offset & 63)) & 1U;
  }
  std::uint64_t popcount() const noexcept;

  std::span<const std::uint64_t> words() const noexcept { return words_; }

  friend bool operator==(const InterleavedTable&, const InterleavedTable&) = default;

 private:
  std::uint64_t lane_word(std::uint64_t offset, std::uint32_t width) const noexcept;

  std::uint32_t rows_ = 0;
  std::uint32_t r_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace bfsi
