#include "bfsi/interleaved_table.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <numeric>

#include "bfsi/error.hpp"

namespace bfsi {
namespace {

constexpr std::size_t words_for(std::uint64_t bits) noexcept {
  return static_cast<std::size_t>((bits + 63) / 64);
}

constexpr std::uint64_t low_mask(std::uint32_t width) noexcept {
  return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

}  // namespace

BlockMask::BlockMask(std::uint32_t bits, bool value)
    : bits_(bits), words_(words_for(bits), value ? ~std::uint64_t{0} : 0) {
  if (value && bits % 64 != 0) words_.back() &= low_mask(bits % 64);
}

bool BlockMask::any() const noexcept {
  return std::any_of(words_.begin(), words_.end(),
                     [](std::uint64_t w) { return w != 0; });
}

std::uint32_t BlockMask::count() const noexcept {
  std::uint32_t total = 0;
  for (auto w : words_) total += static_cast<std::uint32_t>(std::popcount(w));
  return total;
}

std::uint64_t align_rows(std::uint64_t rows, std::uint32_t r) noexcept {
  const std::uint64_t unit = 64 / std::gcd<std::uint64_t>(r, 64);
  return (rows + unit - 1) / unit * unit;
}

InterleavedTable::InterleavedTable(std::uint32_t rows, std::uint32_t r)
    : rows_(rows), r_(r), words_(words_for(std::uint64_t{rows} * r), 0) {
  assert(rows >= 1 && r >= 1);
  assert(std::uint64_t{rows} * r % 64 == 0);
}

InterleavedTable::InterleavedTable(std::uint32_t rows, std::uint32_t r,
                                   std::vector<std::uint64_t> words)
    : rows_(rows), r_(r), words_(std::move(words)) {
  if (rows_ < 1 || r_ < 1 || words_.size() != words_for(bit_count())) {
    throw Error(ErrorCode::kCorrupt, "table geometry does not match its bit array");
  }
}

void InterleavedTable::insert(std::span<const std::uint32_t> hashes,
                              std::uint32_t j) noexcept {
  for (auto h : hashes) {
    const std::uint64_t at = lane_address(h, r_, j);
    words_[at >> 6] |= std::uint64_t{1} << (at & 63);
  }
}

bool InterleavedTable::test_block(std::span<const std::uint32_t> hashes,
                                  std::uint32_t j) const noexcept {
  for (auto h : hashes) {
    if (!bit(lane_address(h, r_, j))) return false;
  }
  return true;
}

std::uint64_t InterleavedTable::lane_word(std::uint64_t offset,
                                          std::uint32_t width) const noexcept {
  const std::size_t word = offset >> 6;
  const unsigned shift = offset & 63;
  std::uint64_t v = words_[word] >> shift;
  if (shift != 0 && shift + width > 64) v |= words_[word + 1] << (64 - shift);
  return v & low_mask(width);
}

void InterleavedTable::lane_and(std::span<const std::uint32_t> hashes,
                                std::span<std::uint64_t> out) const noexcept {
  assert(out.size() == words_for(r_));
  if (r_ == 64) {
    // One lane is exactly one aligned word.
    std::uint64_t acc = ~std::uint64_t{0};
    for (auto h : hashes) acc &= words_[h];
    out[0] = acc;
    return;
  }
  std::fill(out.begin(), out.end(), ~std::uint64_t{0});
  for (auto h : hashes) {
    const std::uint64_t base = std::uint64_t{h} * r_;
    std::uint32_t left = r_;
    for (std::size_t w = 0; w < out.size(); ++w) {
      const std::uint32_t width = std::min<std::uint32_t>(64, left);
      out[w] &= lane_word(base + 64 * w, width);
      left -= width;
    }
  }
  if (hashes.empty() && r_ % 64 != 0) out.back() &= low_mask(r_ % 64);
}

BlockMask InterleavedTable::test_lane(std::span<const std::uint32_t> hashes) const {
  BlockMask mask(r_);
  lane_and(hashes, mask.words());
  return mask;
}

std::uint64_t InterleavedTable::popcount() const noexcept {
  std::uint64_t total = 0;
  for (auto w : words_) total += static_cast<std::uint64_t>(std::popcount(w));
  return total;
}

}  // namespace bfsi
