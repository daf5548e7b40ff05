#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bfsi/interleaved_table.hpp"
#include "bfsi/params.hpp"

namespace bfsi {

inline constexpr char kIndexMagic[4] = {'B', 'F', 'S', 'I'};
inline constexpr std::uint16_t kIndexVersion = 1;
/// Fixed header size of the index file in bytes.
inline constexpr std::size_t kIndexHeaderBytes = 69;

/// Semi-index over a text that is kept elsewhere. The text itself is not
/// part of the index, only its length and FNV-1a checksum.
struct Index {
  IndexParams params;
  std::uint64_t n = 0;
  std::uint64_t text_checksum = 0;
  std::vector<InterleavedTable> tables;  // one per superblock

  std::uint64_t blocks_total() const noexcept { return block_count(n, params.b); }

  friend bool operator==(const Index&, const Index&) = default;
};

struct BuildOptions {
  unsigned threads = 1;
};

/// Builds the index. Superblocks are independent; with threads > 1 they are
/// distributed over workers, and the output is identical regardless.
Index build(std::string_view text, const IndexParams& params,
            const BuildOptions& options = {});

/// Rows chosen for a table holding at most `max_distinct` items per block.
std::uint32_t table_rows(std::uint64_t max_distinct, const IndexParams& params);

void serialize(const Index& index, std::ostream& out);
std::string serialize(const Index& index);
Index deserialize(std::istream& in);
Index deserialize(std::string_view bytes);

void save_index(const Index& index, const std::string& path);
Index load_index(const std::string& path);

/// Exact size of serialize(index) in bytes.
std::uint64_t serialized_size(const Index& index) noexcept;

struct IndexStats {
  std::uint64_t index_bytes = 0;
  double index_fraction = 0.0;
  std::vector<std::uint32_t> rows_per_superblock;
  std::uint64_t table_bits = 0;
  std::uint64_t set_bits = 0;
  double set_bit_density = 0.0;
  // Filled only when the text is supplied.
  std::optional<std::uint64_t> sampled_grams;
  std::optional<std::uint64_t> distinct_items;  // summed over blocks
};

IndexStats stats(const Index& index);
/// Also recounts sampled and distinct grams; `text` must match the index.
IndexStats stats(const Index& index, std::string_view text);

}  // namespace bfsi
