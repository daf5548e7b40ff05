#include "bfsi/index.hpp"

#include <algorithm>
#include <atomic>
#include <cstring>
#include <fstream>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "bfsi/error.hpp"
#include "bfsi/gram_selector.hpp"
#include "bfsi/hashing.hpp"

namespace bfsi {
namespace {

/// Distinct gram keys of every block of one superblock.
std::vector<std::vector<GramKey>> block_keys(std::string_view text,
                                             const IndexParams& params,
                                             std::uint64_t superblock,
                                             std::uint64_t* sampled = nullptr) {
  const std::uint64_t lo = superblock * params.superblock_span();
  const std::uint64_t hi = std::min<std::uint64_t>(lo + params.superblock_span(), text.size());
  std::vector<std::vector<GramKey>> keys(params.r);
  const auto positions = sampled_positions_between(text, params, lo, hi);
  if (sampled != nullptr) *sampled = positions.size();
  for (auto x : positions) {
    const auto j = static_cast<std::uint32_t>((x - lo) / params.b);
    keys[j].push_back(gram_key(text.substr(x, params.q), params.seed));
  }
  for (auto& block : keys) {
    std::sort(block.begin(), block.end());
    block.erase(std::unique(block.begin(), block.end()), block.end());
  }
  return keys;
}

InterleavedTable build_superblock(std::string_view text, const IndexParams& params,
                                  std::uint64_t superblock) {
  const auto keys = block_keys(text, params, superblock);
  std::uint64_t max_distinct = 0;
  for (const auto& block : keys) max_distinct = std::max<std::uint64_t>(max_distinct, block.size());

  InterleavedTable table(table_rows(max_distinct, params), params.r);
  std::vector<std::uint32_t> rows(params.u);
  for (std::uint32_t j = 0; j < params.r; ++j) {
    for (const auto& key : keys[j]) {
      fill_rows(key, table.rows(), rows);
      table.insert(rows, j);
    }
  }
  return table;
}

// Little-endian field IO.

template <typename T>
void put(std::ostream& out, T value) {
  char buf[sizeof(T)];
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    buf[i] = static_cast<char>(static_cast<std::uint64_t>(value) >> (8 * i));
  }
  out.write(buf, sizeof(T));
}

void read_exact(std::istream& in, char* dst, std::size_t len) {
  in.read(dst, static_cast<std::streamsize>(len));
  if (static_cast<std::size_t>(in.gcount()) != len) {
    throw Error(ErrorCode::kTruncated, "index stream truncated");
  }
}

template <typename T>
T get(std::istream& in) {
  unsigned char buf[sizeof(T)];
  read_exact(in, reinterpret_cast<char*>(buf), sizeof(T));
  std::uint64_t v = 0;
  for (std::size_t i = sizeof(T); i-- > 0;) v = (v << 8) | buf[i];
  return static_cast<T>(v);
}

std::uint64_t table_bytes(std::uint64_t bits) noexcept { return (bits + 7) / 8; }

}  // namespace

std::uint32_t table_rows(std::uint64_t max_distinct, const IndexParams& params) {
  const std::uint64_t rows = align_rows(std::max<std::uint64_t>(1, max_distinct) * params.c, params.r);
  if (rows > std::numeric_limits<std::uint32_t>::max()) {
    throw Error(ErrorCode::kInvalidParams, "superblock table exceeds 2^32 rows; lower c or b");
  }
  return static_cast<std::uint32_t>(rows);
}

Index build(std::string_view text, const IndexParams& raw_params,
            const BuildOptions& options) {
  validate_params(raw_params);
  const IndexParams params = raw_params.normalized();
  if (text.size() < params.q) {
    throw Error(ErrorCode::kTextTooShort, "text shorter than q");
  }

  Index index;
  index.params = params;
  index.n = text.size();
  index.text_checksum = fnv1a64(text);
  const std::uint64_t count = (index.n + params.superblock_span() - 1) / params.superblock_span();
  index.tables.resize(count);

  const unsigned workers = std::max(1U, std::min<unsigned>(options.threads, count));
  if (workers == 1) {
    for (std::uint64_t i = 0; i < count; ++i) index.tables[i] = build_superblock(text, params, i);
    return index;
  }

  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      try {
        for (auto i = next++; i < count; i = next++) {
          index.tables[i] = build_superblock(text, params, i);
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  pool.clear();
  if (failure) std::rethrow_exception(failure);
  return index;
}

std::uint64_t serialized_size(const Index& index) noexcept {
  std::uint64_t total = kIndexHeaderBytes;
  for (const auto& t : index.tables) total += 4 + table_bytes(t.bit_count());
  return total;
}

void serialize(const Index& index, std::ostream& out) {
  const auto& P = index.params;
  out.write(kIndexMagic, 4);
  put<std::uint16_t>(out, kIndexVersion);
  put<std::uint8_t>(out, static_cast<std::uint8_t>(P.variant));
  put<std::uint16_t>(out, static_cast<std::uint16_t>(P.q));
  put<std::uint64_t>(out, P.b);
  put<std::uint32_t>(out, P.r);
  put<std::uint16_t>(out, static_cast<std::uint16_t>(P.c));
  put<std::uint16_t>(out, static_cast<std::uint16_t>(P.u));
  put<std::uint32_t>(out, P.s);
  put<std::uint32_t>(out, P.w);
  put<std::uint32_t>(out, P.p);
  put<std::uint64_t>(out, P.seed);
  put<std::uint64_t>(out, index.n);
  put<std::uint64_t>(out, index.text_checksum);
  put<std::uint64_t>(out, index.tables.size());

  std::string bytes;
  for (const auto& table : index.tables) {
    put<std::uint32_t>(out, table.rows());
    bytes.assign(table_bytes(table.bit_count()), '\0');
    const auto words = table.words();
    for (std::size_t i = 0; i < bytes.size(); ++i) {
      bytes[i] = static_cast<char>(words[i / 8] >> (8 * (i % 8)));
    }
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  }
}

std::string serialize(const Index& index) {
  std::ostringstream out;
  serialize(index, out);
  return std::move(out).str();
}

Index deserialize(std::istream& in) {
  char magic[4];
  read_exact(in, magic, 4);
  if (std::memcmp(magic, kIndexMagic, 4) != 0) {
    throw Error(ErrorCode::kBadMagic, "bad magic: not a BFSI index");
  }
  const auto version = get<std::uint16_t>(in);
  if (version != kIndexVersion) {
    throw Error(ErrorCode::kUnsupportedVersion,
                "unsupported index version " + std::to_string(version));
  }

  Index index;
  auto& P = index.params;
  const auto variant = get<std::uint8_t>(in);
  if (variant > 2) throw Error(ErrorCode::kCorrupt, "unknown variant tag");
  P.variant = static_cast<Variant>(variant);
  P.q = get<std::uint16_t>(in);
  P.b = get<std::uint64_t>(in);
  P.r = get<std::uint32_t>(in);
  P.c = get<std::uint16_t>(in);
  P.u = get<std::uint16_t>(in);
  P.s = get<std::uint32_t>(in);
  P.w = get<std::uint32_t>(in);
  P.p = get<std::uint32_t>(in);
  P.seed = get<std::uint64_t>(in);
  index.n = get<std::uint64_t>(in);
  index.text_checksum = get<std::uint64_t>(in);
  const auto count = get<std::uint64_t>(in);

  if (auto problem = check_params(P)) {
    throw Error(ErrorCode::kCorrupt, "corrupt header: " + *problem);
  }
  if (P != P.normalized()) throw Error(ErrorCode::kCorrupt, "corrupt header: unused fields set");
  if (index.n < P.q || count != (index.n + P.superblock_span() - 1) / P.superblock_span()) {
    throw Error(ErrorCode::kCorrupt, "corrupt header: superblock count does not match n");
  }

  constexpr std::size_t kChunk = std::size_t{1} << 20;
  std::string bytes;
  for (std::uint64_t i = 0; i < count; ++i) {
    const auto rows = get<std::uint32_t>(in);
    if (rows == 0) throw Error(ErrorCode::kCorrupt, "superblock table with zero rows");
    const std::uint64_t bits = std::uint64_t{rows} * P.r;
    const std::uint64_t len = table_bytes(bits);
    // Read in bounded chunks so a corrupt length fails as truncation rather
    // than as a giant allocation.
    bytes.clear();
    while (bytes.size() < len) {
      const std::size_t step = static_cast<std::size_t>(std::min<std::uint64_t>(kChunk, len - bytes.size()));
      const std::size_t at = bytes.size();
      bytes.resize(at + step);
      read_exact(in, bytes.data() + at, step);
    }
    std::vector<std::uint64_t> words((bits + 63) / 64, 0);
    for (std::size_t k = 0; k < bytes.size(); ++k) {
      words[k / 8] |= std::uint64_t{static_cast<unsigned char>(bytes[k])} << (8 * (k % 8));
    }
    index.tables.emplace_back(rows, P.r, std::move(words));
  }
  if (in.peek() != std::char_traits<char>::eof()) {
    throw Error(ErrorCode::kCorrupt, "trailing bytes after last superblock");
  }
  return index;
}

Index deserialize(std::string_view bytes) {
  std::istringstream in{std::string(bytes)};
  return deserialize(in);
}

void save_index(const Index& index, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot open " + path + " for writing");
  serialize(index, out);
  out.flush();
  if (!out) throw Error(ErrorCode::kIo, "write to " + path + " failed");
}

Index load_index(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  return deserialize(in);
}

IndexStats stats(const Index& index) {
  IndexStats out;
  out.index_bytes = serialized_size(index);
  out.index_fraction = index.n == 0 ? 0.0 : static_cast<double>(out.index_bytes) / static_cast<double>(index.n);
  for (const auto& t : index.tables) {
    out.rows_per_superblock.push_back(t.rows());
    out.table_bits += t.bit_count();
    out.set_bits += t.popcount();
  }
  out.set_bit_density = out.table_bits == 0 ? 0.0 : static_cast<double>(out.set_bits) / static_cast<double>(out.table_bits);
  return out;
}

IndexStats stats(const Index& index, std::string_view text) {
  if (text.size() != index.n || fnv1a64(text) != index.text_checksum) {
    throw Error(ErrorCode::kChecksumMismatch, "index/text mismatch");
  }
  IndexStats out = stats(index);
  std::uint64_t sampled = 0, distinct = 0;
  for (std::uint64_t i = 0; i < index.tables.size(); ++i) {
    std::uint64_t here = 0;
    for (const auto& block : block_keys(text, index.params, i, &here)) distinct += block.size();
    sampled += here;
  }
  out.sampled_grams = sampled;
  out.distinct_items = distinct;
  return out;
}

}  // namespace bfsi
