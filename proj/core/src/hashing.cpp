#include "bfsi/hashing.hpp"

#include <cstring>

namespace bfsi {
namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kStepSalt = 0xA0761D6478BD642FULL;

constexpr std::uint64_t fmix64(std::uint64_t x) noexcept {
  x ^= x >> 33;
  x *= 0xFF51AFD7ED558CCDULL;
  x ^= x >> 33;
  x *= 0xC4CEB9FE1A85EC53ULL;
  x ^= x >> 33;
  return x;
}

inline std::uint64_t load_le64(const char* p) noexcept {
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) {
    v = (v << 8) | static_cast<unsigned char>(p[i]);
  }
  return v;
}

}  // namespace

std::uint64_t hash_bytes(std::string_view bytes, std::uint64_t seed) noexcept {
  std::uint64_t h = fmix64(seed ^ (kGolden * (bytes.size() + 1)));
  const char* p = bytes.data();
  std::size_t left = bytes.size();
  while (left >= 8) {
    h = fmix64(h ^ load_le64(p)) + kGolden;
    p += 8;
    left -= 8;
  }
  std::uint64_t tail = static_cast<std::uint64_t>(left) << 56;
  for (std::size_t i = 0; i < left; ++i) {
    tail |= static_cast<std::uint64_t>(static_cast<unsigned char>(p[i])) << (8 * i);
  }
  return fmix64(h ^ tail);
}

GramKey gram_key(std::string_view gram, std::uint64_t seed) noexcept {
  return {hash_bytes(gram, seed), hash_bytes(gram, seed ^ kStepSalt) | 1U};
}

void fill_rows(const GramKey& key, std::uint32_t rows,
               std::span<std::uint32_t> out) noexcept {
  std::uint64_t acc = key.base;
  for (auto& slot : out) {
    slot = static_cast<std::uint32_t>(acc % rows);
    acc += key.step;
  }
}

GramHashes base_hashes(std::string_view gram, std::uint32_t u,
                       std::uint32_t rows, std::uint64_t seed) {
  GramHashes out;
  out.rows.resize(u);
  fill_rows(gram_key(gram, seed), rows, out.rows);
  return out;
}

std::uint64_t fnv1a64(std::string_view bytes) noexcept {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001B3ULL;
  }
  return h;
}

}  // namespace bfsi
