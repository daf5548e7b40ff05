#include "bfsi/verifiers.hpp"

#include <array>
#include <cstring>
#include <string>

#include "bfsi/error.hpp"

namespace bfsi {
namespace {

void naive(std::string_view hay, std::string_view pat, std::uint64_t base,
           std::vector<std::uint64_t>& out) {
  const std::size_t m = pat.size();
  for (std::size_t x = 0; x + m <= hay.size(); ++x) {
    std::size_t k = 0;
    while (k < m && hay[x + k] == pat[k]) ++k;
    if (k == m) out.push_back(base + x);
  }
}

// Shift-or: bit k of `state` is 0 iff pat[0..k] matches the text ending here.
void shift_or(std::string_view hay, std::string_view pat, std::uint64_t base,
              std::vector<std::uint64_t>& out) {
  const std::size_t m = pat.size();
  std::array<std::uint64_t, 256> masks;
  masks.fill(~std::uint64_t{0});
  for (std::size_t k = 0; k < m; ++k) {
    masks[static_cast<unsigned char>(pat[k])] &= ~(std::uint64_t{1} << k);
  }
  const std::uint64_t hit = std::uint64_t{1} << (m - 1);
  std::uint64_t state = ~std::uint64_t{0};
  for (std::size_t i = 0; i < hay.size(); ++i) {
    state = (state << 1) | masks[static_cast<unsigned char>(hay[i])];
    if ((state & hit) == 0) out.push_back(base + i + 1 - m);
  }
}

void horspool(std::string_view hay, std::string_view pat, std::uint64_t base,
              std::vector<std::uint64_t>& out) {
  const std::size_t m = pat.size();
  if (hay.size() < m) return;
  std::array<std::size_t, 256> shift;
  shift.fill(m);
  for (std::size_t k = 0; k + 1 < m; ++k) {
    shift[static_cast<unsigned char>(pat[k])] = m - 1 - k;
  }
  const unsigned char last = static_cast<unsigned char>(pat[m - 1]);
  const std::size_t end = hay.size() - m;
  std::size_t x = 0;
  while (x <= end) {
    const auto tail = static_cast<unsigned char>(hay[x + m - 1]);
    if (tail == last && std::memcmp(hay.data() + x, pat.data(), m - 1) == 0) {
      out.push_back(base + x);
    }
    x += shift[tail];
  }
}

}  // namespace

std::string_view to_string(VerifierKind kind) noexcept {
  switch (kind) {
    case VerifierKind::kNaive: return "naive";
    case VerifierKind::kBitParallel: return "bitparallel";
    case VerifierKind::kComparison: return "comparison";
    case VerifierKind::kAuto: return "auto";
  }
  return "?";
}

std::optional<VerifierKind> parse_verifier(std::string_view name) noexcept {
  if (name == "naive") return VerifierKind::kNaive;
  if (name == "bitparallel" || name == "shift-or") return VerifierKind::kBitParallel;
  if (name == "comparison" || name == "horspool") return VerifierKind::kComparison;
  if (name == "auto") return VerifierKind::kAuto;
  return std::nullopt;
}

VerifierKind verifier_from_name(std::string_view name) {
  if (auto kind = parse_verifier(name)) return *kind;
  throw Error(ErrorCode::kUnknownVerifier, "unknown verifier '" + std::string(name) +
                                               "' (expected naive, bitparallel, comparison or auto)");
}

VerifierKind route(VerifierKind kind, std::size_t m) noexcept {
  if (kind != VerifierKind::kAuto) return kind;
  return m <= kBitParallelMaxPattern ? VerifierKind::kBitParallel : VerifierKind::kComparison;
}

void find_all_into(VerifierKind kind, std::string_view haystack,
                   std::string_view pattern, std::uint64_t base,
                   std::vector<std::uint64_t>& out) {
  if (pattern.empty()) return;
  switch (route(kind, pattern.size())) {
    case VerifierKind::kNaive:
      naive(haystack, pattern, base, out);
      break;
    case VerifierKind::kBitParallel:
      if (pattern.size() > kBitParallelMaxPattern) {
        throw Error(ErrorCode::kVerifierLimit,
                    "bitparallel verifier supports patterns up to " +
                        std::to_string(kBitParallelMaxPattern) + " bytes; use comparison");
      }
      shift_or(haystack, pattern, base, out);
      break;
    case VerifierKind::kComparison:
    case VerifierKind::kAuto:
      horspool(haystack, pattern, base, out);
      break;
  }
}

std::vector<std::uint64_t> find_all(VerifierKind kind, std::string_view haystack,
                                    std::string_view pattern) {
  std::vector<std::uint64_t> out;
  find_all_into(kind, haystack, pattern, 0, out);
  return out;
}

}  // namespace bfsi
