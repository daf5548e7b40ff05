#include "bfsi/searcher.hpp"

#include <algorithm>
#include <bit>

#include "bfsi/error.hpp"
#include "bfsi/hashing.hpp"

namespace bfsi {
namespace {

// lane | lane >> 1 with `carry` entering at bit r - 1: bit j becomes
// "present in block j or block j + 1".
void pair_union(std::span<std::uint64_t> lane, std::uint32_t r, bool carry) {
  const std::size_t n = lane.size();
  for (std::size_t w = 0; w < n; ++w) {
    const std::uint64_t hi = w + 1 < n ? lane[w + 1] << 63 : 0;
    lane[w] |= (lane[w] >> 1) | hi;
  }
  if (carry) lane[(r - 1) >> 6] |= std::uint64_t{1} << ((r - 1) & 63);
}

std::uint64_t scan_block(std::string_view text, std::string_view pattern,
                         const CandidateBlock& cand, VerifierKind verifier,
                         std::vector<std::uint64_t>& out) {
  const std::size_t before = out.size();
  find_all_into(verifier, text.substr(cand.begin, cand.scan_end - cand.begin), pattern,
                cand.begin, out);
  while (out.size() > before && out.back() >= cand.end) out.pop_back();
  return cand.scan_end - cand.begin;
}

}  // namespace

std::vector<CandidateBlock> candidate_blocks(const Index& index, const QueryPlan& plan,
                                             std::uint64_t m, std::uint64_t* probes) {
  const auto& P = index.params;
  const std::uint64_t total = index.blocks_total();
  const std::size_t nwords = (P.r + 63) / 64;
  const std::size_t sb_count = index.tables.size();

  std::vector<std::uint64_t> found(nwords), acc(nwords), lane(nwords);
  std::vector<std::uint32_t> rows(P.u);
  std::uint64_t probe_count = 0;
  std::vector<CandidateBlock> out;

  for (std::size_t i = 0; i < sb_count; ++i) {
    const InterleavedTable& table = index.tables[i];
    const InterleavedTable* next = i + 1 < sb_count ? &index.tables[i + 1] : nullptr;
    const std::uint64_t first_block = i * std::uint64_t{P.r};
    const auto live = static_cast<std::uint32_t>(std::min<std::uint64_t>(P.r, total - first_block));

    std::fill(found.begin(), found.end(), 0);
    for (const auto& cls : plan.classes) {
      for (std::size_t w = 0; w < nwords; ++w) {
        const std::uint64_t from = 64 * w;
        acc[w] = live >= from + 64 ? ~std::uint64_t{0}
                 : live > from     ? (std::uint64_t{1} << (live - from)) - 1
                                   : 0;
      }
      for (auto g : cls) {
        const GramKey& key = plan.grams[g];
        fill_rows(key, table.rows(), rows);
        table.lane_and(rows, lane);
        ++probe_count;
        bool carry = false;
        if (next != nullptr) {
          fill_rows(key, next->rows(), rows);
          carry = next->test_block(rows, 0);
        }
        pair_union(lane, P.r, carry);
        bool any = false;
        for (std::size_t w = 0; w < nwords; ++w) any |= (acc[w] &= lane[w]) != 0;
        if (!any) break;
      }
      for (std::size_t w = 0; w < nwords; ++w) found[w] |= acc[w];
    }

    for (std::size_t w = 0; w < nwords; ++w) {
      for (std::uint64_t bits = found[w]; bits != 0; bits &= bits - 1) {
        const std::uint64_t g = first_block + 64 * w + std::countr_zero(bits);
        const std::uint64_t begin = g * P.b;
        const std::uint64_t end = std::min(begin + P.b, index.n);
        out.push_back({g, begin, end, std::min(end + m - 1, index.n)});
      }
    }
  }
  if (probes != nullptr) *probes += probe_count;
  return out;
}

Searcher::Searcher(const Index& index, std::string_view text) : index_(&index), text_(text) {
  if (text.size() != index.n || fnv1a64(text) != index.text_checksum) {
    throw Error(ErrorCode::kChecksumMismatch, "index/text mismatch");
  }
}

SearchReport Searcher::search(std::string_view pattern, const SearchOptions& options) const {
  const auto& P = index_->params;
  if (options.fallback_scan && pattern.size() < required_min_m(P) && !pattern.empty()) {
    return full_scan(text_, pattern, options.verifier, P.b);
  }
  const QueryPlan plan = query_plan(pattern, P);

  SearchReport report;
  report.blocks_total = index_->blocks_total();
  const auto candidates = candidate_blocks(*index_, plan, pattern.size(), &report.filter_probe_count);
  report.candidate_blocks = candidates.size();
  for (const auto& cand : candidates) {
    report.scanned_bytes += scan_block(text_, pattern, cand, options.verifier, report.occurrences);
  }
  return report;
}

SearchReport search(const Index& index, std::string_view text, std::string_view pattern,
                    const SearchOptions& options) {
  return Searcher(index, text).search(pattern, options);
}

SearchReport full_scan(std::string_view text, std::string_view pattern, VerifierKind verifier,
                       std::uint64_t block_size) {
  if (pattern.empty()) {
    throw PatternLengthError(ErrorCode::kPatternTooShort, "empty pattern", 1);
  }
  SearchReport report;
  report.blocks_total = block_size == 0 ? 1 : block_count(text.size(), block_size);
  report.candidate_blocks = report.blocks_total;
  report.scanned_bytes = text.size();
  find_all_into(verifier, text, pattern, 0, report.occurrences);
  return report;
}

}  // namespace bfsi
