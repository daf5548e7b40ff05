#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "bfsi/gram_selector.hpp"
#include "bfsi/index.hpp"
#include "bfsi/verifiers.hpp"

namespace bfsi {

/// A block the filter could not exclude. Matches are reported only when they
/// start inside [begin, end); the scan runs to scan_end so that matches
/// crossing into the next block are seen.
struct CandidateBlock {
  std::uint64_t block = 0;
  std::uint64_t begin = 0;
  std::uint64_t end = 0;
  std::uint64_t scan_end = 0;

  friend bool operator==(const CandidateBlock&, const CandidateBlock&) = default;
};

struct SearchReport {
  std::vector<std::uint64_t> occurrences;
  std::uint64_t candidate_blocks = 0;
  std::uint64_t blocks_total = 0;
  std::uint64_t scanned_bytes = 0;
  std::uint64_t filter_probe_count = 0;  // lane lookups
};

struct SearchOptions {
  VerifierKind verifier = VerifierKind::kAuto;
  /// Scan the whole text instead of failing when the pattern is shorter than
  /// the variant's minimum.
  bool fallback_scan = false;
};

/// Blocks whose (block, next block) pair passes the plan, ascending.
///
/// The pair union is what makes the filter lossless: a match starting in
/// block g may take some of its grams from block g + 1 (m <= b keeps it within
/// those two). The next block of a superblock's last block is block 0 of the
/// following superblock.
std::vector<CandidateBlock> candidate_blocks(const Index& index, const QueryPlan& plan,
                                             std::uint64_t m,
                                             std::uint64_t* probes = nullptr);

/// Binds an index to its text after checking the checksum once; cheap to
/// query repeatedly.
class Searcher {
 public:
  Searcher(const Index& index, std::string_view text);

  SearchReport search(std::string_view pattern, const SearchOptions& options = {}) const;

  const Index& index() const noexcept { return *index_; }
  std::string_view text() const noexcept { return text_; }

 private:
  const Index* index_;
  std::string_view text_;
};

SearchReport search(const Index& index, std::string_view text, std::string_view pattern,
                    const SearchOptions& options = {});

/// Baseline: scan everything with the given verifier.
SearchReport full_scan(std::string_view text, std::string_view pattern,
                       VerifierKind verifier = VerifierKind::kAuto,
                       std::uint64_t block_size = 0);

}  // namespace bfsi
