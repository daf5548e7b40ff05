#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "bfsi/hashing.hpp"
#include "bfsi/params.hpp"

namespace bfsi {

/// Start positions of the leftmost lexicographically smallest p-mer of every
/// w-long window of `range`, deduplicated and ascending. Empty when the range
/// is shorter than w. Comparison is bytewise unsigned.
std::vector<std::uint64_t> minimizer_positions(std::string_view range,
                                               std::uint32_t w, std::uint32_t p);

/// Minimizer positions of `text` (windows sliding over the whole text) that
/// fall inside [lo, hi). Only the windows that can reach [lo, hi) are scanned.
std::vector<std::uint64_t> minimizer_positions_between(std::string_view text,
                                                       std::uint32_t w,
                                                       std::uint32_t p,
                                                       std::uint64_t lo,
                                                       std::uint64_t hi);

/// Absolute start positions x in [lo, hi) whose gram is inserted at build time.
/// Every returned x satisfies x + q <= text.size().
std::vector<std::uint64_t> sampled_positions_between(std::string_view text,
                                                     const IndexParams& params,
                                                     std::uint64_t lo,
                                                     std::uint64_t hi);

/// All sampled positions of the text.
std::vector<std::uint64_t> build_positions(std::string_view text,
                                           const IndexParams& params);

/// Which pattern grams to probe and how to combine their answers.
///
/// A block passes the plan when some class has all of its grams present. STD
/// and MSAM plans have a single class; SAM has one class per residue mod s.
struct QueryPlan {
  Variant variant = Variant::kStd;
  std::vector<GramKey> grams;
  std::vector<std::uint32_t> offsets;  // start of each gram in the pattern
  std::vector<std::vector<std::uint32_t>> classes;
};

QueryPlan query_plan(std::string_view pattern, const IndexParams& params);

}  // namespace bfsi
