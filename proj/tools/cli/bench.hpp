#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "bfsi/params.hpp"
#include "bfsi/verifiers.hpp"

namespace bfsi::cli {

/// One CSV line of `bfsi bench`. Column order is fixed (see kBenchHeader).
struct BenchRow {
  Variant variant = Variant::kStd;
  std::uint32_t q = 0;
  std::uint64_t b = 0;
  std::uint32_t r = 0;
  std::uint32_t c = 0;
  std::uint32_t s = 0;
  std::uint32_t w = 0;
  std::uint32_t p = 0;
  std::uint64_t m = 0;
  std::uint64_t index_bytes = 0;
  double index_fraction = 0;
  double candidate_fraction = 0;  // mean over patterns
  double scanned_fraction = 0;    // mean scanned bytes / n
  std::uint64_t matches = 0;      // summed over patterns
  double build_ms = 0;
  double mean_search_us = 0;
  double search_MBps = 0;
};

inline constexpr std::string_view kBenchHeader =
    "variant,q,b,r,c,s,w,p,m,index_bytes,index_fraction,candidate_fraction,"
    "scanned_fraction,matches,build_ms,mean_search_us,search_MBps";

/// Cartesian parameter grid. s applies only to SAM, w and p only to MSAM.
struct BenchGrid {
  std::vector<Variant> variants = {Variant::kStd};
  std::vector<std::uint32_t> q = {8};
  std::vector<std::uint64_t> b = {8192};
  std::vector<std::uint32_t> r = {kDefaultBlocksPerSuperblock};
  std::vector<std::uint32_t> c = {6};
  std::vector<std::uint32_t> s = {1};
  std::vector<std::uint32_t> w = {8};
  std::vector<std::uint32_t> p = {4};
  std::vector<std::uint64_t> m = {32};
  std::uint32_t u = 0;  // 0 derives from c
};

struct BenchOptions {
  BenchGrid grid;
  std::size_t patterns = 100;
  bool absent = false;  // add a row of oracle-verified absent patterns per point
  std::uint64_t seed = 0;
  unsigned threads = 1;
  VerifierKind verifier = VerifierKind::kAuto;
};

/// Runs the grid over `text`. Rows come back in grid order; grid points that
/// violate a parameter or pattern-length rule are reported on `warnings` and
/// skipped.
std::vector<BenchRow> run_bench(std::string_view text, const BenchOptions& options,
                                std::ostream& warnings);

void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const BenchRow& row);

/// Patterns of length m taken at uniform offsets of the text.
std::vector<std::string> sample_patterns(std::string_view text, std::size_t m,
                                         std::size_t count, std::uint64_t seed);

/// Random patterns over the text's own byte distribution, each verified
/// absent. May return fewer than `count` when absent strings are rare.
std::vector<std::string> absent_patterns(std::string_view text, std::size_t m,
                                         std::size_t count, std::uint64_t seed);

}  // namespace bfsi::cli
