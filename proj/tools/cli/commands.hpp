#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "bfsi/params.hpp"
#include "bfsi/verifiers.hpp"

namespace bfsi::cli {

/// Process exit codes. "No match" is a successful search and exits 0.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,          // IO and anything unexpected
  kUsage = 2,            // invalid parameters or arguments
  kPatternLength = 3,    // pattern outside [min_m, b]
  kTextMismatch = 4,     // index built over a different text
  kBadIndex = 5,         // malformed index file
};

int exit_code_for(const std::exception& e) noexcept;

std::string read_file(const std::string& path);

/// Worker count from --threads, else $BFSI_THREADS, else 1.
unsigned resolve_threads(std::optional<unsigned> flag);

struct BuildArgs {
  std::string input;
  std::string output;
  IndexParams params;
  unsigned threads = 1;
};

struct SearchArgs {
  std::string index;
  std::string text;
  std::string pattern;
  bool count_only = false;
  bool fallback_scan = false;
  VerifierKind verifier = VerifierKind::kAuto;
};

struct StatsArgs {
  std::string index;
  std::optional<std::string> text;
  bool json = false;
};

int run_build(const BuildArgs& args, std::ostream& out);
int run_search(const SearchArgs& args, std::ostream& out);
int run_stats(const StatsArgs& args, std::ostream& out);

}  // namespace bfsi::cli
