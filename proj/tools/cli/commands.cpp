#include "commands.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "bfsi/error.hpp"
#include "bfsi/index.hpp"
#include "bfsi/searcher.hpp"

namespace bfsi::cli {

int exit_code_for(const std::exception& e) noexcept {
  const auto* err = dynamic_cast<const Error*>(&e);
  if (err == nullptr) return kFailure;
  switch (err->code()) {
    case ErrorCode::kInvalidParams:
    case ErrorCode::kTextTooShort:
    case ErrorCode::kUnknownVerifier:
    case ErrorCode::kVerifierLimit:
      return kUsage;
    case ErrorCode::kPatternTooShort:
    case ErrorCode::kPatternTooLong:
      return kPatternLength;
    case ErrorCode::kChecksumMismatch:
      return kTextMismatch;
    case ErrorCode::kBadMagic:
    case ErrorCode::kUnsupportedVersion:
    case ErrorCode::kTruncated:
    case ErrorCode::kCorrupt:
      return kBadIndex;
    case ErrorCode::kIo:
      return kFailure;
  }
  return kFailure;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIo, "read from " + path + " failed");
  return std::move(buf).str();
}

unsigned resolve_threads(std::optional<unsigned> flag) {
  if (flag) return std::max(1U, *flag);
  if (const char* env = std::getenv("BFSI_THREADS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return 1;
}

namespace {

void print_stats(std::ostream& out, const Index& index, const IndexStats& s) {
  const auto& P = index.params;
  out << "variant:          " << to_string(P.variant) << '\n'
      << "q b r c u:        " << P.q << ' ' << P.b << ' ' << P.r << ' ' << P.c << ' ' << P.u << '\n';
  if (P.variant == Variant::kSam) out << "s:                " << P.s << '\n';
  if (P.variant == Variant::kMsam) out << "w p:              " << P.w << ' ' << P.p << '\n';
  out << "text bytes:       " << index.n << '\n'
      << "superblocks:      " << index.tables.size() << '\n'
      << "blocks:           " << index.blocks_total() << '\n'
      << "index bytes:      " << s.index_bytes << '\n'
      << "index fraction:   " << std::fixed << std::setprecision(6) << s.index_fraction << '\n'
      << "set-bit density:  " << s.set_bit_density << '\n';
  out.unsetf(std::ios::floatfield);
  if (s.sampled_grams) out << "sampled grams:    " << *s.sampled_grams << '\n';
  if (s.distinct_items) out << "distinct items:   " << *s.distinct_items << '\n';
}

nlohmann::json stats_json(const Index& index, const IndexStats& s) {
  const auto& P = index.params;
  nlohmann::json j = {
      {"version", kIndexVersion},
      {"variant", to_string(P.variant)},
      {"q", P.q},
      {"b", P.b},
      {"r", P.r},
      {"c", P.c},
      {"u", P.u},
      {"s", P.s},
      {"w", P.w},
      {"p", P.p},
      {"seed", P.seed},
      {"n", index.n},
      {"text_checksum", index.text_checksum},
      {"superblock_count", index.tables.size()},
      {"blocks_total", index.blocks_total()},
      {"index_bytes", s.index_bytes},
      {"index_fraction", s.index_fraction},
      {"table_bits", s.table_bits},
      {"set_bits", s.set_bits},
      {"set_bit_density", s.set_bit_density},
      {"rows_per_superblock", s.rows_per_superblock},
  };
  if (s.sampled_grams) j["sampled_grams"] = *s.sampled_grams;
  if (s.distinct_items) j["distinct_items"] = *s.distinct_items;
  return j;
}

}  // namespace

int run_build(const BuildArgs& args, std::ostream& out) {
  const std::string text = read_file(args.input);
  const Index index = build(text, args.params, {.threads = args.threads});
  save_index(index, args.output);
  out << "wrote " << args.output << '\n';
  print_stats(out, index, stats(index));
  return kOk;
}

int run_search(const SearchArgs& args, std::ostream& out) {
  const Index index = load_index(args.index);
  const std::string text = read_file(args.text);
  const Searcher searcher(index, text);
  const auto report = searcher.search(args.pattern, {.verifier = args.verifier,
                                                     .fallback_scan = args.fallback_scan});
  if (args.count_only) {
    out << report.occurrences.size() << '\n';
  } else {
    for (auto pos : report.occurrences) out << pos << '\n';
  }
  out << "# matches=" << report.occurrences.size()
      << " candidate_blocks=" << report.candidate_blocks
      << " blocks_total=" << report.blocks_total
      << " scanned_bytes=" << report.scanned_bytes
      << " filter_probe_count=" << report.filter_probe_count << '\n';
  return kOk;
}

int run_stats(const StatsArgs& args, std::ostream& out) {
  const Index index = load_index(args.index);
  IndexStats s;
  if (args.text) {
    const std::string text = read_file(*args.text);
    s = stats(index, text);
  } else {
    s = stats(index);
  }
  if (args.json) {
    out << stats_json(index, s).dump(2) << '\n';
  } else {
    out << "format version:   " << kIndexVersion << '\n';
    print_stats(out, index, s);
    out << "rows per superblock:";
    for (auto rows : s.rows_per_superblock) out << ' ' << rows;
    out << '\n';
  }
  return kOk;
}

}  // namespace bfsi::cli
