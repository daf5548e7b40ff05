// bfsi: build, query, inspect and benchmark Bloom-filter q-gram semi-indexes.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "bfsi/error.hpp"
#include "cli/bench.hpp"
#include "cli/commands.hpp"

namespace {

using namespace bfsi;
using namespace bfsi::cli;

Variant variant_or_throw(const std::string& name) {
  if (auto v = parse_variant(name)) return *v;
  throw Error(ErrorCode::kInvalidParams, "unknown variant '" + name + "' (expected std, sam or msam)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bloom-filter q-gram semi-index: block-filtered exact pattern search"};
  app.require_subcommand(1);
  app.fallthrough();
  std::uint64_t seed = 0;
  std::optional<unsigned> threads;
  app.add_option("--seed", seed, "Hash / pattern-sampling seed")->capture_default_str();
  app.add_option("--threads", threads, "Worker threads (default: $BFSI_THREADS or 1)");

  // build
  auto* build_cmd = app.add_subcommand("build", "Build an index over a text file");
  BuildArgs build_args;
  std::string build_variant = "std";
  std::optional<std::uint32_t> build_u;
  IndexParams& bp = build_args.params;
  bp.s = 1;
  bp.w = 8;
  bp.p = 4;
  build_cmd->add_option("-i,--input", build_args.input, "Text file")->required();
  build_cmd->add_option("-o,--output", build_args.output, "Index file to write")->required();
  build_cmd->add_option("--variant", build_variant, "std | sam | msam")->capture_default_str();
  build_cmd->add_option("--q", bp.q, "q-gram length")->capture_default_str();
  build_cmd->add_option("--b", bp.b, "Block size in bytes")->capture_default_str();
  build_cmd->add_option("--r", bp.r, "Blocks per superblock")->capture_default_str();
  build_cmd->add_option("--c", bp.c, "Bits per inserted q-gram")->capture_default_str();
  build_cmd->add_option("--u", build_u, "Hash functions (default: round(c ln 2))");
  build_cmd->add_option("--s", bp.s, "SAM sampling step")->capture_default_str();
  build_cmd->add_option("--w", bp.w, "MSAM window length")->capture_default_str();
  build_cmd->add_option("--p", bp.p, "MSAM minimizer length")->capture_default_str();

  // search
  auto* search_cmd = app.add_subcommand("search", "Find all occurrences of a pattern");
  SearchArgs search_args;
  std::string pattern_file, verifier_name = "auto";
  search_cmd->add_option("-i,--index", search_args.index, "Index file")->required();
  search_cmd->add_option("-t,--text", search_args.text, "Text file the index was built on")->required();
  auto* pattern_opt = search_cmd->add_option("-p,--pattern", search_args.pattern, "Pattern");
  auto* pattern_file_opt =
      search_cmd->add_option("--pattern-file", pattern_file, "Read the pattern from a file");
  pattern_opt->excludes(pattern_file_opt);
  search_cmd->add_flag("--count", search_args.count_only, "Print only the number of matches");
  search_cmd->add_flag("--fallback-scan", search_args.fallback_scan,
                       "Scan the whole text when the pattern is too short for the index");
  search_cmd->add_option("--verifier", verifier_name, "naive | bitparallel | comparison | auto")
      ->capture_default_str();

  // stats
  auto* stats_cmd = app.add_subcommand("stats", "Describe an index file");
  StatsArgs stats_args;
  std::string stats_text;
  stats_cmd->add_option("-i,--index", stats_args.index, "Index file")->required();
  stats_cmd->add_option("-t,--text", stats_text, "Text file (adds sampled/distinct gram counts)");
  stats_cmd->add_flag("--json", stats_args.json, "Emit JSON");

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "Sweep a parameter grid and write CSV rows");
  BenchOptions bench;
  std::string bench_input, bench_output, bench_verifier = "auto";
  std::vector<std::string> bench_variants = {"std"};
  auto list = [&](const char* name, auto& target, const char* help) {
    bench_cmd->add_option(name, target, help)->delimiter(',')->capture_default_str();
  };
  bench_cmd->add_option("-i,--input", bench_input, "Text file")->required();
  bench_cmd->add_option("-o,--output", bench_output, "CSV file (default: stdout)");
  list("--variant", bench_variants, "Variants");
  list("--q", bench.grid.q, "q values");
  list("--b", bench.grid.b, "Block sizes");
  list("--r", bench.grid.r, "Blocks per superblock");
  list("--c", bench.grid.c, "Bits per item");
  list("--s", bench.grid.s, "SAM steps");
  list("--w", bench.grid.w, "MSAM windows");
  list("--p", bench.grid.p, "MSAM minimizer lengths");
  list("--m", bench.grid.m, "Pattern lengths");
  bench_cmd->add_option("--u", bench.grid.u, "Hash functions (0: derive from c)");
  bench_cmd->add_option("--patterns", bench.patterns, "Patterns per grid point")->capture_default_str();
  bench_cmd->add_flag("--absent", bench.absent, "Also time patterns verified absent from the text");
  bench_cmd->add_option("--verifier", bench_verifier, "Verifier")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kOk : cli::kUsage;
  }

  try {
    if (*build_cmd) {
      bp.variant = variant_or_throw(build_variant);
      bp.u = build_u.value_or(derive_hash_count(bp.c));
      bp.seed = seed;
      build_args.threads = resolve_threads(threads);
      return run_build(build_args, std::cout);
    }
    if (*search_cmd) {
      if (*pattern_file_opt) {
        search_args.pattern = read_file(pattern_file);
      } else if (!*pattern_opt) {
        std::cerr << "search: one of --pattern or --pattern-file is required\n";
        return kUsage;
      }
      search_args.verifier = verifier_from_name(verifier_name);
      return run_search(search_args, std::cout);
    }
    if (*stats_cmd) {
      if (!stats_text.empty()) stats_args.text = stats_text;
      return run_stats(stats_args, std::cout);
    }
    if (*bench_cmd) {
      bench.grid.variants.clear();
      for (const auto& name : bench_variants) bench.grid.variants.push_back(variant_or_throw(name));
      bench.seed = seed;
      bench.threads = resolve_threads(threads);
      bench.verifier = verifier_from_name(bench_verifier);
      const std::string text = read_file(bench_input);
      const auto rows = run_bench(text, bench, std::cerr);
      std::ofstream file;
      if (!bench_output.empty()) {
        file.open(bench_output, std::ios::binary | std::ios::trunc);
        if (!file) throw Error(ErrorCode::kIo, "cannot open " + bench_output);
      }
      std::ostream& out = bench_output.empty() ? std::cout : file;
      write_csv_header(out);
      for (const auto& row : rows) write_csv_row(out, row);
      return kOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "bfsi: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return kUsage;
}
