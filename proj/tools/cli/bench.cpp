#include "bench.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <mutex>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include "bfsi/error.hpp"
#include "bfsi/index.hpp"
#include "bfsi/searcher.hpp"

namespace bfsi::cli {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// One index configuration; its rows cover every m of the grid.
struct Job {
  IndexParams params;
  std::vector<BenchRow> rows;
  std::string warnings;
};

std::vector<Job> expand(const BenchGrid& g) {
  std::vector<Job> jobs;
  for (auto variant : g.variants) {
    const std::vector<std::uint32_t> none = {0};
    const auto& ss = variant == Variant::kSam ? g.s : none;
    const auto& ws = variant == Variant::kMsam ? g.w : none;
    const auto& ps = variant == Variant::kMsam ? g.p : none;
    for (auto q : g.q)
      for (auto b : g.b)
        for (auto r : g.r)
          for (auto c : g.c)
            for (auto s : ss)
              for (auto w : ws)
                for (auto p : ps) {
                  IndexParams P;
                  P.variant = variant;
                  P.q = q;
                  P.b = b;
                  P.r = r;
                  P.c = c;
                  P.u = g.u != 0 ? g.u : derive_hash_count(c);
                  P.s = s;
                  P.w = w;
                  P.p = p;
                  jobs.push_back({P, {}, {}});
                }
  }
  return jobs;
}

std::uint64_t pattern_seed(std::uint64_t seed, std::size_t m, bool absent) {
  return seed * 0x9E3779B97F4A7C15ULL + m * 2 + (absent ? 1 : 0);
}

BenchRow measure(const Searcher& searcher, const IndexParams& P, std::size_t m,
                 const std::vector<std::string>& patterns, VerifierKind verifier) {
  BenchRow row;
  row.variant = P.variant;
  row.q = P.q;
  row.b = P.b;
  row.r = P.r;
  row.c = P.c;
  row.s = P.s;
  row.w = P.w;
  row.p = P.p;
  row.m = m;
  const double n = static_cast<double>(searcher.text().size());
  double candidates = 0, scanned = 0, search_us = 0;
  for (const auto& pattern : patterns) {
    const auto start = Clock::now();
    const auto report = searcher.search(pattern, {.verifier = verifier});
    search_us += ms_since(start) * 1000.0;
    candidates += static_cast<double>(report.candidate_blocks) / static_cast<double>(report.blocks_total);
    scanned += static_cast<double>(report.scanned_bytes) / n;
    row.matches += report.occurrences.size();
  }
  const double count = patterns.empty() ? 1.0 : static_cast<double>(patterns.size());
  row.candidate_fraction = candidates / count;
  row.scanned_fraction = scanned / count;
  row.mean_search_us = search_us / count;
  row.search_MBps = row.mean_search_us > 0 ? n / row.mean_search_us : 0.0;
  return row;
}

void run_job(std::string_view text, const BenchOptions& opt, Job& job, unsigned build_threads) {
  std::ostringstream warn;
  const IndexParams& P = job.params;
  if (auto problem = check_params(P)) {
    warn << "warning: skipping " << to_string(P.variant) << " q=" << P.q << " b=" << P.b
         << " r=" << P.r << " c=" << P.c << " s=" << P.s << " w=" << P.w << " p=" << P.p
         << ": " << *problem << '\n';
    job.warnings = warn.str();
    return;
  }
  if (text.size() < P.q) {
    job.warnings = "warning: text shorter than q=" + std::to_string(P.q) + "\n";
    return;
  }
  const auto start = Clock::now();
  const Index index = build(text, P, {.threads = build_threads});
  const double build_ms = ms_since(start);
  const auto st = stats(index);
  const Searcher searcher(index, text);

  for (auto m : opt.grid.m) {
    if (m < required_min_m(P) || m > P.b || m > text.size()) {
      warn << "warning: skipping " << to_string(P.variant) << " q=" << P.q << " b=" << P.b
           << " s=" << P.s << " w=" << P.w << " p=" << P.p << " m=" << m
           << ": pattern length outside [" << required_min_m(P) << ", "
           << std::min<std::uint64_t>(P.b, text.size()) << "]\n";
      continue;
    }
    std::vector<std::vector<std::string>> sets;
    sets.push_back(sample_patterns(text, m, opt.patterns, pattern_seed(opt.seed, m, false)));
    if (opt.absent) {
      sets.push_back(absent_patterns(text, m, opt.patterns, pattern_seed(opt.seed, m, true)));
      if (sets.back().size() < opt.patterns) {
        warn << "warning: only " << sets.back().size() << " absent patterns of length " << m
             << " found\n";
      }
    }
    for (const auto& patterns : sets) {
      BenchRow row = measure(searcher, P, m, patterns, opt.verifier);
      row.index_bytes = st.index_bytes;
      row.index_fraction = st.index_fraction;
      row.build_ms = build_ms;
      job.rows.push_back(row);
    }
  }
  job.warnings = warn.str();
}

}  // namespace

std::vector<std::string> sample_patterns(std::string_view text, std::size_t m,
                                         std::size_t count, std::uint64_t seed) {
  std::vector<std::string> out;
  if (m == 0 || m > text.size()) return out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> offset(0, text.size() - m);
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.emplace_back(text.substr(offset(rng), m));
  return out;
}

std::vector<std::string> absent_patterns(std::string_view text, std::size_t m,
                                         std::size_t count, std::uint64_t seed) {
  std::vector<std::string> out;
  if (m == 0 || text.empty()) return out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> offset(0, text.size() - 1);
  const std::size_t budget = count * 20;
  for (std::size_t attempt = 0; attempt < budget && out.size() < count; ++attempt) {
    std::string candidate(m, '\0');
    for (auto& ch : candidate) ch = text[offset(rng)];
    std::vector<std::uint64_t> hits;
    find_all_into(VerifierKind::kNaive, text, candidate, 0, hits);
    if (hits.empty()) out.push_back(std::move(candidate));
  }
  return out;
}

std::vector<BenchRow> run_bench(std::string_view text, const BenchOptions& options,
                                std::ostream& warnings) {
  auto jobs = expand(options.grid);
  const unsigned threads = std::max(1U, options.threads);
  if (jobs.size() <= 1 || threads == 1) {
    for (auto& job : jobs) run_job(text, options, job, threads);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < std::min<std::size_t>(threads, jobs.size()); ++t) {
        pool.emplace_back([&] {
          try {
            for (auto i = next++; i < jobs.size(); i = next++) run_job(text, options, jobs[i], 1);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        });
      }
    }
    if (failure) std::rethrow_exception(failure);
  }

  std::vector<BenchRow> rows;
  for (auto& job : jobs) {
    warnings << job.warnings;
    rows.insert(rows.end(), job.rows.begin(), job.rows.end());
  }
  return rows;
}

void write_csv_header(std::ostream& out) { out << kBenchHeader << "\r\n"; }

void write_csv_row(std::ostream& out, const BenchRow& row) {
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "%s,%u,%llu,%u,%u,%u,%u,%u,%llu,%llu,%.6f,%.6f,%.6f,%llu,%.3f,%.3f,%.3f\r\n",
                std::string(to_string(row.variant)).c_str(), row.q,
                static_cast<unsigned long long>(row.b), row.r, row.c, row.s, row.w, row.p,
                static_cast<unsigned long long>(row.m),
                static_cast<unsigned long long>(row.index_bytes), row.index_fraction,
                row.candidate_fraction, row.scanned_fraction,
                static_cast<unsigned long long>(row.matches), row.build_ms, row.mean_search_us,
                row.search_MBps);
  out << buf;
}

}  // namespace bfsi::cli
