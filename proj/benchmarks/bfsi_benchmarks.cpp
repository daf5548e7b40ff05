#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "bfsi/bfsi.hpp"

namespace {

std::string dna(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::string s(n, 'A');
  for (auto& ch : s) ch = "ACGT"[rng() & 3];
  return s;
}

const std::string& text() {
  static const std::string t = dna(8 << 20, 1);
  return t;
}

bfsi::IndexParams params(bfsi::Variant v) {
  bfsi::IndexParams p;
  p.variant = v;
  p.q = 12;
  p.b = 8192;
  p.s = 4;
  p.w = 12;
  p.p = 6;
  return p.normalized();
}

void BM_Build(benchmark::State& state) {
  const auto P = params(static_cast<bfsi::Variant>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bfsi::build(text(), P));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text().size()));
  state.SetLabel(std::string(bfsi::to_string(P.variant)));
}
BENCHMARK(BM_Build)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_Search(benchmark::State& state) {
  const auto P = params(static_cast<bfsi::Variant>(state.range(0)));
  const auto m = static_cast<std::size_t>(state.range(1));
  const auto index = bfsi::build(text(), P);
  const bfsi::Searcher searcher(index, text());
  std::mt19937_64 rng(7);
  std::vector<std::string> patterns;
  for (int i = 0; i < 64; ++i) patterns.push_back(text().substr(rng() % (text().size() - m), m));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(searcher.search(patterns[i++ % patterns.size()]));
  state.SetLabel(std::string(bfsi::to_string(P.variant)));
}
BENCHMARK(BM_Search)->ArgsProduct({{0, 1, 2}, {24, 48}})->Unit(benchmark::kMicrosecond);

void BM_FullScan(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const std::string pattern = text().substr(12345, m);
  for (auto _ : state) benchmark::DoNotOptimize(bfsi::full_scan(text(), pattern));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text().size()));
}
BENCHMARK(BM_FullScan)->Arg(24)->Arg(48)->Unit(benchmark::kMillisecond);

// One lane read against r separate per-block tests.
void BM_LaneVsBlocks(benchmark::State& state) {
  const bool lane = state.range(0) != 0;
  bfsi::InterleavedTable table(4096, 64);
  std::mt19937_64 rng(3);
  std::vector<std::uint32_t> rows(4);
  for (int i = 0; i < 20000; ++i) {
    for (auto& h : rows) h = rng() % 4096;
    table.insert(rows, static_cast<std::uint32_t>(rng() % 64));
  }
  std::vector<std::uint64_t> out(1);
  for (auto _ : state) {
    for (auto& h : rows) h = rng() % 4096;
    if (lane) {
      table.lane_and(rows, out);
      benchmark::DoNotOptimize(out[0]);
    } else {
      std::uint64_t bits = 0;
      for (std::uint32_t j = 0; j < 64; ++j) bits |= std::uint64_t{table.test_block(rows, j)} << j;
      benchmark::DoNotOptimize(bits);
    }
  }
  state.SetLabel(lane ? "lane" : "per-block");
}
BENCHMARK(BM_LaneVsBlocks)->Arg(1)->Arg(0);

}  // namespace

BENCHMARK_MAIN();
