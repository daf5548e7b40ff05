// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "bfsi/bfsi.hpp"
#include "corpus.hpp"

namespace {

using namespace bfsi;
using bfsi::testing::Rng;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Every index built by criteria 1-6 is kept for the round-trip check.
std::vector<Index> g_built;
std::size_t g_round_trip_failures = 0;

void keep(const Index& index) {
  if (deserialize(serialize(index)) != index) ++g_round_trip_failures;
  g_built.push_back(index);
  if (g_built.size() > 64) g_built.erase(g_built.begin());  // bound memory
}

Index build_kept(std::string_view text, const IndexParams& P) {
  Index index = build(text, P);
  keep(index);
  return index;
}

// ---------------------------------------------------------------------------
// 1. Losslessness against the naive oracle.

IndexParams random_params(Variant v, Rng& rng) {
  static constexpr std::uint64_t kBlocks[] = {64, 100, 256, 1024, 4096, 8192};
  static constexpr std::uint32_t kLanes[] = {1, 2, 3, 7, 8, 64, 65, 100};
  for (;;) {
    IndexParams P;
    P.variant = v;
    P.q = 2 + rng() % 9;
    P.b = kBlocks[rng() % std::size(kBlocks)];
    P.r = kLanes[rng() % std::size(kLanes)];
    P.c = 1 + rng() % 8;
    P.u = rng() % 3 == 0 ? 1 + rng() % 6 : derive_hash_count(P.c);
    P.s = 1 + rng() % 8;
    P.w = 2 + rng() % 15;
    P.p = 1 + rng() % (P.w - 1);
    P.seed = rng();
    P = P.normalized();
    if (!check_params(P) && required_min_m(P) <= 64) return P;
  }
}

Outcome losslessness() {
  constexpr int kTrialsPerVariant = 200;
  constexpr unsigned kSigmas[] = {4, 20, 64};
  Rng rng(20240601);
  std::size_t patterns = 0, failures = 0;
  std::ostringstream first_failure;
  for (int v = 0; v < 3; ++v) {
    for (int trial = 0; trial < kTrialsPerVariant; ++trial) {
      const auto P = random_params(static_cast<Variant>(v), rng);
      const unsigned sigma = kSigmas[trial % 3];
      // Log-uniform n in [1e3, 1e6].
      const auto n = static_cast<std::size_t>(std::pow(10.0, 3.0 + 3.0 * std::uniform_real_distribution<>(0, 1)(rng)));
      auto text = bfsi::testing::random_text(n, sigma, rng);
      const std::uint64_t lo = required_min_m(P);
      const std::uint64_t hi = std::min<std::uint64_t>({64, P.b, n});
      const std::size_t m = lo + rng() % (hi - lo + 1);

      // Plant one pattern across a block edge, a superblock edge, and at
      // both ends of the text.
      const auto planted = bfsi::testing::random_text(m, sigma, rng);
      const auto plant = [&](std::uint64_t at) {
        if (at + m <= n) text.replace(at, m, planted);
      };
      plant(0);
      plant(n - m);
      if (n > P.b) plant(P.b - std::min<std::uint64_t>(P.b, 1 + rng() % m));
      const std::uint64_t span = P.superblock_span();
      if (n > span) plant(span - std::min<std::uint64_t>(span, 1 + rng() % m));
      const std::uint64_t blocks = block_count(n, P.b);
      if (blocks > 2) {
        const std::uint64_t edge = (1 + rng() % (blocks - 1)) * P.b;
        plant(edge - std::min<std::uint64_t>(edge, 1 + rng() % m));
      }

      const auto index = build_kept(text, P);
      const Searcher searcher(index, text);
      std::vector<std::string> queries = {planted, text.substr(rng() % (n - m + 1), m),
                                          bfsi::testing::random_text(m, sigma, rng)};
      for (const auto& pattern : queries) {
        ++patterns;
        const auto got = searcher.search(pattern).occurrences;
        const auto want = bfsi::testing::naive_occurrences(text, pattern);
        if (got != want) {
          if (failures++ == 0) {
            first_failure << " first failure: variant=" << to_string(P.variant) << " q=" << P.q
                          << " b=" << P.b << " r=" << P.r << " n=" << n << " m=" << m;
          }
        }
      }
    }
  }
  std::ostringstream detail;
  detail << 3 * kTrialsPerVariant << " indexes, " << patterns << " patterns, " << failures
         << " mismatches" << first_failure.str();
  return {failures == 0, detail.str()};
}

// ---------------------------------------------------------------------------
// 2. MSAM gap bound.

Outcome gap_bound() {
  Rng rng(77);
  std::uint64_t checked = 0, worst_excess = 0;
  bool pass = true;
  for (int t = 0; t < 100; ++t) {
    const unsigned sigma = std::vector<unsigned>{2, 4, 20, 256}[t % 4];
    const auto text = bfsi::testing::random_text(4000, sigma, rng);
    for (std::uint32_t w = 2; w <= 16; ++w) {
      for (std::uint32_t p = 1; p < w; ++p) {
        IndexParams P;
        P.variant = Variant::kMsam;
        P.q = 2;
        P.b = 64;
        P.w = w;
        P.p = p;
        const auto pos = build_positions(text, P);
        for (std::size_t i = 1; i < pos.size(); ++i) {
          ++checked;
          const std::uint64_t gap = pos[i] - pos[i - 1];
          if (gap > w - p + 1) {
            pass = false;
            worst_excess = std::max<std::uint64_t>(worst_excess, gap - (w - p + 1));
          }
        }
      }
    }
  }
  std::ostringstream detail;
  detail << "100 texts x 120 (w,p) pairs, " << checked << " gaps checked, max excess " << worst_excess;
  return {pass, detail.str()};
}

// ---------------------------------------------------------------------------
// 3. Bloom false-positive calibration.

Outcome fp_calibration() {
  // One full STD block of distinct random grams; the builder sizes the
  // table to rows = c * D.
  Rng rng(99);
  IndexParams P;
  P.q = 8;
  P.b = 40000;
  P.r = 64;
  P.c = 6;
  P.u = 4;
  const auto text = bfsi::testing::random_text(P.b + P.q - 1, 256, rng);
  std::unordered_set<std::string_view> present;
  for (std::size_t x = 0; x + P.q <= text.size(); ++x) present.insert(std::string_view(text).substr(x, P.q));
  const double distinct = static_cast<double>(present.size());
  const auto index = build_kept(text, P);
  const auto& table = index.tables.at(0);
  const double rows = table.rows();

  std::vector<std::uint32_t> h(P.u);
  std::size_t trials = 0, hits = 0;
  while (trials < 200000) {
    const auto gram = bfsi::testing::random_text(P.q, 256, rng);
    if (present.count(gram) != 0) continue;
    ++trials;
    fill_rows(gram_key(gram, P.seed), table.rows(), h);
    hits += table.test_block(h, 0);
  }
  const double measured = static_cast<double>(hits) / static_cast<double>(trials);
  const double analytic = std::pow(1.0 - std::exp(-static_cast<double>(P.u) * distinct / rows), P.u);
  std::ostringstream detail;
  detail << "D=" << present.size() << " L=" << table.rows() << " measured=" << measured
         << " analytic=" << analytic << " ratio=" << measured / analytic << " (allowed [0.5, 2])";
  const bool pass = std::abs(rows - P.c * distinct) < 1.0 && measured >= 0.5 * analytic &&
                    measured <= 2.0 * analytic;
  return {pass, detail.str()};
}

// ---------------------------------------------------------------------------
// 4. Layout equivalence with r separate filters, at the candidate-set level.

Outcome layout_equivalence() {
  Rng rng(4242);
  int instances = 0;
  std::size_t compared = 0, mismatches = 0;
  while (instances < 60) {
    IndexParams P;
    P.variant = static_cast<Variant>(instances % 3);
    P.q = 2 + rng() % 3;
    P.b = 8 + rng() % 40;
    P.r = 1 + rng() % 8;
    P.c = 1 + rng() % 4;
    P.u = 1 + rng() % 4;
    P.s = 1 + rng() % 3;
    P.w = 3 + rng() % std::min<std::uint64_t>(6, P.b - 2);
    P.p = 1 + rng() % (P.w - 1);
    P.seed = rng();
    P = P.normalized();
    if (check_params(P) || required_min_m(P) > P.b) continue;
    const auto text = bfsi::testing::random_text(P.b * P.r * (1 + rng() % 3) + rng() % 50, 4, rng);
    const auto index = build_kept(text, P);
    bool small = true;
    for (const auto& t : index.tables) small &= t.rows() <= 512;
    if (!small) continue;
    ++instances;

    // Rebuild the same content as one conventional filter per block.
    const std::uint64_t blocks = index.blocks_total();
    std::vector<bfsi::testing::PlainBloom> plain;
    std::vector<std::uint32_t> block_rows;
    for (std::uint64_t g = 0; g < blocks; ++g) {
      const auto rows = index.tables[g / P.r].rows();
      plain.emplace_back(rows);
      block_rows.push_back(rows);
    }
    for (auto x : build_positions(text, P)) {
      const std::uint64_t g = x / P.b;
      std::vector<std::uint32_t> h(P.u);
      fill_rows(gram_key(std::string_view(text).substr(x, P.q), P.seed), block_rows[g], h);
      plain[g].insert(h);
    }
    const auto plain_has = [&](std::uint64_t g, const GramKey& key) {
      if (g >= blocks) return false;
      std::vector<std::uint32_t> h(P.u);
      fill_rows(key, block_rows[g], h);
      return plain[g].contains(h);
    };

    for (int probe = 0; probe < 40; ++probe) {
      const std::size_t m = required_min_m(P) + rng() % (P.b - required_min_m(P) + 1);
      const std::string pattern = rng() % 2 ? text.substr(rng() % (text.size() - m + 1), m)
                                            : bfsi::testing::random_text(m, 4, rng);
      const auto plan = query_plan(pattern, P);
      std::vector<std::uint64_t> expected;
      for (std::uint64_t g = 0; g < blocks; ++g) {
        bool any_class = false;
        for (const auto& cls : plan.classes) {
          bool all = true;
          for (auto gi : cls) all &= plain_has(g, plan.grams[gi]) || plain_has(g + 1, plan.grams[gi]);
          any_class |= all;
        }
        if (any_class) expected.push_back(g);
      }
      std::vector<std::uint64_t> got;
      for (const auto& c : candidate_blocks(index, plan, m)) got.push_back(c.block);
      ++compared;
      mismatches += got != expected;
    }
  }
  std::ostringstream detail;
  detail << instances << " instances (L <= 512, r <= 8), " << compared << " candidate sets, "
         << mismatches << " mismatches";
  return {mismatches == 0, detail.str()};
}

// ---------------------------------------------------------------------------
// 5. Selectivity trend on English-like text.

Outcome selectivity_trend() {
  const auto text = bfsi::testing::english_like_text(5 * 1000 * 1000, 2015);
  IndexParams P;
  P.q = 8;
  P.b = 8192;
  P.c = 6;
  P.u = derive_hash_count(6);
  const auto index = build_kept(text, P);
  const Searcher searcher(index, text);
  const std::vector<std::size_t> lengths = {16, 24, 32, 48};
  std::vector<double> mean, stderr_;
  Rng rng(5150);
  for (auto m : lengths) {
    std::vector<double> f;
    for (int i = 0; i < 100; ++i) {
      const auto pattern = text.substr(rng() % (text.size() - m + 1), m);
      const auto rep = searcher.search(pattern);
      f.push_back(static_cast<double>(rep.candidate_blocks) / static_cast<double>(rep.blocks_total));
    }
    double mu = 0;
    for (double x : f) mu += x;
    mu /= static_cast<double>(f.size());
    double var = 0;
    for (double x : f) var += (x - mu) * (x - mu);
    var /= static_cast<double>(f.size() - 1);
    mean.push_back(mu);
    stderr_.push_back(std::sqrt(var / static_cast<double>(f.size())));
  }
  int inversions = 0;
  bool inversion_too_large = false;
  for (std::size_t i = 1; i < mean.size(); ++i) {
    if (mean[i] > mean[i - 1]) {
      ++inversions;
      if (mean[i] - mean[i - 1] > std::max(stderr_[i], stderr_[i - 1])) inversion_too_large = true;
    }
  }
  const double at32 = mean[2];
  std::ostringstream detail;
  detail.precision(4);
  detail << "mean candidate fraction m=16/24/32/48: ";
  for (std::size_t i = 0; i < mean.size(); ++i) detail << (i ? " / " : "") << mean[i];
  detail << "; inversions=" << inversions << "; m=32 below 0.05: " << (at32 < 0.05 ? "yes" : "no");
  return {inversions <= 1 && !inversion_too_large && at32 < 0.05, detail.str()};
}

// ---------------------------------------------------------------------------
// 6. Space trade-offs.

Outcome space_tradeoffs() {
  Rng rng(6);
  const auto text = bfsi::testing::random_text(1 << 20, 4, rng);
  std::ostringstream detail;
  bool pass = true;

  IndexParams P;
  P.variant = Variant::kSam;
  P.q = 8;
  P.b = 8192;
  std::uint64_t prev = UINT64_MAX;
  detail << "SAM bytes s=1,2,4,8:";
  for (std::uint32_t s : {1u, 2u, 4u, 8u}) {
    P.s = s;
    const auto bytes = stats(build_kept(text, P)).index_bytes;
    detail << ' ' << bytes;
    pass &= bytes <= prev;
    prev = bytes;
  }

  IndexParams Q;
  Q.variant = Variant::kStd;
  Q.b = 8192;
  prev = 0;
  detail << "; STD bytes q=3,4,5,8:";
  for (std::uint32_t q : {3u, 4u, 5u, 8u}) {
    Q.q = q;
    const auto bytes = stats(build_kept(text, Q)).index_bytes;
    detail << ' ' << bytes;
    pass &= bytes >= prev;
    prev = bytes;
  }
  return {pass, detail.str()};
}

// ---------------------------------------------------------------------------
// 7. Serialization.

ErrorCode error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kIo;  // sentinel: no error raised
}

Outcome serialization() {
  std::ostringstream detail;
  detail << "round-trip failures " << g_round_trip_failures << " (all indexes of criteria 1-6)";
  bool pass = g_round_trip_failures == 0;

  IndexParams P;
  P.q = 3;
  P.b = 4;
  P.r = 2;
  const std::string text = "abracadabra";
  const auto index = build(text, P);
  const auto bytes = serialize(index);
  std::string bad_magic = bytes;
  bad_magic.replace(0, 4, "XXXX");
  const auto magic = error_of([&] { deserialize(bad_magic); });
  const auto truncated = error_of([&] { deserialize(bytes.substr(0, bytes.size() - 5)); });
  const auto mismatch = error_of([&] { search(deserialize(bytes), "abracadabrA", "abra"); });
  pass &= magic == ErrorCode::kBadMagic && truncated == ErrorCode::kTruncated &&
          mismatch == ErrorCode::kChecksumMismatch;
  detail << "; bad magic -> " << to_string(magic) << ", truncated -> " << to_string(truncated)
         << ", checksum mismatch -> " << to_string(mismatch);
  return {pass, detail.str()};
}

// ---------------------------------------------------------------------------
// 8. Verifier equivalence.

Outcome verifier_equivalence() {
  Rng rng(8888);
  std::size_t mismatches = 0;
  constexpr int kCases = 10000;
  for (int i = 0; i < kCases; ++i) {
    const unsigned sigma = std::vector<unsigned>{2, 4, 256}[i % 3];
    const std::size_t m = 1 + rng() % 64;
    const std::size_t len = m + rng() % 3000;
    const auto hay = bfsi::testing::random_text(len, sigma, rng);
    const std::string pat = rng() % 2 ? hay.substr(rng() % (len - m + 1), m) : bfsi::testing::random_text(m, sigma, rng);
    const auto naive = find_all(VerifierKind::kNaive, hay, pat);
    mismatches += find_all(VerifierKind::kBitParallel, hay, pat) != naive;
    mismatches += find_all(VerifierKind::kComparison, hay, pat) != naive;
    mismatches += bfsi::testing::naive_occurrences(hay, pat) != naive;
  }
  return {mismatches == 0, std::to_string(kCases) + " cases, " + std::to_string(mismatches) + " mismatches"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"1 losslessness vs naive oracle", losslessness},
      {"2 MSAM gap bound", gap_bound},
      {"3 Bloom FP calibration", fp_calibration},
      {"4 layout equivalence", layout_equivalence},
      {"5 selectivity trend", selectivity_trend},
      {"6 space trade-offs", space_tradeoffs},
      {"7 serialization", serialization},
      {"8 verifier equivalence", verifier_equivalence},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %-32s %6.1fs  %s\n", out.pass ? "PASS" : "FAIL", c.name, secs, out.detail.c_str());
    std::fflush(stdout);
    failed += !out.pass;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
