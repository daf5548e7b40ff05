#include "bfsi/gram_selector.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "bfsi/error.hpp"

namespace bfsi {

std::vector<std::uint64_t> minimizer_positions(std::string_view range,
                                               std::uint32_t w, std::uint32_t p) {
  std::vector<std::uint64_t> out;
  if (p < 1 || p >= w || range.size() < w) return out;

  const auto kmer = [&](std::uint64_t at) { return range.substr(at, p); };
  // Monotone deque of candidate p-mer starts: contents strictly increase in
  // p-mer order from front to back, so ties keep the leftmost start in front.
  std::deque<std::uint64_t> window;
  const std::uint64_t span = w - p;  // last p-mer start offset within a window
  const std::uint64_t last_window = range.size() - w;
  std::uint64_t next = 0;
  for (std::uint64_t y = 0; y <= last_window; ++y) {
    for (; next <= y + span; ++next) {
      const auto incoming = kmer(next);
      while (!window.empty() && kmer(window.back()).compare(incoming) > 0) {
        window.pop_back();
      }
      window.push_back(next);
    }
    while (window.front() < y) window.pop_front();
    if (out.empty() || out.back() != window.front()) out.push_back(window.front());
  }
  return out;
}

std::vector<std::uint64_t> minimizer_positions_between(std::string_view text,
                                                       std::uint32_t w,
                                                       std::uint32_t p,
                                                       std::uint64_t lo,
                                                       std::uint64_t hi) {
  hi = std::min<std::uint64_t>(hi, text.size());
  if (lo >= hi || text.size() < w) return {};
  // A window starting at y yields a position in [y, y + w - p].
  const std::uint64_t from = lo > w - p ? lo - (w - p) : 0;
  const std::uint64_t to = std::min<std::uint64_t>(text.size(), hi - 1 + w);
  auto local = minimizer_positions(text.substr(from, to - from), w, p);
  std::vector<std::uint64_t> out;
  out.reserve(local.size());
  for (auto x : local) {
    x += from;
    if (x >= lo && x < hi) out.push_back(x);
  }
  return out;
}

std::vector<std::uint64_t> sampled_positions_between(std::string_view text,
                                                     const IndexParams& params,
                                                     std::uint64_t lo,
                                                     std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  if (text.size() < params.q) return out;
  const std::uint64_t last = text.size() - params.q;  // last valid gram start
  hi = std::min(hi, last + 1);
  if (lo >= hi) return out;

  switch (params.variant) {
    case Variant::kStd:
      out.reserve(hi - lo);
      for (auto x = lo; x < hi; ++x) out.push_back(x);
      break;
    case Variant::kSam: {
      const std::uint64_t s = params.s;
      for (auto x = (lo + s - 1) / s * s; x < hi; x += s) out.push_back(x);
      break;
    }
    case Variant::kMsam:
      out = minimizer_positions_between(text, params.w, params.p, lo, hi);
      break;
  }
  return out;
}

std::vector<std::uint64_t> build_positions(std::string_view text,
                                           const IndexParams& params) {
  return sampled_positions_between(text, params, 0, text.size());
}

QueryPlan query_plan(std::string_view pattern, const IndexParams& params) {
  const std::uint64_t m = pattern.size();
  const std::uint64_t min_m = required_min_m(params);
  if (m < min_m) {
    throw PatternLengthError(
        ErrorCode::kPatternTooShort,
        "pattern length " + std::to_string(m) + " is below the required minimum " +
            std::to_string(min_m) + " for variant " + std::string(to_string(params.variant)),
        min_m);
  }
  if (m > params.b) {
    throw PatternLengthError(ErrorCode::kPatternTooLong,
                             "pattern length " + std::to_string(m) +
                                 " exceeds the block size " + std::to_string(params.b),
                             params.b);
  }

  QueryPlan plan;
  plan.variant = params.variant;
  const std::uint32_t q = params.q;
  const auto add_gram = [&](std::uint64_t at) {
    plan.offsets.push_back(static_cast<std::uint32_t>(at));
    plan.grams.push_back(gram_key(pattern.substr(at, q), params.seed));
  };

  switch (params.variant) {
    case Variant::kStd:
    case Variant::kSam:
      for (std::uint64_t i = 0; i + q <= m; ++i) add_gram(i);
      break;
    case Variant::kMsam:
      for (auto pos : minimizer_positions(pattern, params.w, params.p)) {
        if (pos + q <= m) add_gram(pos);
      }
      break;
  }

  if (params.variant == Variant::kSam) {
    plan.classes.resize(params.s);
    for (std::uint32_t i = 0; i < plan.grams.size(); ++i) {
      plan.classes[i % params.s].push_back(i);
    }
  } else {
    plan.classes.emplace_back(plan.grams.size());
    auto& all = plan.classes.front();
    for (std::uint32_t i = 0; i < all.size(); ++i) all[i] = i;
  }
  return plan;
}

}  // namespace bfsi
