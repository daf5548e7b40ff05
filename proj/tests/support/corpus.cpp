#include "corpus.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace bfsi::testing {

char symbol(unsigned k, unsigned sigma) {
  if (sigma <= 64) return static_cast<char>('A' + k);
  return static_cast<char>(static_cast<unsigned char>(k));
}

std::string random_text(std::size_t n, unsigned sigma, Rng& rng) {
  std::uniform_int_distribution<unsigned> pick(0, sigma - 1);
  std::string out(n, '\0');
  for (auto& ch : out) ch = symbol(pick(rng), sigma);
  return out;
}

namespace {

// Rough English letter frequencies (a..z), in tenths of a percent.
constexpr int kLetterWeight[26] = {82, 15, 28, 43, 127, 22, 20, 61, 70, 2, 8, 40, 24,
                                   67, 75, 19, 1,  60, 63, 91, 28, 10, 24, 2, 20, 1};

std::vector<std::string> make_vocabulary(std::size_t count, Rng& rng) {
  std::discrete_distribution<int> letter(std::begin(kLetterWeight), std::end(kLetterWeight));
  std::discrete_distribution<int> length({0, 3, 17, 20, 16, 12, 10, 8, 6, 4, 2, 1, 1});
  std::vector<std::string> words;
  words.reserve(count);
  while (words.size() < count) {
    std::string w(static_cast<std::size_t>(length(rng)), 'a');
    for (auto& ch : w) ch = static_cast<char>('a' + letter(rng));
    words.push_back(std::move(w));
  }
  // Shorter words tend to be the frequent ones.
  std::stable_sort(words.begin(), words.end(),
                   [](const std::string& a, const std::string& b) { return a.size() < b.size(); });
  return words;
}

}  // namespace

std::string english_like_text(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  const auto vocab = make_vocabulary(30000, rng);
  std::vector<double> weight(vocab.size());
  for (std::size_t i = 0; i < weight.size(); ++i) weight[i] = 1.0 / std::pow(static_cast<double>(i) + 2.7, 1.05);
  std::discrete_distribution<std::size_t> word(weight.begin(), weight.end());
  std::uniform_int_distribution<int> punct(0, 99);

  std::string out;
  out.reserve(n + 16);
  bool sentence_start = true;
  while (out.size() < n) {
    std::string w = vocab[word(rng)];
    if (sentence_start) w[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(w[0])));
    out += w;
    const int roll = punct(rng);
    sentence_start = roll < 6;
    if (roll < 6) {
      out += roll == 0 ? ".\n" : ". ";
    } else if (roll < 12) {
      out += ", ";
    } else {
      out += ' ';
    }
  }
  out.resize(n);
  return out;
}

std::vector<std::uint64_t> naive_occurrences(std::string_view text, std::string_view pattern) {
  std::vector<std::uint64_t> out;
  if (pattern.empty() || pattern.size() > text.size()) return out;
  for (std::size_t x = 0; x + pattern.size() <= text.size(); ++x) {
    if (text.compare(x, pattern.size(), pattern) == 0) out.push_back(x);
  }
  return out;
}

}  // namespace bfsi::testing
