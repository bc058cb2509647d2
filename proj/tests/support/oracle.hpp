#pragma once

// Brute-force reference implementations used as test oracles. They share no
// code with the library.

#include <cctype>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace oracle {

inline std::vector<std::string> tokens(std::string_view raw) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : raw) {
    const auto c = static_cast<unsigned char>(ch);
    if (std::isalnum(c) || c >= 0x80) {
      cur += static_cast<char>(std::tolower(c));
    } else if (!cur.empty()) {
      out.push_back(cur);
      cur.clear();
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

using Alternatives = std::vector<std::string>;
using Phrase = std::vector<Alternatives>;

inline bool matches(const std::vector<std::string>& s, std::size_t at, const Phrase& p) {
  if (at + p.size() > s.size()) return false;
  for (std::size_t k = 0; k < p.size(); ++k) {
    bool ok = false;
    for (const auto& a : p[k]) ok = ok || s[at + k] == a;
    if (!ok) return false;
  }
  return true;
}

inline std::uint64_t count_phrase(const std::vector<std::string>& lines, const Phrase& p) {
  std::uint64_t n = 0;
  for (const auto& line : lines) {
    const auto s = tokens(line);
    for (std::size_t i = 0; i < s.size(); ++i) n += matches(s, i, p);
  }
  return n;
}

inline std::uint64_t count_gap(const std::vector<std::string>& lines, const Phrase& left, const Phrase& right,
                               int min_gap, int max_gap) {
  std::uint64_t n = 0;
  for (const auto& line : lines) {
    const auto s = tokens(line);
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (!matches(s, i, left)) continue;
      for (int g = min_gap; g <= max_gap; ++g) n += matches(s, i + left.size() + g, right);
    }
  }
  return n;
}

// Lines of random words from a small vocabulary, with some punctuation and
// capitals so normalization is exercised.
inline std::vector<std::string> random_corpus(std::size_t sentences, std::uint32_t seed,
                                              const std::vector<std::string>& vocab) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> len(1, 14), word(0, vocab.size() - 1), deco(0, 19);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < sentences; ++i) {
    std::string line;
    const auto n = len(rng);
    for (std::size_t k = 0; k < n; ++k) {
      auto w = vocab[word(rng)];
      const auto d = deco(rng);
      if (d == 0) w[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(w[0])));
      if (!line.empty()) line += d == 1 ? "-" : d == 2 ? ", " : " ";
      line += w;
    }
    line += ".";
    out.push_back(line);
  }
  return out;
}

inline const std::vector<std::string>& small_vocab() {
  static const std::vector<std::string> v{"health", "care", "reform", "tax", "stem", "cell", "cells", "brain",
                                          "the",    "of",   "a",      "new", "bill", "is",  "on",    "data"};
  return v;
}

}  // namespace oracle
