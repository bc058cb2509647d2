#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "nctk/corpus_index.hpp"

namespace nctk {

// One match of a word sequence inside a raw snippet, with the raw text that
// separates the words. Gaps never contain word characters.
struct Occurrence {
  std::vector<std::string> words;  // raw spelling of every matched word
  std::vector<std::string> gaps;   // between word k and k+1, genitive 's removed
  std::vector<bool> genitive;      // word k carries 's
  std::string before;              // raw text since the previous word (or line start)
  std::string after;               // raw text up to the next word (or line end)
  bool word_before = false;        // another word directly precedes `before`
  bool word_after = false;
};

// All left-to-right occurrences of `words` (normalized alternatives per
// position) in `raw`. With allow_genitive, "brain's" matches slot "brain"
// followed by the next slot.
std::vector<Occurrence> find_occurrences(std::string_view raw, const std::vector<Slot>& words,
                                         bool allow_genitive = true);

// Gap text with whitespace removed ("" for plain spacing).
std::string squeeze(std::string_view gap);

bool is_capitalized(std::string_view word);
bool is_lowercase_word(std::string_view word);
bool is_roman_numeral(std::string_view word);
// Capitalization cues are skipped for single letters and Roman numerals.
bool capitalization_usable(std::string_view word);

// Per-feature vote counts, first = left/noun/noun-coord side.
struct FeatureTally {
  std::map<std::string, std::pair<std::uint64_t, std::uint64_t>> features;

  void vote_first(const std::string& feature) { ++features[feature].first; }
  void vote_second(const std::string& feature) { ++features[feature].second; }
  std::uint64_t first_total() const;
  std::uint64_t second_total() const;
};

}  // namespace nctk
