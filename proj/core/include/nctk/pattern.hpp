#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nctk/corpus_index.hpp"

namespace nctk {

// One position of a query template. Each alternative is a token sequence;
// an empty sequence makes the position optional ("DET?"), multi-token
// alternatives are atomic strings ("associated with").
struct PatternSlot {
  std::vector<std::vector<std::string>> alts;
};
using Pattern = std::vector<PatternSlot>;

PatternSlot word(const std::string& token);
PatternSlot any_of(const std::vector<std::string>& tokens);
// Each entry is free text and normalized into its token sequence.
PatternSlot phrases(const std::vector<std::string>& texts);
PatternSlot optional(PatternSlot slot);

// Cross product over the multi-token and empty alternatives; single-token
// alternatives of a slot stay merged in one Slot. Deterministic and
// duplicate-free. Patterns that expand to nothing are dropped.
std::vector<Phrase> expand(const Pattern& pattern);

std::vector<CountQuery> pattern_queries(const Pattern& pattern);
std::vector<CountQuery> gap_pattern_queries(const Pattern& left, int min_gap, int max_gap, const Pattern& right);

std::uint64_t count_queries(const CountProvider& provider, const std::vector<CountQuery>& queries);
inline std::uint64_t count_pattern(const CountProvider& provider, const Pattern& pattern) {
  return count_queries(provider, pattern_queries(pattern));
}

}  // namespace nctk
