#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nctk/morphology.hpp"
#include "nctk/tagging.hpp"

namespace nctk {

// Cleans a free-text verbal paraphrase ("can cause", "is donating", "made
// from") into a lemmatized verb phrase, or nullopt when it has to be
// rejected (nouns, adjectives, infinitival "to", nothing left).
// `targets` are the compound's own nouns, removed when they leak in.
std::optional<std::string> normalize_human_verb(std::string_view phrase, const MorphLexicon& lex,
                                                const LexiconTagger& tagger = LexiconTagger::bundled(),
                                                const std::vector<std::string>& targets = {});

using VerbCounts = std::map<std::string, std::uint64_t>;

// Normalizes every phrase and sums counts per normalized verb; rejected
// phrases are dropped.
VerbCounts normalize_verb_counts(const VerbCounts& raw, const MorphLexicon& lex,
                                 const LexiconTagger& tagger = LexiconTagger::bundled());

// Cosine between two verb frequency distributions. Throws StatError when
// either is empty.
double verb_cosine(const VerbCounts& a, const VerbCounts& b);

}  // namespace nctk
