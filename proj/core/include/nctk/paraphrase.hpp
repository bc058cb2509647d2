#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "nctk/bracket_features.hpp"
#include "nctk/pattern.hpp"

namespace nctk {

struct ParaphraseInventory {
  std::vector<std::string> prepositions;         // nonverbal
  std::vector<std::string> verbal_prepositions;  // "associated with", "caused by", ...
  std::vector<std::string> determiners;
  std::vector<std::string> complementizers;
  std::vector<std::string> copulas;

  // The built-in lists.
  static const ParaphraseInventory& standard();
  // Sectioned text: [prep], [verbal-prep], [det], [compl], [be], one item per
  // line; '#' starts a comment.
  static ParaphraseInventory parse(std::string_view text);
  static ParaphraseInventory load(const std::filesystem::path& file);

  std::vector<std::string> all_prepositions() const;
};

struct ParaphrasePatterns {
  std::vector<Pattern> left;
  std::vector<Pattern> right;
};

// Left:  w3' PREP DET? w1 w2' | w3' COMPL BE DET? w1 w2' | w3' COMPL BE PREP DET? w1 w2'
// Right: w2 w3' PREP DET? w1' | w2 w3' COMPL BE DET? w1' | w2 w3' COMPL BE PREP DET? w1'
// Copulas agree in number with the w3 form (is/was singular, are/were plural).
ParaphrasePatterns bracketing_patterns(const NounTriple& t, const ParaphraseInventory& inv, const MorphLexicon& lex);

// Every instantiated phrase, deterministic order, no duplicates.
struct ParaphraseQueries {
  std::vector<std::string> left;
  std::vector<std::string> right;
};
ParaphraseQueries generate_bracketing_queries(const NounTriple& t, const ParaphraseInventory& inv,
                                              const MorphLexicon& lex);

// Summed left vs right counts; a tie (including 0-0) abstains. Counting uses
// merged alternatives, which sums to the same totals as the literal phrases.
BracketDecision paraphrase_decision(const CountProvider& p, const NounTriple& t, const ParaphraseInventory& inv,
                                    const MorphLexicon& lex);

// Literal instantiations of one pattern.
std::vector<std::string> instantiate(const Pattern& pattern);

}  // namespace nctk
