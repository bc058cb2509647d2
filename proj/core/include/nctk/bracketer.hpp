#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nctk/bracket_features.hpp"
#include "nctk/paraphrase.hpp"

namespace nctk {

// Voter names: "<freq|prob|pmi|chi2>-<adjacency|dependency>",
// "concat-<adjacency|dependency|triple>",
// "wildcard-<adjacency|dependency|rev-adjacency|rev-dependency>-<1..3>",
// "genitive", "abbreviation", "reorder", "inflection-variability", "swap",
// "paraphrase", "surface".
struct VoteConfig {
  std::vector<std::string> voters;
  std::optional<Bracketing> default_label;
  double margin = 0.0;  // applied to the association-score voters
  std::size_t snippet_limit = kDefaultSnippetLimit;

  // chi2 adjacency/dependency, concat dependency/triple, genitive,
  // abbreviation, paraphrase, surface.
  static std::vector<std::string> standard_voters();
  static std::vector<std::string> all_voters();
  // "lauer" (default left), "biomedical" (default right), "stability"
  // (margin 5, no default). Throws std::invalid_argument on unknown names.
  static VoteConfig preset(std::string_view name);

  // Throws std::invalid_argument on an unknown voter or negative margin.
  void validate() const;
};

struct BracketResult {
  NounTriple triple;
  std::vector<BracketDecision> votes;
  BracketDecision final;
};

BracketDecision run_bracket_voter(const std::string& voter, const NounTriple& t, const CountProvider& p,
                                  const MorphLexicon& lex, const ParaphraseInventory& inv, const VoteConfig& config);

BracketResult bracket(const NounTriple& t, const CountProvider& p, const MorphLexicon& lex,
                      const ParaphraseInventory& inv, const VoteConfig& config);

}  // namespace nctk
