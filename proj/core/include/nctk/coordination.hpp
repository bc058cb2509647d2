#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nctk/corpus_index.hpp"
#include "nctk/decision.hpp"
#include "nctk/morphology.hpp"
#include "nctk/surface_scan.hpp"

namespace nctk {

struct CoordQuad {
  std::string n1, c, n2, h;
  // Whether n1 / n2 carried a determiner in context; unset when unknown.
  std::optional<bool> n1_determiner, n2_determiner;

  CoordQuad() = default;
  // Lowercases; throws std::invalid_argument unless c is "and" or "or".
  CoordQuad(std::string_view n1, std::string_view c, std::string_view n2, std::string_view h);
  std::string text() const { return n1 + " " + c + " " + n2 + " " + h; }
};

// Which side of each n-gram comparison means noun coordination.
struct CoordMapping {
  bool n1h_over_n2h_is_noun = true;    // model i: #(n1,h) > #(n2,h)
  bool conj_over_n1h_is_noun = true;   // model ii: #(n1,c,n2) > #(n1,h)
};

// (i) #(n1,h) vs #(n2,h); (ii) #(n1,h) vs #(n1,c,n2) with "and" and "or" pooled.
CoordDecision coord_ngram_decision(const CountProvider& provider, const CoordQuad& q, int model,
                                   const MorphLexicon& lex, const CoordMapping& mapping = {});

// (1) n2 c n1 h -> noun; (2) n2 h c n1 -> NP; (3) n1 h c n2 h -> noun;
// (4) n2 h c n1 h -> noun. Below the threshold the opposite label wins.
std::uint64_t coord_paraphrase_count(const CountProvider& provider, const CoordQuad& q, int pattern,
                                     const MorphLexicon& lex);
CoordDecision coord_paraphrase_decision(const CountProvider& provider, const CoordQuad& q, int pattern,
                                        const MorphLexicon& lex, std::uint64_t threshold = 1);

enum class CoordHeuristic { H1, H4, H5, H6 };
std::string_view to_string(CoordHeuristic h);
CoordDecision coord_heuristic(const CoordQuad& q, CoordHeuristic kind, const MorphLexicon& lex);

CoordDecision number_agreement_decision(const CoordQuad& q, const MorphLexicon& lex);

struct CoordSurfaceResult {
  CoordDecision decision;
  FeatureTally tally;
};
// Occurrences of "n1 c n2 h": a dash right after n1, or any punctuation
// between n2 and h, favour noun coordination; other punctuation between n1
// and c (commas excepted) favours NP coordination.
CoordSurfaceResult coord_surface_vote(const std::vector<std::string>& snippets, const CoordQuad& q,
                                      const MorphLexicon& lex);
CoordDecision coord_surface_decision(const CountProvider& provider, const CoordQuad& q, const MorphLexicon& lex,
                                     std::size_t limit);

// Voters: "ngram-i", "ngram-ii", "para-1".."para-4", "h1", "h4", "h5", "h6",
// "number", "surface".
struct CoordConfig {
  std::vector<std::string> voters;
  std::optional<Coordination> default_label = Coordination::NPCoord;
  std::uint64_t threshold = 1;
  CoordMapping mapping;
  std::size_t snippet_limit = 1000;

  // ngram-i, para-1..4, h1, h6, number, surface.
  static std::vector<std::string> standard_voters();
  static std::vector<std::string> all_voters();
  static CoordConfig standard();
  void validate() const;
};

struct CoordResult {
  CoordQuad quad;
  std::vector<CoordDecision> votes;
  CoordDecision final;
};

CoordDecision run_coord_voter(const std::string& voter, const CoordQuad& q, const CountProvider& provider,
                              const MorphLexicon& lex, const CoordConfig& config);
CoordResult coord_pipeline(const CoordQuad& q, const CountProvider& provider, const MorphLexicon& lex,
                           const CoordConfig& config);

}  // namespace nctk
