#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nctk/corpus_index.hpp"
#include "nctk/decision.hpp"
#include "nctk/morphology.hpp"
#include "nctk/surface_scan.hpp"

namespace nctk {

struct PPQuad {
  std::string v, n1, p, n2;

  PPQuad() = default;
  // Lowercases; throws std::invalid_argument on an empty field.
  PPQuad(std::string_view v, std::string_view n1, std::string_view p, std::string_view n2);
  std::string text() const { return v + " " + n1 + " " + p + " " + n2; }
  auto operator<=>(const PPQuad&) const = default;
};

// Personal pronouns (subject and object forms).
const std::vector<std::string>& pronouns();
bool is_pronoun(std::string_view w);
// am, is, are, was, were, be, been, being
bool is_be_form(std::string_view w);
// Determiners allowed inside PP query patterns.
const std::vector<std::string>& pp_determiners();
// Alphabetic, not a pronoun and not a determiner.
bool noun_like(std::string_view w);

// (1) #(n1,p) vs #(v,p); (2) Pr(p|n1) vs Pr(p|v); (3) #(n1,p,n2) vs #(v,p,n2);
// (4) Pr(p,n2|n1) vs Pr(p,n2|v). Left side is noun attachment.
AttachmentDecision pp_ngram_decision(const CountProvider& provider, const PPQuad& q, int model,
                                     const MorphLexicon& lex);

// Patterns:
//   1  v DET n2 n1       noun  (p != to, n1/n2 noun-like)
//   2  v p DET? n2 DET n1 verb
//   3  p DET? n2 *{0,3} v DET? n1  verb
//   4  n1 p DET? n2 v     noun
//   5  v {him,her} p DET? n2  verb
//   6  {is,are} DET? n1 p DET? n2  noun
// One match is enough.
AttachmentDecision pp_paraphrase_decision(const CountProvider& provider, const PPQuad& q, int pattern,
                                          const MorphLexicon& lex);
std::uint64_t pp_paraphrase_count(const CountProvider& provider, const PPQuad& q, int pattern,
                                  const MorphLexicon& lex);

enum class PPHeuristic { PronounN1, VerbBe, OfRule };
std::string_view to_string(PPHeuristic h);
AttachmentDecision pp_heuristic(const PPQuad& q, PPHeuristic kind);

struct PPSurfaceResult {
  AttachmentDecision decision;
  FeatureTally tally;
};
// Occurrences of "v DET? n1 p DET? n2" in the snippets; punctuation or a
// capitalized n1 between v and n1 favours noun, the same between n1 and p (or
// a capitalized p) favours verb.
PPSurfaceResult pp_surface_vote(const std::vector<std::string>& snippets, const PPQuad& q, const MorphLexicon& lex);
AttachmentDecision pp_surface_decision(const CountProvider& provider, const PPQuad& q, const MorphLexicon& lex,
                                       std::size_t limit);

// YEAR, NUM, PRO, ART, DET substitutions; nouns and the verb lemmatized.
std::string normalize_pp_token(std::string_view w);
PPQuad normalize_quad(const PPQuad& q, const MorphLexicon& lex);

struct BackoffModel {
  struct Tally {
    std::uint64_t noun = 0;
    std::uint64_t total = 0;
  };
  using Key = std::pair<std::string, std::string>;
  std::map<Key, Tally> vp, n1p, pn2;
  std::map<std::string, Tally> p;
  std::size_t trained = 0;
};

// Quads are used as given (normalize them first). Labels must be Noun or
// Verb; throws std::invalid_argument on an empty set or an abstain label.
BackoffModel backoff_train(std::span<const std::pair<PPQuad, Attachment>> examples);
// R1 when its denominator exceeds 3 and R1 != 0.5, else R2; 0.5 or an
// unseen preposition abstains.
AttachmentDecision backoff_predict(const BackoffModel& model, const PPQuad& normalized);

// Voters: "ngram-1".."ngram-4", "para-1".."para-6", "pronoun-n1", "verb-be",
// "of-rule", "surface", "backoff".
struct PPConfig {
  std::vector<std::string> voters;
  std::optional<Attachment> default_label = Attachment::Verb;
  bool of_rule_first = true;
  std::size_t snippet_limit = 1000;
  std::shared_ptr<const BackoffModel> backoff;

  // ngram-4, para-1..6, pronoun-n1, verb-be, surface.
  static std::vector<std::string> standard_voters();
  static std::vector<std::string> all_voters();
  static PPConfig standard();
  void validate() const;
};

struct PPResult {
  PPQuad quad;
  std::vector<AttachmentDecision> votes;
  AttachmentDecision final;
};

AttachmentDecision run_pp_voter(const std::string& voter, const PPQuad& q, const CountProvider& provider,
                                const MorphLexicon& lex, const PPConfig& config);
PPResult pp_pipeline(const PPQuad& q, const CountProvider& provider, const MorphLexicon& lex, const PPConfig& config);

// Runs the vote without default over the non-"of" quads and trains the
// back-off model on the predictions it makes.
BackoffModel bootstrap_backoff(std::span<const PPQuad> quads, const CountProvider& provider, const MorphLexicon& lex,
                               const PPConfig& config);

}  // namespace nctk
