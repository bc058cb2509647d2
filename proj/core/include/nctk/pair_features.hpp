#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nctk/morphology.hpp"
#include "nctk/tagging.hpp"

namespace nctk {

enum class FeatureKind : std::uint8_t { Verb, Preposition, Coordination };
enum class Direction : std::uint8_t { Forward, Backward };  // 1->2, 2->1

std::string_view to_string(FeatureKind k);  // V, P, C
std::string_view to_string(Direction d);    // 1->2, 2->1
std::optional<FeatureKind> parse_feature_kind(std::string_view s);
std::optional<Direction> parse_direction(std::string_view s);

struct PairFeature {
  std::string lexeme;
  FeatureKind kind = FeatureKind::Verb;
  Direction direction = Direction::Forward;

  auto operator<=>(const PairFeature&) const = default;
  // "V:include:1->2"
  std::string key() const;
};

using PairFeatureVector = std::map<PairFeature, std::uint64_t>;
// Sparse vector with string keys, used for weighting and similarity.
using FeatureVector = std::map<std::string, double>;

FeatureVector to_feature_vector(const PairFeatureVector& v);

struct KindMask {
  bool verb = true, preposition = true, coordination = true;
  // "vpc", "v", "vp", "p+c", ... (letters v, p, c; '+' ignored)
  static KindMask parse(std::string_view s);
  bool allows(FeatureKind k) const;
};
PairFeatureVector filter_kinds(const PairFeatureVector& v, KindMask mask);

// Verbs (with particle and preposition), prepositions and coordinating
// conjunctions linking NP heads of noun1 and noun2 (any inflection) inside
// the sentences. An NP head is the last noun of a noun run. Segments with
// other NP heads, punctuation or subordinate material in between yield
// nothing.
PairFeatureVector extract_pair_features(std::span<const TaggedSentence> sentences, const std::string& noun1,
                                        const std::string& noun2, const MorphLexicon& lex);
// Throws DataError("tags required") for untagged indexes.
PairFeatureVector extract_pair_features(const CorpusIndex& index, const std::string& noun1, const std::string& noun2,
                                        const MorphLexicon& lex);

// Verb(+preposition) paraphrases from "head THAT ... modifier" with at most
// 8 words between THAT and the modifier, exactly one verb group, and no
// nouns besides the modifier's own NP.
std::map<std::string, std::uint64_t> extract_paraphrase_verbs(std::span<const TaggedSentence> sentences,
                                                              const std::string& modifier, const std::string& head,
                                                              const MorphLexicon& lex);
std::map<std::string, std::uint64_t> extract_paraphrase_verbs(const CorpusIndex& index, const std::string& modifier,
                                                              const std::string& head, const MorphLexicon& lex);

// Rows `noun1 noun2 lexeme kind direction freq`, by descending frequency.
std::string pair_features_tsv(const std::string& noun1, const std::string& noun2, const PairFeatureVector& v);

// Caches extracted vectors per ordered pair.
class PairFeatureSource {
 public:
  PairFeatureSource(std::vector<TaggedSentence> sentences, const MorphLexicon& lex)
      : sentences_(std::move(sentences)), lex_(lex) {}
  explicit PairFeatureSource(const CorpusIndex& index, const MorphLexicon& lex)
      : PairFeatureSource(tagged_sentences(index), lex) {}

  const PairFeatureVector& features(const std::string& noun1, const std::string& noun2);
  std::span<const TaggedSentence> sentences() const { return sentences_; }

 private:
  std::vector<TaggedSentence> sentences_;
  const MorphLexicon& lex_;
  std::map<std::pair<std::string, std::string>, PairFeatureVector> cache_;
};

}  // namespace nctk
