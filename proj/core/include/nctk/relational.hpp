#pragma once

#include <filesystem>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "nctk/pair_features.hpp"
#include "nctk/similarity.hpp"

namespace nctk {

struct WordPair {
  std::string first, second;
  auto operator<=>(const WordPair&) const = default;
};

struct SatQuestion {
  WordPair stem;
  std::vector<WordPair> candidates;  // up to 5
  std::optional<std::size_t> gold;   // index into candidates
};

struct SatAnswer {
  std::optional<std::size_t> choice;  // nullopt when the best score is tied
  std::vector<double> scores;
};

// Picks the candidate with the highest Dice similarity to the stem (weighted
// vectors). Undefined similarities count as 0.
SatAnswer solve_sat(const FeatureVector& stem, std::span<const FeatureVector> candidates);
// Extracts the six vectors and weights them with `weights`, or with TF.IDF
// fitted on the question's own pairs when `weights` is null.
SatAnswer solve_sat(const SatQuestion& q, PairFeatureSource& source, KindMask kinds,
                    const TfIdf* weights = nullptr);

struct StopWords {
  std::set<std::string, std::less<>> words;
  static StopWords parse(std::string_view text);
  static StopWords load(const std::filesystem::path& file);
  static const StopWords& bundled();
  bool contains(std::string_view w) const { return words.contains(w); }
};

struct SemEvalExample {
  std::string sentence;                   // without entity markup
  std::pair<std::size_t, std::size_t> e1; // byte spans in `sentence`
  std::pair<std::size_t, std::size_t> e2;
  std::string relation;
  std::optional<bool> gold;
  std::string query;

  std::string e1_text() const { return sentence.substr(e1.first, e1.second - e1.first); }
  std::string e2_text() const { return sentence.substr(e2.first, e2.second - e2.first); }
};

// "... <e1>vessel</e1> ... <e2>tools</e2> ..." -> clean sentence + spans.
// Throws DataError when either entity is missing.
SemEvalExample parse_semeval_markup(std::string_view marked);

// Last word of the entity text.
std::string entity_head(std::string_view entity);

struct SemEvalOptions {
  KindMask kinds;
  bool sentence_words = true;
  bool entity_words = true;
  bool query_words = false;
};

// Pair features between the entity heads plus contextual words: sentence
// words (stop words removed, Porter stemmed) "w:", entity lemmas "e:", query
// words "q:".
FeatureVector semeval_features(const SemEvalExample& ex, PairFeatureSource& source, const MorphLexicon& lex,
                               const StopWords& stop, const SemEvalOptions& options);

struct SemEvalPrediction {
  bool value = false;
  std::string reason;  // "1-nn", "majority", "same-lemma"
};

class SemEvalClassifier {
 public:
  // Raw (unweighted) vectors with gold labels; throws std::invalid_argument
  // on an empty set or a missing gold label.
  SemEvalClassifier(std::span<const SemEvalExample> train, std::span<const FeatureVector> vectors);

  SemEvalPrediction classify(const SemEvalExample& ex, const FeatureVector& raw, const MorphLexicon& lex) const;
  bool majority() const { return majority_; }
  const TfIdf& weights() const { return tfidf_; }

 private:
  TfIdf tfidf_;
  std::vector<LabeledVector> train_;
  bool majority_ = false;
};

}  // namespace nctk
