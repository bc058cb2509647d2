#include "nctk/relational.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "nctk/association.hpp"
#include "nctk/normalize.hpp"
#include "nctk/porter.hpp"
#include "nctk/resources.hpp"

namespace nctk {

SatAnswer solve_sat(const FeatureVector& stem, std::span<const FeatureVector> candidates) {
  SatAnswer a;
  double best = -1;
  std::size_t at_best = 0;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    double s = 0;
    try {
      s = dice(stem, candidates[i]);
    } catch (const StatError&) {
      s = 0;
    }
    a.scores.push_back(s);
    if (s > best) {
      best = s;
      at_best = 1;
      a.choice = i;
    } else if (s == best) {
      ++at_best;
    }
  }
  if (at_best != 1) a.choice.reset();
  return a;
}

SatAnswer solve_sat(const SatQuestion& q, PairFeatureSource& source, KindMask kinds, const TfIdf* weights) {
  std::vector<FeatureVector> raw;
  raw.push_back(to_feature_vector(filter_kinds(source.features(q.stem.first, q.stem.second), kinds)));
  for (const auto& c : q.candidates)
    raw.push_back(to_feature_vector(filter_kinds(source.features(c.first, c.second), kinds)));
  const TfIdf own = weights ? TfIdf{} : TfIdf::fit(raw);
  const TfIdf& w = weights ? *weights : own;
  std::vector<FeatureVector> cands;
  for (std::size_t i = 1; i < raw.size(); ++i) cands.push_back(w.weight(raw[i]));
  return solve_sat(w.weight(raw[0]), cands);
}

StopWords StopWords::parse(std::string_view text) {
  StopWords s;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    for (const auto& w : split_whitespace(line)) s.words.insert(to_lower(w));
  }
  return s;
}

StopWords StopWords::load(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw DataError("cannot open stop-word list: " + file.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

const StopWords& StopWords::bundled() {
  static const StopWords s = [] {
    const auto f = data_file("stopwords.txt");
    return std::filesystem::exists(f) ? load(f) : StopWords{};
  }();
  return s;
}

SemEvalExample parse_semeval_markup(std::string_view marked) {
  SemEvalExample ex;
  std::optional<std::size_t> b1, e1, b2, e2;
  std::size_t i = 0;
  while (i < marked.size()) {
    auto tag = [&](std::string_view t) { return marked.substr(i, t.size()) == t; };
    if (tag("<e1>")) { b1 = ex.sentence.size(); i += 4; }
    else if (tag("</e1>")) { e1 = ex.sentence.size(); i += 5; }
    else if (tag("<e2>")) { b2 = ex.sentence.size(); i += 4; }
    else if (tag("</e2>")) { e2 = ex.sentence.size(); i += 5; }
    else ex.sentence += marked[i++];
  }
  if (!b1 || !e1 || !b2 || !e2 || *e1 < *b1 || *e2 < *b2)
    throw DataError("sentence lacks <e1>...</e1> and <e2>...</e2> markup");
  ex.e1 = {*b1, *e1};
  ex.e2 = {*b2, *e2};
  return ex;
}

std::string entity_head(std::string_view entity) {
  const auto toks = normalize_tokens(entity);
  return toks.empty() ? std::string{} : toks.back();
}

FeatureVector semeval_features(const SemEvalExample& ex, PairFeatureSource& source, const MorphLexicon& lex,
                               const StopWords& stop, const SemEvalOptions& options) {
  FeatureVector v;
  const auto h1 = entity_head(ex.e1_text()), h2 = entity_head(ex.e2_text());
  if (!h1.empty() && !h2.empty())
    for (const auto& [f, n] : filter_kinds(source.features(h1, h2), options.kinds)) v["pair:" + f.key()] += n;
  if (options.sentence_words)
    for (const auto& w : normalize_tokens(ex.sentence))
      if (!stop.contains(w)) v["w:" + porter_stem(w)] += 1;
  if (options.entity_words)
    for (const auto& text : {ex.e1_text(), ex.e2_text()})
      for (const auto& w : normalize_tokens(text)) v["e:" + lex.lemma(w)] += 1;
  if (options.query_words)
    for (const auto& w : normalize_tokens(ex.query))
      if (w != "*") v["q:" + w] += 1;
  return v;
}

SemEvalClassifier::SemEvalClassifier(std::span<const SemEvalExample> train, std::span<const FeatureVector> vectors) {
  if (train.empty()) throw std::invalid_argument("empty SemEval training set");
  if (train.size() != vectors.size()) throw std::invalid_argument("one vector per training example expected");
  tfidf_ = TfIdf::fit(vectors);
  std::size_t positive = 0;
  for (std::size_t i = 0; i < train.size(); ++i) {
    if (!train[i].gold) throw std::invalid_argument("training example without a gold label");
    positive += *train[i].gold;
    train_.push_back({tfidf_.weight(vectors[i]), *train[i].gold ? "true" : "false"});
  }
  majority_ = 2 * positive > train.size();
}

SemEvalPrediction SemEvalClassifier::classify(const SemEvalExample& ex, const FeatureVector& raw,
                                              const MorphLexicon& lex) const {
  const auto h1 = entity_head(ex.e1_text()), h2 = entity_head(ex.e2_text());
  if (!h1.empty() && lex.lemma(h1) == lex.lemma(h2)) return {false, "same-lemma"};
  const auto r = knn_classify(train_, tfidf_.weight(raw));
  if (!r.label) return {majority_, "majority"};
  return {*r.label == "true", "1-nn"};
}

}  // namespace nctk
