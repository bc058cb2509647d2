#include "nctk/association.hpp"

#include <cmath>

#include "nctk/normalize.hpp"

namespace nctk {

NounTriple::NounTriple(std::string_view a, std::string_view b, std::string_view c)
    : w1(to_lower(trim(a))), w2(to_lower(trim(b))), w3(to_lower(trim(c))) {
  if (w1.empty() || w2.empty() || w3.empty()) throw std::invalid_argument("noun triple with empty word");
}

double chi_square(const ContingencyCounts& t) {
  if (t.a < 0 || t.b < 0 || t.c < 0 || t.d < 0) throw StatError("degenerate table");
  const long double a = t.a, b = t.b, c = t.c, d = t.d;
  const long double den = (a + c) * (b + d) * (a + b) * (c + d);
  if (den == 0) throw StatError("degenerate table");
  const long double n = a + b + c + d;
  const long double diff = a * d - b * c;
  return static_cast<double>(n * diff * diff / den);
}

std::string_view to_string(AssocKind k) {
  switch (k) {
    case AssocKind::Freq: return "freq";
    case AssocKind::Prob: return "prob";
    case AssocKind::Pmi: return "pmi";
    default: return "chi2";
  }
}

std::uint64_t bigram_count(const CountProvider& p, const MorphLexicon& lex, std::string_view wi,
                           std::string_view wj) {
  return p.count(CountQuery::exact({Slot{to_lower(wi)}, lex.inflections(wj)}));
}

std::uint64_t unigram_count(const CountProvider& p, const MorphLexicon& lex, std::string_view w) {
  return p.count(CountQuery::exact({lex.inflections(w)}));
}

ContingencyCounts contingency(const CountProvider& p, const MorphLexicon& lex, std::string_view wi,
                              std::string_view wj) {
  const double a = static_cast<double>(bigram_count(p, lex, wi, wj));
  const double ni = static_cast<double>(unigram_count(p, lex, wi));
  const double nj = static_cast<double>(unigram_count(p, lex, wj));
  const double n = static_cast<double>(p.total_ngrams());
  ContingencyCounts t;
  t.a = a;
  t.b = ni - a;
  t.c = nj - a;
  t.d = n - t.a - t.b - t.c;
  return t;
}

double assoc_score(AssocKind kind, const CountProvider& p, const MorphLexicon& lex, std::string_view wi,
                   std::string_view wj) {
  switch (kind) {
    case AssocKind::Freq:
      return static_cast<double>(bigram_count(p, lex, wi, wj));
    case AssocKind::Prob: {
      const double nj = static_cast<double>(unigram_count(p, lex, wj));
      if (nj == 0) throw StatError("zero marginal");
      return static_cast<double>(bigram_count(p, lex, wi, wj)) / nj;
    }
    case AssocKind::Pmi: {
      const double a = static_cast<double>(bigram_count(p, lex, wi, wj));
      const double ni = static_cast<double>(unigram_count(p, lex, wi));
      const double nj = static_cast<double>(unigram_count(p, lex, wj));
      if (a == 0 || ni == 0 || nj == 0) throw StatError("zero marginal");
      return std::log(static_cast<double>(p.total_ngrams()) * a / (ni * nj));
    }
    default:
      return chi_square(contingency(p, lex, wi, wj));
  }
}

BracketDecision decide(BracketModel model, double left_assoc, double right_assoc, double margin) {
  if (margin < 0) throw std::invalid_argument("negative margin");
  return compare_scores<Bracketing>(left_assoc, right_assoc, margin,
                                    model == BracketModel::Adjacency ? "adjacency" : "dependency");
}

BracketDecision assoc_decision(BracketModel model, AssocKind kind, const CountProvider& p, const MorphLexicon& lex,
                               const NounTriple& t, double margin) {
  const std::string name =
      std::string(to_string(kind)) + (model == BracketModel::Adjacency ? "-adjacency" : "-dependency");
  try {
    const double left = assoc_score(kind, p, lex, t.w1, t.w2);
    const double right = model == BracketModel::Adjacency ? assoc_score(kind, p, lex, t.w2, t.w3)
                                                          : assoc_score(kind, p, lex, t.w1, t.w3);
    auto d = decide(model, left, right, margin);
    d.model = name;
    return d;
  } catch (const StatError& e) {
    return abstain<Bracketing>(name, e.what());
  } catch (const ProviderError& e) {
    return abstain<Bracketing>(name, e.what());
  }
}

}  // namespace nctk
