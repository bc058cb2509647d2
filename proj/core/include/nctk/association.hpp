#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "nctk/corpus_index.hpp"
#include "nctk/decision.hpp"
#include "nctk/morphology.hpp"

namespace nctk {

// Undefined statistic ("zero marginal", "degenerate table").
class StatError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct NounTriple {
  std::string w1, w2, w3;

  NounTriple() = default;
  // Lowercases; throws std::invalid_argument on an empty word.
  NounTriple(std::string_view a, std::string_view b, std::string_view c);
  std::string text() const { return w1 + " " + w2 + " " + w3; }
};

struct ContingencyCounts {
  double a = 0, b = 0, c = 0, d = 0;
  double total() const { return a + b + c + d; }
};

// N(AD-BC)^2 / ((A+C)(B+D)(A+B)(C+D)); throws StatError("degenerate table")
// on a zero factor or a negative cell.
double chi_square(const ContingencyCounts& t);

enum class AssocKind { Freq, Prob, Pmi, Chi2 };
std::string_view to_string(AssocKind k);

// #(wi, wj) summed over infl(wj); #(w) summed over infl(w).
std::uint64_t bigram_count(const CountProvider& p, const MorphLexicon& lex, std::string_view wi, std::string_view wj);
std::uint64_t unigram_count(const CountProvider& p, const MorphLexicon& lex, std::string_view w);
ContingencyCounts contingency(const CountProvider& p, const MorphLexicon& lex, std::string_view wi, std::string_view wj);

double assoc_score(AssocKind kind, const CountProvider& p, const MorphLexicon& lex, std::string_view wi,
                   std::string_view wj);

enum class BracketModel { Adjacency, Dependency };

// Adjacency compares (left, right) = (Assoc(w1,w2), Assoc(w2,w3)); dependency
// (Assoc(w1,w2), Assoc(w1,w3)). Left wins when it is larger.
BracketDecision decide(BracketModel model, double left_assoc, double right_assoc, double margin = 0.0);

// Scores the triple and decides; an undefined score abstains with a diagnostic.
BracketDecision assoc_decision(BracketModel model, AssocKind kind, const CountProvider& p, const MorphLexicon& lex,
                               const NounTriple& t, double margin = 0.0);

}  // namespace nctk
