#pragma once

#include <string>
#include <vector>

#include "nctk/association.hpp"
#include "nctk/pattern.hpp"
#include "nctk/surface_scan.hpp"

namespace nctk {

inline constexpr std::size_t kDefaultSnippetLimit = 1000;

struct SurfaceResult {
  BracketDecision decision;
  FeatureTally tally;
};

// Unweighted sum of left- vs right-predicting surface cues over all
// occurrences of the triple in the snippets.
SurfaceResult surface_vote(const std::vector<std::string>& snippets, const NounTriple& t, const MorphLexicon& lex);

// Snippets for the triple and for its genitive variants "w1's w2 w3",
// "w1 w2's w3", inflected, in corpus order without duplicates.
std::vector<std::string> bracket_snippets(const CountProvider& p, const NounTriple& t, const MorphLexicon& lex,
                                          std::size_t limit = kDefaultSnippetLimit);
BracketDecision surface_decision(const CountProvider& p, const NounTriple& t, const MorphLexicon& lex,
                                 std::size_t limit = kDefaultSnippetLimit);

// Left- and right-predicting queries of a direct-count model; the decision
// compares the two summed counts.
struct QueryPair {
  std::vector<CountQuery> left;
  std::vector<CountQuery> right;
};

BracketDecision compare_query_sums(const CountProvider& p, const QueryPair& q, std::string model);

enum class ConcatVariant { Adjacency, Dependency, Triple };
enum class WildcardVariant { Adjacency, Dependency, ReversedAdjacency, ReversedDependency };
enum class MiscKind { Genitive, Abbreviation, Reorder, InflectionVariability, Swap };

std::string_view to_string(ConcatVariant v);
std::string_view to_string(WildcardVariant v);
std::string_view to_string(MiscKind k);

QueryPair concatenation_queries(const NounTriple& t, ConcatVariant v, const MorphLexicon& lex);
// `stars` words exactly between the two parts, 1..3.
QueryPair wildcard_queries(const NounTriple& t, WildcardVariant v, int stars, const MorphLexicon& lex);
// Swap has only a right-predicting query.
QueryPair misc_queries(const NounTriple& t, MiscKind k, const MorphLexicon& lex);

BracketDecision concatenation_decision(const CountProvider& p, const NounTriple& t, ConcatVariant v,
                                       const MorphLexicon& lex);
BracketDecision wildcard_decision(const CountProvider& p, const NounTriple& t, WildcardVariant v, int stars,
                                  const MorphLexicon& lex);
BracketDecision misc_decision(MiscKind k, const CountProvider& p, const NounTriple& t, const MorphLexicon& lex);

// Initial letters of the words, lowercased ("tumor", "necrosis" -> "tn").
std::string abbreviation(const std::vector<std::string>& words);
// Dictionary words, Roman numerals and US state codes make poor abbreviations.
bool unusable_abbreviation(const std::string& ab, const MorphLexicon& lex);

}  // namespace nctk
