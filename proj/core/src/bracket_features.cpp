#include "nctk/bracket_features.hpp"

#include <algorithm>
#include <set>

#include "nctk/normalize.hpp"

namespace nctk {

namespace {

bool ends_with_char(std::string_view s, char c) {
  const auto q = squeeze(s);
  return !q.empty() && q.back() == c;
}

bool starts_with_char(std::string_view s, char c) {
  const auto q = squeeze(s);
  return !q.empty() && q.front() == c;
}

bool plain(const std::string& squeezed) { return squeezed.empty(); }

bool other_punct(const std::string& g) {
  return !g.empty() && g != "-" && g != "/" && g.find('(') == std::string::npos && g.find(')') == std::string::npos;
}

void scan_occurrence(const Occurrence& o, FeatureTally& tally) {
  const auto g1 = squeeze(o.gaps[0]);
  const auto g2 = squeeze(o.gaps[1]);
  const bool dash_before = o.word_before && ends_with_char(o.before, '-') && squeeze(o.before) == "-";
  const bool dash_after = o.word_after && starts_with_char(o.after, '-') && squeeze(o.after) == "-";

  // dashes: internal or external, only when a single dash is present
  const int dashes = (g1 == "-") + (g2 == "-") + dash_before + dash_after;
  if (dashes == 1) {
    if (g1 == "-") tally.vote_first("dash");
    else if (g2 == "-") tally.vote_second("dash");
    else if (dash_before) tally.vote_second("external-dash");
    else tally.vote_first("external-dash");
  }

  if (o.genitive[0]) tally.vote_second("genitive");
  if (o.genitive[1]) tally.vote_first("genitive");

  if (is_lowercase_word(o.words[0]) && is_capitalized(o.words[1]) && capitalization_usable(o.words[1]))
    tally.vote_second("capitalization");
  else if (is_lowercase_word(o.words[1]) && is_capitalized(o.words[2]) && capitalization_usable(o.words[2]))
    tally.vote_first("capitalization");

  if (g1 == "/") tally.vote_second("slash");
  if (g2 == "/") tally.vote_first("slash");
  if (o.word_before && squeeze(o.before) == "/") tally.vote_second("external-slash");
  if (o.word_after && squeeze(o.after) == "/") tally.vote_first("external-slash");

  const bool open_before = ends_with_char(o.before, '(');
  const bool close_after = starts_with_char(o.after, ')');
  if ((open_before && g2 == ")") || (g2 == "(" && close_after)) tally.vote_first("parentheses");
  if ((open_before && g1 == ")") || (g1 == "(" && close_after)) tally.vote_second("parentheses");

  if (other_punct(g2) && plain(g1)) tally.vote_first("punctuation");
  if (other_punct(g1) && plain(g2)) tally.vote_second("punctuation");
}

Slot prefixed(const std::string& head, const std::vector<std::string>& tails) {
  Slot s;
  for (const auto& t : tails) s.push_back(head + t);
  return s;
}

Slot minus(std::vector<std::string> forms, const std::string& w) {
  std::erase(forms, w);
  return forms;
}

std::vector<CountQuery> one(Phrase p) {
  for (const auto& s : p)
    if (s.empty()) return {};
  return {CountQuery::exact(std::move(p))};
}

std::vector<CountQuery> gapped(Phrase l, int stars, Phrase r) {
  return {CountQuery::with_gap(std::move(l), stars, stars, std::move(r))};
}

}  // namespace

SurfaceResult surface_vote(const std::vector<std::string>& snippets, const NounTriple& t, const MorphLexicon& lex) {
  SurfaceResult r;
  const std::vector<Slot> words{lex.inflections(t.w1), lex.inflections(t.w2), lex.inflections(t.w3)};
  for (const auto& s : snippets)
    for (const auto& o : find_occurrences(s, words)) scan_occurrence(o, r.tally);
  r.decision = compare_scores<Bracketing>(static_cast<double>(r.tally.first_total()),
                                          static_cast<double>(r.tally.second_total()), 0.0, "surface");
  return r;
}

std::vector<std::string> bracket_snippets(const CountProvider& p, const NounTriple& t, const MorphLexicon& lex,
                                          std::size_t limit) {
  const Slot a = lex.inflections(t.w1), b = lex.inflections(t.w2), c = lex.inflections(t.w3);
  const Slot s{"s"};
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& q : {CountQuery::exact({a, b, c}), CountQuery::exact({a, s, b, c}), CountQuery::exact({a, b, s, c})})
    for (auto& snip : p.snippets(q, limit))
      if (seen.insert(snip).second) out.push_back(std::move(snip));
  return out;
}

BracketDecision surface_decision(const CountProvider& p, const NounTriple& t, const MorphLexicon& lex,
                                 std::size_t limit) {
  try {
    return surface_vote(bracket_snippets(p, t, lex, limit), t, lex).decision;
  } catch (const ProviderError& e) {
    return abstain<Bracketing>("surface", e.what());
  }
}

BracketDecision compare_query_sums(const CountProvider& p, const QueryPair& q, std::string model) {
  try {
    const auto l = count_queries(p, q.left);
    const auto r = count_queries(p, q.right);
    return compare_scores<Bracketing>(static_cast<double>(l), static_cast<double>(r), 0.0, std::move(model));
  } catch (const ProviderError& e) {
    return abstain<Bracketing>(std::move(model), e.what());
  }
}

std::string_view to_string(ConcatVariant v) {
  switch (v) {
    case ConcatVariant::Adjacency: return "concat-adjacency";
    case ConcatVariant::Dependency: return "concat-dependency";
    default: return "concat-triple";
  }
}

std::string_view to_string(WildcardVariant v) {
  switch (v) {
    case WildcardVariant::Adjacency: return "wildcard-adjacency";
    case WildcardVariant::Dependency: return "wildcard-dependency";
    case WildcardVariant::ReversedAdjacency: return "wildcard-rev-adjacency";
    default: return "wildcard-rev-dependency";
  }
}

std::string_view to_string(MiscKind k) {
  switch (k) {
    case MiscKind::Genitive: return "genitive";
    case MiscKind::Abbreviation: return "abbreviation";
    case MiscKind::Reorder: return "reorder";
    case MiscKind::InflectionVariability: return "inflection-variability";
    default: return "swap";
  }
}

QueryPair concatenation_queries(const NounTriple& t, ConcatVariant v, const MorphLexicon& lex) {
  const auto i1 = lex.inflections(t.w1), i2 = lex.inflections(t.w2), i3 = lex.inflections(t.w3);
  QueryPair q;
  switch (v) {
    case ConcatVariant::Adjacency:
      q.left = one({prefixed(t.w1, i2)});
      q.right = one({prefixed(t.w2, i3)});
      break;
    case ConcatVariant::Dependency:
      q.left = one({prefixed(t.w1, i2)});
      q.right = one({prefixed(t.w1, i3)});
      break;
    case ConcatVariant::Triple:
      q.left = one({prefixed(t.w1, i2), i3});
      q.right = one({i1, prefixed(t.w2, i3)});
      break;
  }
  return q;
}

QueryPair wildcard_queries(const NounTriple& t, WildcardVariant v, int stars, const MorphLexicon& lex) {
  if (stars < 1 || stars > 3) throw std::invalid_argument("wildcard stars must be in [1, 3]");
  const Slot w1{t.w1}, w2{t.w2};
  const auto i1 = lex.inflections(t.w1), i2 = lex.inflections(t.w2), i3 = lex.inflections(t.w3);
  QueryPair q;
  switch (v) {
    case WildcardVariant::Adjacency:
      q.left = gapped({w1, i2}, stars, {i3});
      q.right = gapped({i1}, stars, {w2, i3});
      break;
    case WildcardVariant::Dependency:
      q.left = gapped({w1, i2}, stars, {i3});
      q.right = gapped({i2}, stars, {w1, i3});
      break;
    case WildcardVariant::ReversedAdjacency:
      q.left = gapped({i3}, stars, {w1, i2});
      q.right = gapped({w2, i3}, stars, {i1});
      break;
    case WildcardVariant::ReversedDependency:
      q.left = gapped({i3}, stars, {w1, i2});
      q.right = gapped({w1, i3}, stars, {i2});
      break;
  }
  return q;
}

std::string abbreviation(const std::vector<std::string>& words) {
  std::string out;
  for (const auto& w : words)
    if (!w.empty()) out.push_back(to_lower(w.substr(0, 1))[0]);
  return out;
}

bool unusable_abbreviation(const std::string& ab, const MorphLexicon& lex) {
  static const std::set<std::string> states = {
      "al", "ak", "az", "ar", "ca", "co", "ct", "de", "dc", "fl", "ga", "hi", "id", "il", "in", "ia", "ks", "ky",
      "la", "me", "md", "ma", "mi", "mn", "ms", "mo", "mt", "ne", "nv", "nh", "nj", "nm", "ny", "nc", "nd", "oh",
      "ok", "or", "pa", "ri", "sc", "sd", "tn", "tx", "ut", "vt", "va", "wa", "wv", "wi", "wy"};
  static const std::set<std::string> words = {
      "a",  "am", "an", "as", "at", "be", "by", "do", "go", "he", "hi", "if", "in", "is", "it", "me", "my",
      "no", "of", "oh", "ok", "on", "or", "so", "to", "up", "us", "we", "ax", "ox", "pa", "ma", "ad", "ah"};
  if (ab.size() == 2 && states.contains(ab)) return true;
  return words.contains(ab) || lex.known(ab) || is_roman_numeral(ab);
}

QueryPair misc_queries(const NounTriple& t, MiscKind k, const MorphLexicon& lex) {
  const Slot w1{t.w1}, w2{t.w2}, s{"s"};
  const auto i1 = lex.inflections(t.w1), i2 = lex.inflections(t.w2), i3 = lex.inflections(t.w3);
  QueryPair q;
  switch (k) {
    case MiscKind::Genitive:
      q.left = one({w1, s, w2, i3});
      q.right = one({w1, w2, s, i3});
      break;
    case MiscKind::Abbreviation: {
      const auto ab12 = abbreviation({t.w1, t.w2});
      const auto ab23 = abbreviation({t.w2, t.w3});
      if (!unusable_abbreviation(ab12, lex)) q.left = one({w1, w2, Slot{ab12}, i3});
      if (!unusable_abbreviation(ab23, lex)) q.right = one({i1, w2, i3, Slot{ab23}});
      break;
    }
    case MiscKind::Reorder:
      q.left = one({i3, w1, i2});
      q.right = one({w2, i3, i1});
      break;
    case MiscKind::InflectionVariability:
      q.left = one({w1, minus(i2, t.w2), i3});
      q.right = one({minus(i1, t.w1), w2, i3});
      break;
    case MiscKind::Swap:
      q.right = one({w2, i1, i3});
      break;
  }
  return q;
}

BracketDecision concatenation_decision(const CountProvider& p, const NounTriple& t, ConcatVariant v,
                                       const MorphLexicon& lex) {
  return compare_query_sums(p, concatenation_queries(t, v, lex), std::string(to_string(v)));
}

BracketDecision wildcard_decision(const CountProvider& p, const NounTriple& t, WildcardVariant v, int stars,
                                  const MorphLexicon& lex) {
  return compare_query_sums(p, wildcard_queries(t, v, stars, lex),
                            std::string(to_string(v)) + "-" + std::to_string(stars));
}

BracketDecision misc_decision(MiscKind k, const CountProvider& p, const NounTriple& t, const MorphLexicon& lex) {
  const auto q = misc_queries(t, k, lex);
  const std::string name(to_string(k));
  if (k != MiscKind::Swap) return compare_query_sums(p, q, name);
  try {
    const auto n = count_queries(p, q.right);
    auto d = n > 0 ? fixed(Bracketing::Right, name) : abstain<Bracketing>(name);
    d.second_score = static_cast<double>(n);
    return d;
  } catch (const ProviderError& e) {
    return abstain<Bracketing>(name, e.what());
  }
}

}  // namespace nctk
