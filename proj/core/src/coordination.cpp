#include "nctk/coordination.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "nctk/normalize.hpp"
#include "nctk/pattern.hpp"

namespace nctk {

CoordQuad::CoordQuad(std::string_view n1_, std::string_view c_, std::string_view n2_, std::string_view h_)
    : n1(to_lower(trim(n1_))), c(to_lower(trim(c_))), n2(to_lower(trim(n2_))), h(to_lower(trim(h_))) {
  if (n1.empty() || n2.empty() || h.empty()) throw std::invalid_argument("empty coordination field");
  if (c != "and" && c != "or") throw std::invalid_argument("conjunction must be 'and' or 'or': " + c);
}

namespace {

PatternSlot infl(const std::string& w, const MorphLexicon& lex) { return any_of(lex.inflections(w)); }

}  // namespace

CoordDecision coord_ngram_decision(const CountProvider& provider, const CoordQuad& q, int model,
                                   const MorphLexicon& lex, const CoordMapping& mapping) {
  if (model != 1 && model != 2) throw std::invalid_argument("coordination n-gram model must be i or ii");
  const std::string name = model == 1 ? "ngram-i" : "ngram-ii";
  const auto n1 = word(q.n1), n2 = word(q.n2), h = infl(q.h, lex);
  try {
    const auto n1h = static_cast<double>(count_pattern(provider, {n1, h}));
    double other = 0;
    bool first_is_noun = true;
    if (model == 1) {
      other = static_cast<double>(count_pattern(provider, {n2, h}));
      first_is_noun = mapping.n1h_over_n2h_is_noun;
    } else {
      other = static_cast<double>(count_pattern(provider, {n1, any_of({"and", "or"}), n2}));
      first_is_noun = !mapping.conj_over_n1h_is_noun;
    }
    // first side is n1h; flip the comparison when n1h means NP coordination
    auto d = first_is_noun ? compare_scores<Coordination>(n1h, other, 0.0, name)
                           : compare_scores<Coordination>(other, n1h, 0.0, name);
    return d;
  } catch (const ProviderError& e) {
    return abstain<Coordination>(name, e.what());
  }
}

std::uint64_t coord_paraphrase_count(const CountProvider& provider, const CoordQuad& q, int pattern,
                                     const MorphLexicon& lex) {
  const auto n1 = word(q.n1), n2 = word(q.n2), h = infl(q.h, lex), c = word(q.c);
  switch (pattern) {
    case 1: return count_pattern(provider, {n2, c, n1, h});
    case 2: return count_pattern(provider, {n2, h, c, n1});
    case 3: return count_pattern(provider, {n1, h, c, n2, h});
    case 4: return count_pattern(provider, {n2, h, c, n1, h});
    default: throw std::invalid_argument("coordination paraphrase pattern must be 1..4");
  }
}

CoordDecision coord_paraphrase_decision(const CountProvider& provider, const CoordQuad& q, int pattern,
                                        const MorphLexicon& lex, std::uint64_t threshold) {
  if (threshold < 1) throw std::invalid_argument("paraphrase threshold must be >= 1");
  if (pattern < 1 || pattern > 4) throw std::invalid_argument("coordination paraphrase pattern must be 1..4");
  const std::string name = "para-" + std::to_string(pattern);
  const auto label = pattern == 2 ? Coordination::NPCoord : Coordination::NounCoord;
  try {
    const auto n = coord_paraphrase_count(provider, q, pattern, lex);
    auto d = fixed(n >= threshold ? label : opposite(label), name);
    d.first_score = static_cast<double>(n);
    d.second_score = static_cast<double>(threshold);
    return d;
  } catch (const ProviderError& e) {
    return abstain<Coordination>(name, e.what());
  }
}

std::string_view to_string(CoordHeuristic h) {
  switch (h) {
    case CoordHeuristic::H1: return "h1";
    case CoordHeuristic::H4: return "h4";
    case CoordHeuristic::H5: return "h5";
    default: return "h6";
  }
}

CoordDecision coord_heuristic(const CoordQuad& q, CoordHeuristic kind, const MorphLexicon& lex) {
  const std::string name(to_string(kind));
  if (kind == CoordHeuristic::H1)
    return q.n1 == q.n2 || lex.lemma(q.n1) == lex.lemma(q.n2) ? fixed(Coordination::NPCoord, name)
                                                              : abstain<Coordination>(name);
  if (!q.n1_determiner || !q.n2_determiner) return abstain<Coordination>(name, "determiner context unknown");
  const bool d1 = *q.n1_determiner, d2 = *q.n2_determiner;
  switch (kind) {
    case CoordHeuristic::H4:
      return d1 && d2 ? fixed(Coordination::NPCoord, name) : abstain<Coordination>(name);
    case CoordHeuristic::H5:
      return q.c == "or" && d1 && !d2 ? fixed(Coordination::NounCoord, name) : abstain<Coordination>(name);
    default:
      return !d1 && d2 ? fixed(Coordination::NPCoord, name) : abstain<Coordination>(name);
  }
}

CoordDecision number_agreement_decision(const CoordQuad& q, const MorphLexicon& lex) {
  const auto a = lex.number(q.n1), b = lex.number(q.n2), h = lex.number(q.h);
  if (a == Number::Unknown || b == Number::Unknown || h == Number::Unknown)
    return abstain<Coordination>("number", "number unknown");
  if (a == b && a != h) return fixed(Coordination::NounCoord, "number");
  if (a != b && a == h) return fixed(Coordination::NPCoord, "number");
  return abstain<Coordination>("number");
}

CoordSurfaceResult coord_surface_vote(const std::vector<std::string>& snippets, const CoordQuad& q,
                                      const MorphLexicon& lex) {
  CoordSurfaceResult r;
  const std::vector<Slot> slots{Slot{q.n1}, Slot{q.c}, Slot{q.n2}, lex.inflections(q.h)};
  for (const auto& s : snippets) {
    for (const auto& o : find_occurrences(s, slots, false)) {
      const auto g0 = squeeze(o.gaps[0]);
      const auto g2 = squeeze(o.gaps[2]);
      if (g0 == "-") r.tally.vote_first("dash-n1");
      else if (g0.find('(') != std::string::npos || g0.find(')') != std::string::npos)
        r.tally.vote_second("parentheses-n1-c");
      else if (!g0.empty() && g0 != ",") r.tally.vote_second("punctuation-n1-c");
      if (g2 == "/") r.tally.vote_first("slash-n2-h");
      else if (g2.find('(') != std::string::npos || g2.find(')') != std::string::npos)
        r.tally.vote_first("parentheses-n2-h");
      else if (!g2.empty()) r.tally.vote_first("punctuation-n2-h");
    }
  }
  r.decision = compare_scores<Coordination>(static_cast<double>(r.tally.first_total()),
                                            static_cast<double>(r.tally.second_total()), 0.0, "surface");
  return r;
}

CoordDecision coord_surface_decision(const CountProvider& provider, const CoordQuad& q, const MorphLexicon& lex,
                                     std::size_t limit) {
  try {
    const auto query = CountQuery::exact({Slot{q.n1}, Slot{q.c}, Slot{q.n2}, lex.inflections(q.h)});
    return coord_surface_vote(provider.snippets(query, limit), q, lex).decision;
  } catch (const ProviderError& e) {
    return abstain<Coordination>("surface", e.what());
  }
}

std::vector<std::string> CoordConfig::standard_voters() {
  return {"ngram-i", "para-1", "para-2", "para-3", "para-4", "h1", "h6", "number", "surface"};
}

std::vector<std::string> CoordConfig::all_voters() {
  return {"ngram-i", "ngram-ii", "para-1", "para-2", "para-3", "para-4", "h1",
          "h4",      "h5",       "h6",     "number", "surface"};
}

CoordConfig CoordConfig::standard() {
  CoordConfig c;
  c.voters = standard_voters();
  return c;
}

void CoordConfig::validate() const {
  if (threshold < 1) throw std::invalid_argument("paraphrase threshold must be >= 1");
  if (snippet_limit == 0) throw std::invalid_argument("snippet limit must be >= 1");
  const auto known = all_voters();
  for (const auto& v : voters)
    if (std::ranges::find(known, v) == known.end()) throw std::invalid_argument("unknown voter: " + v);
}

CoordDecision run_coord_voter(const std::string& voter, const CoordQuad& q, const CountProvider& provider,
                              const MorphLexicon& lex, const CoordConfig& config) {
  CoordDecision d;
  if (voter == "ngram-i") d = coord_ngram_decision(provider, q, 1, lex, config.mapping);
  else if (voter == "ngram-ii") d = coord_ngram_decision(provider, q, 2, lex, config.mapping);
  else if (voter.starts_with("para-") && voter.size() == 6 && voter[5] >= '1' && voter[5] <= '4')
    d = coord_paraphrase_decision(provider, q, voter[5] - '0', lex, config.threshold);
  else if (voter == "h1") d = coord_heuristic(q, CoordHeuristic::H1, lex);
  else if (voter == "h4") d = coord_heuristic(q, CoordHeuristic::H4, lex);
  else if (voter == "h5") d = coord_heuristic(q, CoordHeuristic::H5, lex);
  else if (voter == "h6") d = coord_heuristic(q, CoordHeuristic::H6, lex);
  else if (voter == "number") d = number_agreement_decision(q, lex);
  else if (voter == "surface") d = coord_surface_decision(provider, q, lex, config.snippet_limit);
  else throw std::invalid_argument("unknown voter: " + voter);
  d.model = voter;
  return d;
}

CoordResult coord_pipeline(const CoordQuad& q, const CountProvider& provider, const MorphLexicon& lex,
                           const CoordConfig& config) {
  config.validate();
  CoordResult r;
  r.quad = q;
  for (const auto& v : config.voters) r.votes.push_back(run_coord_voter(v, q, provider, lex, config));
  r.final = majority_vote(r.votes, config.default_label);
  return r;
}

}  // namespace nctk
