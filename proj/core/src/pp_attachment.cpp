#include "nctk/pp_attachment.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

#include "nctk/association.hpp"
#include "nctk/normalize.hpp"
#include "nctk/pattern.hpp"

namespace nctk {

PPQuad::PPQuad(std::string_view v_, std::string_view n1_, std::string_view p_, std::string_view n2_)
    : v(to_lower(trim(v_))), n1(to_lower(trim(n1_))), p(to_lower(trim(p_))), n2(to_lower(trim(n2_))) {
  if (v.empty() || n1.empty() || p.empty() || n2.empty()) throw std::invalid_argument("empty PP quad field");
}

const std::vector<std::string>& pronouns() {
  static const std::vector<std::string> list{"i",   "me", "you", "he", "him",  "she",
                                             "her", "it", "we",  "us", "they", "them"};
  return list;
}

bool is_pronoun(std::string_view w) {
  const auto l = to_lower(w);
  return std::ranges::find(pronouns(), l) != pronouns().end();
}

bool is_be_form(std::string_view w) {
  static const std::set<std::string, std::less<>> be{"am", "is", "are", "was", "were", "be", "been", "being"};
  return be.contains(to_lower(w));
}

const std::vector<std::string>& pp_determiners() {
  static const std::vector<std::string> list{"a",   "an",    "the", "this", "that", "these", "those", "his", "her",
                                             "its", "their", "my",  "our",  "your", "some",  "each",  "every"};
  return list;
}

namespace {

const std::set<std::string, std::less<>>& other_determiners() {
  static const std::set<std::string, std::less<>> list{"this", "that", "these",  "those",   "some",
                                                       "any",  "each", "every",  "all",     "no",
                                                       "another", "both", "either", "neither", "one"};
  return list;
}

bool is_determiner(std::string_view w) {
  const auto l = to_lower(w);
  return std::ranges::find(pp_determiners(), l) != pp_determiners().end() || other_determiners().contains(l);
}

}  // namespace

bool noun_like(std::string_view w) {
  if (w.empty()) return false;
  for (unsigned char c : w)
    if (c < 0x80 && !std::isalpha(c)) return false;
  return !is_pronoun(w) && !is_determiner(w);
}

namespace {

PatternSlot verb(const PPQuad& q, const MorphLexicon& lex) { return any_of(lex.verb_inflections(q.v)); }
PatternSlot noun(const std::string& n, const MorphLexicon& lex) { return any_of(lex.inflections(n)); }
PatternSlot det() { return any_of(pp_determiners()); }
PatternSlot det_opt() { return optional(det()); }

double ratio(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw StatError("zero marginal");
  return static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

AttachmentDecision pp_ngram_decision(const CountProvider& provider, const PPQuad& q, int model,
                                     const MorphLexicon& lex) {
  if (model < 1 || model > 4) throw std::invalid_argument("PP n-gram model must be 1..4");
  const std::string name = "ngram-" + std::to_string(model);
  if (is_pronoun(q.n1) || is_pronoun(q.n2)) return abstain<Attachment>(name, "pronoun argument");
  const auto v = verb(q, lex), n1 = noun(q.n1, lex), n2 = noun(q.n2, lex), p = word(q.p);
  try {
    double noun_side = 0, verb_side = 0;
    if (model == 1 || model == 2) {
      noun_side = static_cast<double>(count_pattern(provider, {n1, p}));
      verb_side = static_cast<double>(count_pattern(provider, {v, p}));
    } else {
      noun_side = static_cast<double>(count_pattern(provider, {n1, p, det_opt(), n2}));
      verb_side = static_cast<double>(count_pattern(provider, {v, p, det_opt(), n2}));
    }
    if (model == 2 || model == 4) {
      noun_side = ratio(static_cast<std::uint64_t>(noun_side), count_pattern(provider, {n1}));
      verb_side = ratio(static_cast<std::uint64_t>(verb_side), count_pattern(provider, {v}));
    }
    return compare_scores<Attachment>(noun_side, verb_side, 0.0, name);
  } catch (const StatError& e) {
    return abstain<Attachment>(name, e.what());
  } catch (const ProviderError& e) {
    return abstain<Attachment>(name, e.what());
  }
}

std::uint64_t pp_paraphrase_count(const CountProvider& provider, const PPQuad& q, int pattern,
                                  const MorphLexicon& lex) {
  const auto v = verb(q, lex), n1 = noun(q.n1, lex), n2 = noun(q.n2, lex), p = word(q.p);
  switch (pattern) {
    case 1:
      if (q.p == "to" || !noun_like(q.n1) || !noun_like(q.n2)) return 0;
      return count_pattern(provider, {v, det(), n2, n1});
    case 2:
      return count_pattern(provider, {v, p, det_opt(), n2, det(), n1});
    case 3:
      return count_queries(provider, gap_pattern_queries({p, det_opt(), n2}, 0, 3, {v, det_opt(), n1}));
    case 4:
      return count_pattern(provider, {n1, p, det_opt(), n2, v});
    case 5:
      return count_pattern(provider, {v, any_of({"him", "her"}), p, det_opt(), n2});
    case 6:
      return count_pattern(provider, {any_of({"is", "are"}), det_opt(), n1, p, det_opt(), n2});
    default:
      throw std::invalid_argument("PP paraphrase pattern must be 1..6");
  }
}

AttachmentDecision pp_paraphrase_decision(const CountProvider& provider, const PPQuad& q, int pattern,
                                          const MorphLexicon& lex) {
  if (pattern < 1 || pattern > 6) throw std::invalid_argument("PP paraphrase pattern must be 1..6");
  const std::string name = "para-" + std::to_string(pattern);
  if (pattern == 1 && (q.p == "to" || !noun_like(q.n1) || !noun_like(q.n2)))
    return abstain<Attachment>(name, "pattern not applicable");
  const bool noun_pattern = pattern == 1 || pattern == 4 || pattern == 6;
  try {
    const auto n = pp_paraphrase_count(provider, q, pattern, lex);
    if (n == 0) return abstain<Attachment>(name, "no match");
    auto d = fixed(noun_pattern ? Attachment::Noun : Attachment::Verb, name);
    (noun_pattern ? d.first_score : d.second_score) = static_cast<double>(n);
    return d;
  } catch (const ProviderError& e) {
    return abstain<Attachment>(name, e.what());
  }
}

std::string_view to_string(PPHeuristic h) {
  switch (h) {
    case PPHeuristic::PronounN1: return "pronoun-n1";
    case PPHeuristic::VerbBe: return "verb-be";
    default: return "of-rule";
  }
}

AttachmentDecision pp_heuristic(const PPQuad& q, PPHeuristic kind) {
  const std::string name(to_string(kind));
  switch (kind) {
    case PPHeuristic::PronounN1:
      return is_pronoun(q.n1) ? fixed(Attachment::Verb, name) : abstain<Attachment>(name);
    case PPHeuristic::VerbBe:
      return is_be_form(q.v) ? fixed(Attachment::Noun, name) : abstain<Attachment>(name);
    default:
      return q.p == "of" ? fixed(Attachment::Noun, name) : abstain<Attachment>(name);
  }
}

namespace {

std::string gap_feature(const std::string& g) {
  if (g.find('(') != std::string::npos || g.find(')') != std::string::npos) return "parentheses";
  if (g == "-") return "dash";
  if (g == "/") return "slash";
  return "punctuation";
}

}  // namespace

PPSurfaceResult pp_surface_vote(const std::vector<std::string>& snippets, const PPQuad& q, const MorphLexicon& lex) {
  PPSurfaceResult r;
  const Slot v = lex.verb_inflections(q.v), n1 = lex.inflections(q.n1), n2 = lex.inflections(q.n2);
  const Slot p{q.p}, d = pp_determiners();
  for (const auto& s : snippets) {
    for (bool d1 : {false, true}) {
      for (bool d2 : {false, true}) {
        std::vector<Slot> slots{v};
        if (d1) slots.push_back(d);
        slots.push_back(n1);
        slots.push_back(p);
        if (d2) slots.push_back(d);
        slots.push_back(n2);
        const std::size_t i_n1 = d1 ? 2 : 1, i_p = i_n1 + 1;
        for (const auto& o : find_occurrences(s, slots, false)) {
          std::string g_vn;
          for (std::size_t k = 0; k < i_n1; ++k) g_vn += squeeze(o.gaps[k]);
          const auto g_np = squeeze(o.gaps[i_n1]);
          if (!g_vn.empty()) r.tally.vote_first(gap_feature(g_vn) + "-v-n1");
          if (!g_np.empty()) r.tally.vote_second(gap_feature(g_np) + "-n1-p");
          const auto& wv = o.words[0];
          const auto& wn1 = o.words[i_n1];
          const auto& wp = o.words[i_p];
          if (is_lowercase_word(wv) && is_capitalized(wn1) && capitalization_usable(wn1))
            r.tally.vote_first("capitalized-n1");
          if (is_lowercase_word(wn1) && is_capitalized(wp) && capitalization_usable(wp))
            r.tally.vote_second("capitalized-p");
        }
      }
    }
  }
  r.decision = compare_scores<Attachment>(static_cast<double>(r.tally.first_total()),
                                          static_cast<double>(r.tally.second_total()), 0.0, "surface");
  return r;
}

AttachmentDecision pp_surface_decision(const CountProvider& provider, const PPQuad& q, const MorphLexicon& lex,
                                       std::size_t limit) {
  try {
    const Pattern pat{verb(q, lex), det_opt(), noun(q.n1, lex), word(q.p), det_opt(), noun(q.n2, lex)};
    std::vector<std::string> snippets;
    std::set<std::string> seen;
    for (const auto& cq : pattern_queries(pat))
      for (auto& s : provider.snippets(cq, limit))
        if (seen.insert(s).second) snippets.push_back(std::move(s));
    return pp_surface_vote(snippets, q, lex).decision;
  } catch (const ProviderError& e) {
    return abstain<Attachment>("surface", e.what());
  }
}

std::string normalize_pp_token(std::string_view w) {
  const auto l = to_lower(trim(w));
  const auto digits = std::ranges::count_if(l, [](unsigned char c) { return std::isdigit(c); });
  if ((l.size() == 4 && digits == 4) || (l.size() == 5 && digits == 4 && l.back() == 's')) return "YEAR";
  const bool numeric = !l.empty() && std::ranges::all_of(l, [](unsigned char c) {
    return std::isdigit(c) || c == '.' || c == ',' || c == '%' || c == '-' || c == '/';
  });
  if (numeric && (digits > 0 || l == "%")) return "NUM";
  if (is_pronoun(l)) return "PRO";
  if (l == "a" || l == "an" || l == "the") return "ART";
  if (is_determiner(l)) return "DET";
  return l;
}

PPQuad normalize_quad(const PPQuad& q, const MorphLexicon& lex) {
  auto norm = [&](const std::string& w, bool is_verb) {
    auto t = normalize_pp_token(w);
    if (t != w) return t;
    return is_verb ? lex.verb_lemma(w) : lex.lemma(w);
  };
  PPQuad out;
  out.v = norm(q.v, true);
  out.n1 = norm(q.n1, false);
  out.p = q.p;
  out.n2 = norm(q.n2, false);
  return out;
}

BackoffModel backoff_train(std::span<const std::pair<PPQuad, Attachment>> examples) {
  if (examples.empty()) throw std::invalid_argument("empty back-off training set");
  BackoffModel m;
  for (const auto& [q, label] : examples) {
    if (label == Attachment::Abstain) throw std::invalid_argument("back-off training label must be N or V");
    const std::uint64_t is_noun = label == Attachment::Noun;
    for (auto* t : {&m.vp[{q.v, q.p}], &m.n1p[{q.n1, q.p}], &m.pn2[{q.p, q.n2}], &m.p[q.p]}) {
      t->noun += is_noun;
      ++t->total;
    }
    ++m.trained;
  }
  return m;
}

namespace {

template <typename Map, typename Key>
BackoffModel::Tally lookup(const Map& m, const Key& k) {
  auto it = m.find(k);
  return it == m.end() ? BackoffModel::Tally{} : it->second;
}

}  // namespace

AttachmentDecision backoff_predict(const BackoffModel& model, const PPQuad& q) {
  auto decide = [](std::uint64_t noun, std::uint64_t total, const char* which) {
    AttachmentDecision d;
    d.model = "backoff";
    d.diagnostic = which;
    d.first_score = static_cast<double>(noun) / static_cast<double>(total);
    d.second_score = 1.0 - d.first_score;
    if (2 * noun > total) d.label = Attachment::Noun;
    else if (2 * noun < total) d.label = Attachment::Verb;
    return d;
  };
  const auto a = lookup(model.vp, BackoffModel::Key{q.v, q.p});
  const auto b = lookup(model.n1p, BackoffModel::Key{q.n1, q.p});
  const auto c = lookup(model.pn2, BackoffModel::Key{q.p, q.n2});
  const auto den = a.total + b.total + c.total;
  if (den > 3) {
    auto d = decide(a.noun + b.noun + c.noun, den, "R1");
    if (!d.abstained()) return d;
  }
  const auto r2 = lookup(model.p, q.p);
  if (r2.total == 0) return abstain<Attachment>("backoff", "unseen preposition");
  return decide(r2.noun, r2.total, "R2");
}

std::vector<std::string> PPConfig::standard_voters() {
  return {"ngram-4", "para-1", "para-2", "para-3", "para-4", "para-5", "para-6", "pronoun-n1", "verb-be", "surface"};
}

std::vector<std::string> PPConfig::all_voters() {
  std::vector<std::string> out;
  for (int i = 1; i <= 4; ++i) out.push_back("ngram-" + std::to_string(i));
  for (int i = 1; i <= 6; ++i) out.push_back("para-" + std::to_string(i));
  for (const char* s : {"pronoun-n1", "verb-be", "of-rule", "surface", "backoff"}) out.emplace_back(s);
  return out;
}

PPConfig PPConfig::standard() {
  PPConfig c;
  c.voters = standard_voters();
  return c;
}

void PPConfig::validate() const {
  if (snippet_limit == 0) throw std::invalid_argument("snippet limit must be >= 1");
  const auto known = all_voters();
  for (const auto& v : voters)
    if (std::ranges::find(known, v) == known.end()) throw std::invalid_argument("unknown voter: " + v);
}

AttachmentDecision run_pp_voter(const std::string& voter, const PPQuad& q, const CountProvider& provider,
                                const MorphLexicon& lex, const PPConfig& config) {
  AttachmentDecision d;
  try {
    if (voter.starts_with("ngram-")) d = pp_ngram_decision(provider, q, std::stoi(voter.substr(6)), lex);
    else if (voter.starts_with("para-")) d = pp_paraphrase_decision(provider, q, std::stoi(voter.substr(5)), lex);
    else if (voter == "pronoun-n1") d = pp_heuristic(q, PPHeuristic::PronounN1);
    else if (voter == "verb-be") d = pp_heuristic(q, PPHeuristic::VerbBe);
    else if (voter == "of-rule") d = pp_heuristic(q, PPHeuristic::OfRule);
    else if (voter == "surface") d = pp_surface_decision(provider, q, lex, config.snippet_limit);
    else if (voter == "backoff")
      d = config.backoff ? backoff_predict(*config.backoff, normalize_quad(q, lex))
                         : abstain<Attachment>(voter, "no back-off model");
    else throw std::invalid_argument("unknown voter: " + voter);
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception& e) {
    d = abstain<Attachment>(voter, e.what());
  }
  d.model = voter;
  return d;
}

PPResult pp_pipeline(const PPQuad& q, const CountProvider& provider, const MorphLexicon& lex,
                     const PPConfig& config) {
  config.validate();
  PPResult r;
  r.quad = q;
  if (config.of_rule_first) {
    auto of = pp_heuristic(q, PPHeuristic::OfRule);
    if (!of.abstained()) {
      r.votes.push_back(of);
      r.final = of;
      r.final.diagnostic = "of-rule";
      return r;
    }
  }
  for (const auto& v : config.voters) r.votes.push_back(run_pp_voter(v, q, provider, lex, config));
  if (config.backoff && std::ranges::find(config.voters, "backoff") == config.voters.end())
    r.votes.push_back(run_pp_voter("backoff", q, provider, lex, config));
  r.final = majority_vote(r.votes, config.default_label);
  return r;
}

BackoffModel bootstrap_backoff(std::span<const PPQuad> quads, const CountProvider& provider, const MorphLexicon& lex,
                               const PPConfig& config) {
  PPConfig first = config;
  first.default_label.reset();
  first.backoff.reset();
  std::erase(first.voters, "backoff");
  std::vector<std::pair<PPQuad, Attachment>> train;
  for (const auto& q : quads) {
    if (q.p == "of") continue;
    const auto r = pp_pipeline(q, provider, lex, first);
    if (!r.final.abstained()) train.emplace_back(normalize_quad(q, lex), r.final.label);
  }
  return backoff_train(train);
}

}  // namespace nctk
