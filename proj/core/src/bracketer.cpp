#include "nctk/bracketer.hpp"

#include <algorithm>
#include <stdexcept>

namespace nctk {

namespace {

std::optional<AssocKind> assoc_kind(std::string_view s) {
  if (s == "freq") return AssocKind::Freq;
  if (s == "prob") return AssocKind::Prob;
  if (s == "pmi") return AssocKind::Pmi;
  if (s == "chi2") return AssocKind::Chi2;
  return std::nullopt;
}

struct Parsed {
  enum class Kind { Assoc, Concat, Wildcard, Misc, Paraphrase, Surface } kind;
  AssocKind assoc = AssocKind::Freq;
  BracketModel model = BracketModel::Adjacency;
  ConcatVariant concat = ConcatVariant::Adjacency;
  WildcardVariant wildcard = WildcardVariant::Adjacency;
  int stars = 1;
  MiscKind misc = MiscKind::Genitive;
};

std::optional<Parsed> parse_voter(const std::string& v) {
  Parsed p{};
  if (v == "paraphrase") return Parsed{Parsed::Kind::Paraphrase};
  if (v == "surface") return Parsed{Parsed::Kind::Surface};
  for (auto k : {MiscKind::Genitive, MiscKind::Abbreviation, MiscKind::Reorder, MiscKind::InflectionVariability,
                 MiscKind::Swap}) {
    if (v == to_string(k)) {
      p.kind = Parsed::Kind::Misc;
      p.misc = k;
      return p;
    }
  }
  for (auto c : {ConcatVariant::Adjacency, ConcatVariant::Dependency, ConcatVariant::Triple}) {
    if (v == to_string(c)) {
      p.kind = Parsed::Kind::Concat;
      p.concat = c;
      return p;
    }
  }
  for (auto w : {WildcardVariant::Adjacency, WildcardVariant::Dependency, WildcardVariant::ReversedAdjacency,
                 WildcardVariant::ReversedDependency}) {
    for (int s = 1; s <= 3; ++s) {
      if (v == std::string(to_string(w)) + "-" + std::to_string(s)) {
        p.kind = Parsed::Kind::Wildcard;
        p.wildcard = w;
        p.stars = s;
        return p;
      }
    }
  }
  const auto dash = v.find('-');
  if (dash == std::string::npos) return std::nullopt;
  const auto kind = assoc_kind(std::string_view(v).substr(0, dash));
  const auto model = v.substr(dash + 1);
  if (!kind || (model != "adjacency" && model != "dependency")) return std::nullopt;
  p.kind = Parsed::Kind::Assoc;
  p.assoc = *kind;
  p.model = model == "adjacency" ? BracketModel::Adjacency : BracketModel::Dependency;
  return p;
}

}  // namespace

std::vector<std::string> VoteConfig::standard_voters() {
  return {"chi2-adjacency", "chi2-dependency", "concat-dependency", "concat-triple",
          "genitive",       "abbreviation",    "paraphrase",        "surface"};
}

std::vector<std::string> VoteConfig::all_voters() {
  std::vector<std::string> out;
  for (const char* k : {"freq", "prob", "pmi", "chi2"})
    for (const char* m : {"adjacency", "dependency"}) out.push_back(std::string(k) + "-" + m);
  for (auto c : {ConcatVariant::Adjacency, ConcatVariant::Dependency, ConcatVariant::Triple})
    out.emplace_back(to_string(c));
  for (auto w : {WildcardVariant::Adjacency, WildcardVariant::Dependency, WildcardVariant::ReversedAdjacency,
                 WildcardVariant::ReversedDependency})
    for (int s = 1; s <= 3; ++s) out.push_back(std::string(to_string(w)) + "-" + std::to_string(s));
  for (auto k : {MiscKind::Genitive, MiscKind::Abbreviation, MiscKind::Reorder, MiscKind::InflectionVariability,
                 MiscKind::Swap})
    out.emplace_back(to_string(k));
  out.push_back("paraphrase");
  out.push_back("surface");
  return out;
}

VoteConfig VoteConfig::preset(std::string_view name) {
  VoteConfig c;
  c.voters = standard_voters();
  if (name == "lauer") c.default_label = Bracketing::Left;
  else if (name == "biomedical") c.default_label = Bracketing::Right;
  else if (name == "stability") c.margin = 5.0;
  else throw std::invalid_argument("unknown preset: " + std::string(name));
  return c;
}

void VoteConfig::validate() const {
  if (margin < 0) throw std::invalid_argument("negative margin");
  if (snippet_limit == 0) throw std::invalid_argument("snippet limit must be >= 1");
  for (const auto& v : voters)
    if (!parse_voter(v)) throw std::invalid_argument("unknown voter: " + v);
}

BracketDecision run_bracket_voter(const std::string& voter, const NounTriple& t, const CountProvider& p,
                                  const MorphLexicon& lex, const ParaphraseInventory& inv, const VoteConfig& config) {
  const auto parsed = parse_voter(voter);
  if (!parsed) throw std::invalid_argument("unknown voter: " + voter);
  BracketDecision d;
  try {
    switch (parsed->kind) {
      case Parsed::Kind::Assoc:
        d = assoc_decision(parsed->model, parsed->assoc, p, lex, t, config.margin);
        break;
      case Parsed::Kind::Concat:
        d = concatenation_decision(p, t, parsed->concat, lex);
        break;
      case Parsed::Kind::Wildcard:
        d = wildcard_decision(p, t, parsed->wildcard, parsed->stars, lex);
        break;
      case Parsed::Kind::Misc:
        d = misc_decision(parsed->misc, p, t, lex);
        break;
      case Parsed::Kind::Paraphrase:
        d = paraphrase_decision(p, t, inv, lex);
        break;
      case Parsed::Kind::Surface:
        d = surface_decision(p, t, lex, config.snippet_limit);
        break;
    }
  } catch (const std::exception& e) {
    d = abstain<Bracketing>(voter, e.what());
  }
  d.model = voter;
  return d;
}

BracketResult bracket(const NounTriple& t, const CountProvider& p, const MorphLexicon& lex,
                      const ParaphraseInventory& inv, const VoteConfig& config) {
  config.validate();
  BracketResult r;
  r.triple = t;
  for (const auto& v : config.voters) r.votes.push_back(run_bracket_voter(v, t, p, lex, inv, config));
  r.final = majority_vote(r.votes, config.default_label);
  return r;
}

}  // namespace nctk
