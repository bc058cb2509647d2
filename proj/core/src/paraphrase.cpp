#include "nctk/paraphrase.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "nctk/normalize.hpp"

namespace nctk {

const ParaphraseInventory& ParaphraseInventory::standard() {
  static const ParaphraseInventory inv{
      {"about",     "across",      "after",      "against",   "all over",   "along",      "alongside",
       "amid",      "amidst",      "among",      "around",    "as",         "as to",      "aside",
       "at",        "before",      "behind",     "beside",    "besides",    "between",    "beyond",
       "by",        "close to",    "concerning", "considering", "down",     "due to",     "during",
       "except",    "except for",  "excluding",  "following", "for",        "from",       "in",
       "in addition to", "in front of", "including", "inside", "instead of", "into",    "like",
       "near",      "of",          "off",        "on",        "onto",       "other than", "out",
       "out of",    "outside",     "over",       "per",       "regarding",  "respecting", "similar to",
       "through",   "throughout",  "to",         "toward",    "towards",    "under",      "underneath",
       "unlike",    "until",       "up",         "upon",      "versus",     "via",        "with",
       "within",    "without"},
      {"associated with", "caused by", "contained in", "derived from", "focusing on", "found in", "involved in",
       "located at", "located in", "made of", "performed by", "preventing", "related to", "used by", "used in",
       "used for"},
      {"a", "an", "the", "all", "each", "every", "some", "his", "her", "their", "this", "these"},
      {"that", "which", "who"},
      {"are", "is", "was", "were"}};
  return inv;
}

ParaphraseInventory ParaphraseInventory::parse(std::string_view text) {
  ParaphraseInventory inv;
  std::vector<std::string>* section = nullptr;
  std::istringstream in{std::string(text)};
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto t = trim(line);
    if (t.empty()) continue;
    if (t.front() == '[') {
      const auto name = to_lower(t);
      if (name == "[prep]") section = &inv.prepositions;
      else if (name == "[verbal-prep]") section = &inv.verbal_prepositions;
      else if (name == "[det]") section = &inv.determiners;
      else if (name == "[compl]") section = &inv.complementizers;
      else if (name == "[be]") section = &inv.copulas;
      else throw DataError("inventory line " + std::to_string(line_no) + ": unknown section " + std::string(t));
      continue;
    }
    if (!section) throw DataError("inventory line " + std::to_string(line_no) + ": item outside a section");
    section->push_back(join(normalize_tokens(t), " "));
  }
  return inv;
}

ParaphraseInventory ParaphraseInventory::load(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw DataError("cannot open inventory: " + file.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::vector<std::string> ParaphraseInventory::all_prepositions() const {
  auto out = prepositions;
  out.insert(out.end(), verbal_prepositions.begin(), verbal_prepositions.end());
  return out;
}

namespace {

std::vector<std::string> agreeing_copulas(const std::vector<std::string>& copulas, Number n) {
  std::vector<std::string> out;
  for (const auto& c : copulas) {
    const bool singular = c == "is" || c == "was";
    const bool plural = c == "are" || c == "were";
    if ((n == Number::Singular && plural) || (n == Number::Plural && singular)) continue;
    out.push_back(c);
  }
  return out;
}

}  // namespace

ParaphrasePatterns bracketing_patterns(const NounTriple& t, const ParaphraseInventory& inv,
                                       const MorphLexicon& lex) {
  ParaphrasePatterns out;
  const auto prep = phrases(inv.all_prepositions());
  const auto det = optional(phrases(inv.determiners));
  const auto compl_ = phrases(inv.complementizers);
  const auto w1 = word(t.w1), w2 = word(t.w2);
  const auto w1i = any_of(lex.inflections(t.w1)), w2i = any_of(lex.inflections(t.w2));
  const bool have_prep = !prep.alts.empty();
  const bool have_compl = !compl_.alts.empty();

  // w3 forms grouped by number so the copula can agree
  std::vector<std::pair<PatternSlot, PatternSlot>> heads;  // (w3 forms, copulas)
  for (auto n : {Number::Singular, Number::Plural, Number::Unknown}) {
    std::vector<std::string> forms;
    for (const auto& f : lex.inflections(t.w3))
      if (lex.number(f) == n) forms.push_back(f);
    if (forms.empty()) continue;
    heads.emplace_back(any_of(forms), phrases(agreeing_copulas(inv.copulas, n)));
  }
  const auto w3i = any_of(lex.inflections(t.w3));

  if (have_prep) {
    out.left.push_back({w3i, prep, det, w1, w2i});
    out.right.push_back({w2, w3i, prep, det, w1i});
  }
  if (have_compl) {
    for (const auto& [w3, be] : heads) {
      if (be.alts.empty()) continue;
      out.left.push_back({w3, compl_, be, det, w1, w2i});
      out.right.push_back({w2, w3, compl_, be, det, w1i});
      if (have_prep) {
        out.left.push_back({w3, compl_, be, prep, det, w1, w2i});
        out.right.push_back({w2, w3, compl_, be, prep, det, w1i});
      }
    }
  }
  return out;
}

std::vector<std::string> instantiate(const Pattern& pattern) {
  std::vector<std::vector<std::string>> acc{{}};
  for (const auto& slot : pattern) {
    std::vector<std::vector<std::string>> next;
    for (const auto& prefix : acc) {
      for (const auto& alt : slot.alts) {
        auto p = prefix;
        p.insert(p.end(), alt.begin(), alt.end());
        next.push_back(std::move(p));
      }
    }
    acc = std::move(next);
  }
  std::vector<std::string> out;
  out.reserve(acc.size());
  for (const auto& a : acc)
    if (!a.empty()) out.push_back(join(a, " "));
  return out;
}

ParaphraseQueries generate_bracketing_queries(const NounTriple& t, const ParaphraseInventory& inv,
                                              const MorphLexicon& lex) {
  const auto patterns = bracketing_patterns(t, inv, lex);
  auto collect = [](const std::vector<Pattern>& ps) {
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (const auto& p : ps)
      for (auto& s : instantiate(p))
        if (seen.insert(s).second) out.push_back(std::move(s));
    return out;
  };
  return {collect(patterns.left), collect(patterns.right)};
}

BracketDecision paraphrase_decision(const CountProvider& p, const NounTriple& t, const ParaphraseInventory& inv,
                                    const MorphLexicon& lex) {
  const auto patterns = bracketing_patterns(t, inv, lex);
  QueryPair q;
  for (const auto& pat : patterns.left) {
    auto qs = pattern_queries(pat);
    q.left.insert(q.left.end(), qs.begin(), qs.end());
  }
  for (const auto& pat : patterns.right) {
    auto qs = pattern_queries(pat);
    q.right.insert(q.right.end(), qs.begin(), qs.end());
  }
  try {
    const auto l = count_queries(p, q.left);
    const auto r = count_queries(p, q.right);
    return compare_scores<Bracketing>(static_cast<double>(l), static_cast<double>(r), 0.0, "paraphrase");
  } catch (const ProviderError& e) {
    return abstain<Bracketing>("paraphrase", e.what());
  }
}

}  // namespace nctk
