#include "nctk/human_verbs.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "nctk/normalize.hpp"
#include "nctk/similarity.hpp"

namespace nctk {

namespace {

const std::set<std::string, std::less<>> kBe{"be", "am", "is", "are", "was", "were", "been", "being", "'s", "'re"};
const std::set<std::string, std::less<>> kHave{"have", "has", "had", "'ve", "'d"};
const std::set<std::string, std::less<>> kComplementizers{"that", "which", "who"};
const std::set<std::string, std::less<>> kRaising{"appear", "seem", "turn",    "happen", "tend",  "prove",
                                                  "expect", "suppose", "believe", "know", "say", "think",
                                                  "consider", "claim", "report", "turn out"};

bool is_be(std::string_view w) { return kBe.contains(w); }

std::vector<std::string> words_of(std::string_view phrase) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : phrase) {
    if (is_word_byte(c) || c == '\'') {
      cur += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    } else if (!cur.empty()) {
      out.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

bool adverb(const std::string& w, const LexiconTagger& tagger) {
  const auto t = tagger.lookup(w);
  if (is_adverb_tag(t) && w != "not") return true;
  if (w == "not") return true;
  return t.empty() && w.size() > 4 && w.ends_with("ly");
}

bool preposition(const std::string& w, const LexiconTagger& tagger) {
  const auto t = tagger.lookup(w);
  return t == "IN" || t == "TO" || t == "RP";
}

bool participle(const std::string& w, const MorphLexicon& lex, const LexiconTagger& tagger) {
  if (is_be(w) || kHave.contains(w)) return false;
  const auto t = tagger.lookup(w);
  if (t == "VBN") return true;
  if (t == "VBD" || t == "VBZ" || t == "VBP" || t == "VBG" || t == "VB") return false;
  if (w.ends_with("ed")) return true;
  if (w.ends_with('s') || w.ends_with("ing")) return false;
  return lex.known(w) && lex.verb_lemma(w) != w;
}

bool rejected_tag(std::string_view t) {
  return is_noun_tag(t) || is_adjective_tag(t) || t == "PRP" || t == "PRP$" || t == "CD" || t == "CC" ||
         t == "DT" || t == "WDT" || t == "WP";
}

}  // namespace

std::optional<std::string> normalize_human_verb(std::string_view phrase, const MorphLexicon& lex,
                                                const LexiconTagger& tagger,
                                                const std::vector<std::string>& targets) {
  std::set<std::string> target_forms;
  for (const auto& t : targets)
    for (const auto& f : lex.inflections(to_lower(t))) target_forms.insert(f);

  std::vector<std::string> w;
  for (auto& tok : words_of(phrase)) {
    if (target_forms.contains(tok) || kComplementizers.contains(tok)) continue;
    if (tagger.lookup(tok) == "DT") continue;
    if (adverb(tok, tagger)) continue;
    w.push_back(std::move(tok));
  }

  // "are caused by peeling" -> "are caused"
  if (w.size() >= 2 && w[w.size() - 2] == "by" && w.back().ends_with("ing")) w.resize(w.size() - 2);

  while (!w.empty() && is_modal_tag(tagger.lookup(w.front()))) w.erase(w.begin());

  // <raising verb> to be -> be
  for (std::size_t k = 1; k + 1 < w.size(); ++k) {
    if (w[k] != "to" || w[k + 1] != "be") continue;
    const bool raising = kRaising.contains(lex.verb_lemma(w[k - 1])) ||
                         (w[k - 1] == "out" && k >= 2 && lex.verb_lemma(w[k - 2]) == "turn");
    const std::size_t verb_at = w[k - 1] == "out" ? k - 2 : k - 1;
    const bool only_be_before = std::all_of(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(verb_at),
                                            [](const std::string& x) { return is_be(x); });
    if (raising && only_be_before) {
      w.erase(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k + 1));
      break;
    }
  }

  if (w.size() >= 2 && kHave.contains(w[0]) && !preposition(w[1], tagger) && !rejected_tag(tagger.lookup(w[1])))
    w.erase(w.begin());
  if (w.size() >= 2 && is_be(w[0]) && w[1].ends_with("ing") && w[1].size() > 4) w.erase(w.begin());

  if (w.empty()) return std::nullopt;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == "to") return std::nullopt;
  for (const auto& x : w)
    if (rejected_tag(tagger.lookup(x))) return std::nullopt;

  if (w.size() >= 2 && participle(w[0], lex, tagger) && preposition(w[1], tagger)) w.insert(w.begin(), "be");

  w[0] = is_be(w[0]) ? "be" : lex.verb_lemma(w[0]);
  return join(w, " ");
}

VerbCounts normalize_verb_counts(const VerbCounts& raw, const MorphLexicon& lex, const LexiconTagger& tagger) {
  VerbCounts out;
  for (const auto& [phrase, n] : raw)
    if (auto v = normalize_human_verb(phrase, lex, tagger)) out[*v] += n;
  return out;
}

double verb_cosine(const VerbCounts& a, const VerbCounts& b) {
  FeatureVector x, y;
  for (const auto& [v, n] : a) x[v] = static_cast<double>(n);
  for (const auto& [v, n] : b) y[v] = static_cast<double>(n);
  return cosine(x, y);
}

}  // namespace nctk
