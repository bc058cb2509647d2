#include "nctk/pair_features.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "nctk/normalize.hpp"

namespace nctk {

std::string_view to_string(FeatureKind k) {
  switch (k) {
    case FeatureKind::Verb: return "V";
    case FeatureKind::Preposition: return "P";
    default: return "C";
  }
}

std::string_view to_string(Direction d) { return d == Direction::Forward ? "1->2" : "2->1"; }

std::optional<FeatureKind> parse_feature_kind(std::string_view s) {
  if (s == "V" || s == "v") return FeatureKind::Verb;
  if (s == "P" || s == "p") return FeatureKind::Preposition;
  if (s == "C" || s == "c") return FeatureKind::Coordination;
  return std::nullopt;
}

std::optional<Direction> parse_direction(std::string_view s) {
  if (s == "1->2" || s == "1→2") return Direction::Forward;
  if (s == "2->1" || s == "2→1") return Direction::Backward;
  return std::nullopt;
}

std::string PairFeature::key() const {
  return std::string(to_string(kind)) + ":" + lexeme + ":" + std::string(to_string(direction));
}

FeatureVector to_feature_vector(const PairFeatureVector& v) {
  FeatureVector out;
  for (const auto& [f, n] : v) out[f.key()] = static_cast<double>(n);
  return out;
}

KindMask KindMask::parse(std::string_view s) {
  KindMask m{false, false, false};
  for (char c : s) {
    switch (c) {
      case 'v': case 'V': m.verb = true; break;
      case 'p': case 'P': m.preposition = true; break;
      case 'c': case 'C': m.coordination = true; break;
      case '+': case ' ': break;
      default: throw std::invalid_argument("feature kinds: expected letters v, p, c: " + std::string(s));
    }
  }
  return m;
}

bool KindMask::allows(FeatureKind k) const {
  switch (k) {
    case FeatureKind::Verb: return verb;
    case FeatureKind::Preposition: return preposition;
    default: return coordination;
  }
}

PairFeatureVector filter_kinds(const PairFeatureVector& v, KindMask mask) {
  PairFeatureVector out;
  for (const auto& [f, n] : v)
    if (mask.allows(f.kind)) out.emplace(f, n);
  return out;
}

namespace {

using Tokens = std::vector<TaggedToken>;

bool is_be(const std::string& w) {
  return w == "be" || w == "is" || w == "are" || w == "am" || w == "was" || w == "were" || w == "been" ||
         w == "being";
}
bool is_have(const std::string& w) { return w == "have" || w == "has" || w == "had" || w == "having"; }
bool is_do(const std::string& w) { return w == "do" || w == "does" || w == "did"; }
bool is_prep_tag(const std::string& t) { return t == "IN" || t == "TO"; }
bool is_wh(const TaggedToken& t) {
  return t.tag == "WDT" || t.tag == "WP" || t.word == "that" || t.word == "which" || t.word == "who";
}

struct NounMatcher {
  std::set<std::string> forms;
  std::string lemma;
  const MorphLexicon* lex;

  NounMatcher(const std::string& noun, const MorphLexicon& l) : lemma(l.lemma(to_lower(noun))), lex(&l) {
    for (auto& f : l.inflections(to_lower(noun))) forms.insert(f);
  }
  bool operator()(const TaggedToken& t) const {
    return is_noun_tag(t.tag) && (forms.contains(t.word) || lex->lemma(t.word) == lemma);
  }
};

bool is_head(const Tokens& s, std::size_t i) {
  return is_noun_tag(s[i].tag) && (i + 1 == s.size() || !is_noun_tag(s[i + 1].tag));
}

// Determiners, adjectives, numbers, participles and the nouns of the
// target's own run, from `from` to `to` (exclusive).
bool premodifiers_only(const Tokens& s, std::size_t from, std::size_t to) {
  bool in_run = false;
  for (std::size_t k = from; k < to; ++k) {
    const auto& t = s[k].tag;
    if (is_noun_tag(t)) {
      in_run = true;
      continue;
    }
    if (in_run) return false;  // a noun run that ended before the target
    const bool ok = t == "DT" || t == "PDT" || t == "PRP$" || is_adjective_tag(t) || t == "CD" || t == "POS" ||
                    t == "VBN" || t == "VBG";
    if (!ok) return false;
  }
  return true;
}

struct VerbGroup {
  std::size_t end = 0;
  std::string lexeme;
};

// Modals and auxiliaries are dropped; a be auxiliary before a past
// participle is kept ("be chaired"); the main verb is lemmatized.
std::optional<VerbGroup> verb_group(const Tokens& s, std::size_t k, std::size_t limit, const MorphLexicon& lex) {
  std::vector<const TaggedToken*> verbs;
  bool aux_open = false;
  std::size_t i = k;
  for (; i < limit; ++i) {
    const auto& t = s[i];
    if (is_modal_tag(t.tag)) {
      if (!verbs.empty() && !aux_open) break;
      aux_open = true;
      continue;
    }
    if (is_adverb_tag(t.tag)) {
      if (verbs.empty() && !aux_open) break;
      continue;
    }
    if (!is_verb_tag(t.tag)) break;
    if (!verbs.empty() && !aux_open) break;
    verbs.push_back(&t);
    aux_open = is_be(t.word) || is_have(t.word) || is_do(t.word);
  }
  if (verbs.empty()) return std::nullopt;
  const auto& main = *verbs.back();
  bool passive = false;
  if (main.tag == "VBN")
    for (std::size_t v = 0; v + 1 < verbs.size(); ++v)
      if (is_be(verbs[v]->word)) passive = true;
  VerbGroup g;
  g.end = i;
  if (passive) g.lexeme = "be " + main.word;
  else if (is_be(main.word)) g.lexeme = "be";
  else g.lexeme = lex.verb_lemma(main.word);
  return g;
}

// Feature for the material strictly between heads at i and j.
std::optional<std::pair<std::string, FeatureKind>> link(const Tokens& s, std::size_t i, std::size_t j,
                                                        const MorphLexicon& lex) {
  std::size_t k = i + 1;
  if (k >= j) return std::nullopt;
  if (is_prep_tag(s[k].tag) && s[k].word != "that" && premodifiers_only(s, k + 1, j))
    return std::pair{s[k].word, FeatureKind::Preposition};
  if (s[k].tag == "CC" && premodifiers_only(s, k + 1, j)) return std::pair{s[k].word, FeatureKind::Coordination};
  if (is_wh(s[k])) ++k;
  auto g = verb_group(s, k, j, lex);
  if (!g) return std::nullopt;
  std::string lexeme = g->lexeme;
  k = g->end;
  if (k < j && s[k].tag == "RP") lexeme += " " + s[k++].word;
  if (k < j && is_prep_tag(s[k].tag)) lexeme += " " + s[k++].word;
  if (!premodifiers_only(s, k, j)) return std::nullopt;
  return std::pair{lexeme, FeatureKind::Verb};
}

}  // namespace

PairFeatureVector extract_pair_features(std::span<const TaggedSentence> sentences, const std::string& noun1,
                                        const std::string& noun2, const MorphLexicon& lex) {
  const NounMatcher m1(noun1, lex), m2(noun2, lex);
  PairFeatureVector out;
  for (const auto& sent : sentences) {
    const auto& s = sent.tokens;
    // 1 = noun1 head, 2 = noun2 head
    std::vector<std::pair<std::size_t, int>> heads;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (!is_head(s, i)) continue;
      const bool a = m1(s[i]), b = m2(s[i]);
      if (a && b) continue;
      if (a) heads.emplace_back(i, 1);
      else if (b) heads.emplace_back(i, 2);
    }
    for (std::size_t h = 0; h + 1 < heads.size(); ++h) {
      const auto [i, wi] = heads[h];
      const auto [j, wj] = heads[h + 1];
      if (wi == wj) continue;
      if (auto f = link(s, i, j, lex))
        ++out[PairFeature{f->first, f->second, wi == 1 ? Direction::Forward : Direction::Backward}];
    }
  }
  return out;
}

PairFeatureVector extract_pair_features(const CorpusIndex& index, const std::string& noun1, const std::string& noun2,
                                        const MorphLexicon& lex) {
  const auto sentences = tagged_sentences(index);
  return extract_pair_features(sentences, noun1, noun2, lex);
}

std::map<std::string, std::uint64_t> extract_paraphrase_verbs(std::span<const TaggedSentence> sentences,
                                                              const std::string& modifier, const std::string& head,
                                                              const MorphLexicon& lex) {
  const NounMatcher mod(modifier, lex), hd(head, lex);
  std::map<std::string, std::uint64_t> out;
  for (const auto& sent : sentences) {
    const auto& s = sent.tokens;
    for (std::size_t i = 0; i + 2 < s.size(); ++i) {
      if (!hd(s[i]) || !is_head(s, i)) continue;
      const auto& that = s[i + 1].word;
      if (that != "that" && that != "which" && that != "who") continue;
      const std::size_t start = i + 2;
      for (std::size_t j = start + 1; j < s.size() && j - start <= 8; ++j) {
        if (!mod(s[j]) || !is_head(s, j)) continue;
        auto g = verb_group(s, start, j, lex);
        if (!g) break;
        std::string lexeme = g->lexeme;
        std::size_t k = g->end;
        // adjectives and participles may sit between verb and preposition
        while (k < j && (is_adjective_tag(s[k].tag) || s[k].tag == "VBN" || s[k].tag == "VBG")) ++k;
        if (k < j && s[k].tag == "RP") lexeme += " " + s[k++].word;
        if (k < j && is_prep_tag(s[k].tag)) lexeme += " " + s[k++].word;
        if (premodifiers_only(s, k, j)) {
          // a second finite verb means a second verb phrase
          bool extra_verb = false;
          for (std::size_t x = g->end; x < j; ++x)
            if (is_verb_tag(s[x].tag) && s[x].tag != "VBN" && s[x].tag != "VBG") extra_verb = true;
          if (!extra_verb) ++out[lexeme];
        }
        break;
      }
    }
  }
  return out;
}

std::map<std::string, std::uint64_t> extract_paraphrase_verbs(const CorpusIndex& index, const std::string& modifier,
                                                              const std::string& head, const MorphLexicon& lex) {
  const auto sentences = tagged_sentences(index);
  return extract_paraphrase_verbs(sentences, modifier, head, lex);
}

std::string pair_features_tsv(const std::string& noun1, const std::string& noun2, const PairFeatureVector& v) {
  std::vector<std::pair<PairFeature, std::uint64_t>> rows(v.begin(), v.end());
  std::ranges::stable_sort(rows, [](const auto& a, const auto& b) { return a.second > b.second; });
  std::ostringstream out;
  for (const auto& [f, n] : rows)
    out << noun1 << '\t' << noun2 << '\t' << f.lexeme << '\t' << to_string(f.kind) << '\t' << to_string(f.direction)
        << '\t' << n << '\n';
  return out.str();
}

const PairFeatureVector& PairFeatureSource::features(const std::string& noun1, const std::string& noun2) {
  const auto key = std::pair{to_lower(noun1), to_lower(noun2)};
  auto it = cache_.find(key);
  if (it == cache_.end()) it = cache_.emplace(key, extract_pair_features(sentences_, key.first, key.second, lex_)).first;
  return it->second;
}

}  // namespace nctk
