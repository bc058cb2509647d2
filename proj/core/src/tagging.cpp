#include "nctk/tagging.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "nctk/normalize.hpp"
#include "nctk/resources.hpp"

namespace nctk {

bool is_noun_tag(std::string_view t) { return t.starts_with("NN"); }
bool is_verb_tag(std::string_view t) { return t.starts_with("VB"); }
bool is_adjective_tag(std::string_view t) { return t.starts_with("JJ"); }
bool is_adverb_tag(std::string_view t) { return t.starts_with("RB"); }
bool is_modal_tag(std::string_view t) { return t == "MD"; }
bool is_punct_tag(std::string_view t) {
  if (t == "SYM") return true;
  return !t.empty() && std::ranges::none_of(t, [](unsigned char c) { return std::isalpha(c); });
}

TaggedSentence parse_tagged(std::string_view line) {
  TaggedSentence s;
  for (const auto& tok : split_whitespace(line)) {
    const auto us = tok.rfind('_');
    if (us == std::string::npos || us == 0 || us + 1 == tok.size())
      throw DataError("malformed tagged token '" + tok + "'");
    s.tokens.push_back({to_lower(tok.substr(0, us)), tok.substr(us + 1)});
  }
  std::vector<std::string> words;
  for (const auto& t : s.tokens) words.push_back(t.word);
  s.raw = join(words, " ");
  return s;
}

std::string to_tagged_text(const TaggedSentence& s) {
  std::string out;
  for (const auto& t : s.tokens) {
    if (!out.empty()) out += ' ';
    out += t.word + "_" + t.tag;
  }
  return out;
}

std::vector<TaggedSentence> tagged_sentences(const CorpusIndex& index) {
  if (!index.tagged()) throw DataError("tags required");
  std::vector<TaggedSentence> out;
  out.reserve(index.sentence_count());
  for (std::size_t i = 0; i < index.sentence_count(); ++i) {
    TaggedSentence s;
    s.raw = index.raw_sentence(i);
    const auto words = index.raw_tokens(i);
    const auto& tags = index.raw_tags(i);
    for (std::size_t k = 0; k < words.size() && k < tags.size(); ++k) s.tokens.push_back({to_lower(words[k]), tags[k]});
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

const std::map<std::string, std::string, std::less<>>& closed_class() {
  static const std::map<std::string, std::string, std::less<>> m = [] {
    std::map<std::string, std::string, std::less<>> c;
    for (const char* w : {"a", "an", "the", "this", "these", "those", "every", "each", "some", "any", "no", "all",
                          "both", "another", "either", "neither"})
      c[w] = "DT";
    for (const char* w : {"i", "you", "he", "she", "it", "we", "they", "me", "him", "us", "them"}) c[w] = "PRP";
    for (const char* w : {"my", "your", "his", "her", "its", "our", "their"}) c[w] = "PRP$";
    for (const char* w : {"of",     "in",      "on",     "at",     "by",      "for",   "with",  "from",
                          "about",  "into",    "over",   "under",  "between", "through", "during", "after",
                          "before", "without", "within", "among",  "against", "toward", "towards", "upon",
                          "via",    "near",    "than",   "as",     "since",   "until", "because", "if",
                          "whether", "while",  "although", "along", "across",  "behind", "beside", "onto"})
      c[w] = "IN";
    c["to"] = "TO";
    for (const char* w : {"and", "or", "but", "nor"}) c[w] = "CC";
    for (const char* w : {"can", "could", "may", "might", "must", "shall", "should", "will", "would"}) c[w] = "MD";
    c["which"] = "WDT";
    c["who"] = "WP";
    c["whom"] = "WP";
    c["is"] = "VBZ";
    c["are"] = "VBP";
    c["am"] = "VBP";
    c["was"] = "VBD";
    c["were"] = "VBD";
    c["be"] = "VB";
    c["been"] = "VBN";
    c["being"] = "VBG";
    c["has"] = "VBZ";
    c["have"] = "VBP";
    c["had"] = "VBD";
    c["does"] = "VBZ";
    c["do"] = "VBP";
    c["did"] = "VBD";
    for (const char* w : {"not", "very", "also", "often", "only", "never", "always", "just", "still", "even"})
      c[w] = "RB";
    c["off"] = "RP";
    return c;
  }();
  return m;
}

bool numeric(const std::string& w) {
  return std::ranges::any_of(w, [](unsigned char c) { return std::isdigit(c); }) &&
         std::ranges::all_of(w, [](unsigned char c) { return std::isdigit(c) || c == '.' || c == ',' || c == '/'; });
}

std::vector<std::string> tokenize(std::string_view raw) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) out.push_back(std::move(cur));
    cur.clear();
  };
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const char c = raw[i];
    const bool inner = (c == '-' || c == '\'') && !cur.empty() && i + 1 < raw.size() && is_word_byte(raw[i + 1]);
    if (is_word_byte(c) || inner) {
      cur += c;
    } else {
      flush();
      if (!std::isspace(static_cast<unsigned char>(c))) out.emplace_back(1, c);
    }
  }
  flush();
  return out;
}

}  // namespace

LexiconTagger LexiconTagger::from_tsv(std::string_view text) {
  LexiconTagger t;
  std::istringstream in{std::string(text)};
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    const auto tr = trim(line);
    if (tr.empty()) continue;
    const auto tab = tr.find('\t');
    if (tab == std::string_view::npos) throw DataError("tagger lexicon line " + std::to_string(line_no) + ": no tab");
    t.add(to_lower(trim(tr.substr(0, tab))), std::string(trim(tr.substr(tab + 1))));
  }
  return t;
}

LexiconTagger LexiconTagger::load(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw DataError("cannot open tagger lexicon: " + file.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_tsv(ss.str());
}

const LexiconTagger& LexiconTagger::bundled() {
  static const LexiconTagger t = [] {
    const auto f = data_file("tagger_lexicon.tsv");
    return std::filesystem::exists(f) ? load(f) : LexiconTagger{};
  }();
  return t;
}

std::string LexiconTagger::tag_word(const std::string& w, const std::string& prev, const MorphLexicon& lex) const {
  if (w.size() == 1 && !is_word_byte(w[0])) {
    if (w == "," || w == "." || w == ":" || w == "(" || w == ")") return w;
    if (w == ";" || w == "!" || w == "?") return w == ";" ? ":" : ".";
    return "SYM";
  }
  if (w == "that") return is_noun_tag(prev) ? "WDT" : "DT";
  if (auto it = closed_class().find(w); it != closed_class().end()) return it->second;
  if (numeric(w)) return "CD";
  if (auto it = lexicon_.find(w); it != lexicon_.end()) {
    const auto& t = it->second;
    if (t == "VB" && !(prev == "MD" || prev == "TO")) return prev == "DT" || prev == "JJ" ? "NN" : "VBP";
    return t;
  }
  if (prev == "MD" || prev == "TO") return "VB";
  if (w.size() > 4 && w.ends_with("ly")) return "RB";
  if (w.size() > 4 && w.ends_with("ing")) return "VBG";
  if (w.size() > 3 && w.ends_with("ed")) return is_verb_tag(prev) ? "VBN" : "VBD";
  if (w.size() > 2 && w.ends_with('s') && !w.ends_with("ss")) {
    const bool subject_before = is_noun_tag(prev) || prev == "PRP" || prev == "WDT" || prev == "WP";
    auto base = lexicon_.find(lex.verb_lemma(w));
    if (subject_before && base != lexicon_.end() && base->second == "VB") return "VBZ";
    return "NNS";
  }
  return "NN";
}

std::string LexiconTagger::lookup(std::string_view word) const {
  const auto w = to_lower(word);
  if (auto it = closed_class().find(w); it != closed_class().end()) return it->second;
  if (w == "that") return "DT";
  if (numeric(w)) return "CD";
  if (auto it = lexicon_.find(w); it != lexicon_.end()) return it->second;
  return {};
}

TaggedSentence LexiconTagger::tag(std::string_view raw, const MorphLexicon& lex) const {
  TaggedSentence s;
  s.raw = std::string(raw);
  std::string prev;
  for (const auto& tok : tokenize(raw)) {
    const auto w = to_lower(tok);
    auto t = tag_word(w, prev, lex);
    s.tokens.push_back({w, t});
    prev = t;
  }
  return s;
}

}  // namespace nctk
