#include "nctk/morphology.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "nctk/corpus_index.hpp"
#include "nctk/normalize.hpp"
#include "nctk/resources.hpp"

namespace nctk {

namespace {

bool ends_with(std::string_view s, std::string_view suf) {
  return s.size() >= suf.size() && s.substr(s.size() - suf.size()) == suf;
}

bool is_vowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }

bool is_consonant(char c) { return c >= 'a' && c <= 'z' && !is_vowel(c); }

// running -> run, stopped -> stop; keeps ll/ss/zz/ff (falling -> fall)
std::string undouble(std::string stem) {
  const auto n = stem.size();
  if (n >= 3 && stem[n - 1] == stem[n - 2] && is_consonant(stem[n - 1])) {
    const char c = stem[n - 1];
    if (c != 'l' && c != 's' && c != 'z' && c != 'f') stem.pop_back();
  }
  return stem;
}

// caus -> cause, giv -> give, us -> use
std::string restore_e(std::string stem) {
  const auto n = stem.size();
  if (n >= 2) {
    const char last = stem[n - 1];
    const bool soft = last == 'v' || last == 'z' || last == 'c' || last == 'u' || last == 'g';
    const bool vowel_s = last == 's' && is_vowel(stem[n - 2]);
    if (soft || vowel_s) stem.push_back('e');
  }
  return stem;
}

std::vector<std::string> sorted_unique(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

std::string fallback_plural(std::string_view noun) {
  std::string w(noun);
  if (w.empty()) return w;
  if (ends_with(w, "s") || ends_with(w, "x") || ends_with(w, "z") || ends_with(w, "ch") || ends_with(w, "sh"))
    return w + "es";
  if (w.size() >= 2 && w.back() == 'y' && is_consonant(w[w.size() - 2])) return w.substr(0, w.size() - 1) + "ies";
  return w + "s";
}

std::string fallback_noun_lemma(std::string_view word) {
  std::string w(word);
  if (w.size() > 4 && ends_with(w, "ies")) return w.substr(0, w.size() - 3) + "y";
  if (w.size() > 4 && (ends_with(w, "xes") || ends_with(w, "zes") || ends_with(w, "ches") ||
                       ends_with(w, "shes") || ends_with(w, "sses")))
    return w.substr(0, w.size() - 2);
  if (w.size() > 3 && w.back() == 's' && !ends_with(w, "ss") && !ends_with(w, "us") && !ends_with(w, "is"))
    return w.substr(0, w.size() - 1);
  return w;
}

std::string fallback_verb_lemma(std::string_view word) {
  std::string w(word);
  if (w.size() > 5 && ends_with(w, "ing")) return restore_e(undouble(w.substr(0, w.size() - 3)));
  if (w.size() > 4 && ends_with(w, "ied")) return w.substr(0, w.size() - 3) + "y";
  if (w.size() > 4 && ends_with(w, "ed")) return restore_e(undouble(w.substr(0, w.size() - 2)));
  return fallback_noun_lemma(w);
}

std::vector<std::string> regular_verb_forms(std::string_view lemma) {
  std::string l(lemma);
  std::vector<std::string> out{l, fallback_plural(l)};
  if (ends_with(l, "e")) {
    out.push_back(l + "d");
    out.push_back(l.substr(0, l.size() - 1) + "ing");
  } else if (l.size() >= 2 && l.back() == 'y' && is_consonant(l[l.size() - 2])) {
    out.push_back(l.substr(0, l.size() - 1) + "ied");
    out.push_back(l + "ing");
  } else {
    out.push_back(l + "ed");
    out.push_back(l + "ing");
  }
  return sorted_unique(std::move(out));
}

void MorphLexicon::add(const std::string& lemma_in, const std::vector<std::string>& forms) {
  const auto lemma = to_lower(trim(lemma_in));
  if (lemma.empty()) return;
  auto& paradigm = paradigms_[lemma];
  paradigm.push_back(lemma);
  // a lemma always maps to itself, even if an earlier entry claimed it as a form
  lemma_of_[lemma] = lemma;
  for (const auto& f : forms) {
    auto form = to_lower(trim(f));
    if (form.empty()) continue;
    paradigm.push_back(form);
    if (!paradigms_.contains(form)) lemma_of_.try_emplace(form, lemma);
  }
  paradigm = sorted_unique(std::move(paradigm));
}

MorphLexicon MorphLexicon::from_tsv(std::string_view text, std::string source) {
  MorphLexicon lex;
  lex.source_ = std::move(source);
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto tab = t.find('\t');
    if (tab == std::string_view::npos)
      throw DataError("lexicon line " + std::to_string(line_no) + ": expected lemma<TAB>forms");
    std::vector<std::string> forms;
    std::string_view rest = t.substr(tab + 1);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      forms.emplace_back(trim(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    lex.add(std::string(t.substr(0, tab)), forms);
  }
  return lex;
}

MorphLexicon MorphLexicon::load(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw DataError("cannot open lexicon: " + file.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_tsv(ss.str(), file.string());
}

const MorphLexicon& MorphLexicon::bundled() {
  static const MorphLexicon lex = [] {
    const auto p = data_file("lexicon.tsv");
    return std::filesystem::exists(p) ? load(p) : MorphLexicon{};
  }();
  return lex;
}

bool MorphLexicon::known(std::string_view word) const { return lemma_of_.contains(to_lower(word)); }

std::string MorphLexicon::lemma(std::string_view word) const {
  const auto w = to_lower(word);
  if (auto it = lemma_of_.find(w); it != lemma_of_.end()) return it->second;
  return fallback_noun_lemma(w);
}

std::string MorphLexicon::verb_lemma(std::string_view word) const {
  const auto w = to_lower(word);
  if (auto it = lemma_of_.find(w); it != lemma_of_.end()) return it->second;
  return fallback_verb_lemma(w);
}

std::vector<std::string> MorphLexicon::inflections(std::string_view word) const {
  const auto w = to_lower(word);
  if (auto it = lemma_of_.find(w); it != lemma_of_.end()) {
    auto forms = paradigms_.at(it->second);
    forms.push_back(w);
    return sorted_unique(std::move(forms));
  }
  const auto l = fallback_noun_lemma(w);
  return sorted_unique({w, l, fallback_plural(l)});
}

std::vector<std::string> MorphLexicon::verb_inflections(std::string_view word) const {
  const auto w = to_lower(word);
  if (auto it = lemma_of_.find(w); it != lemma_of_.end()) {
    auto forms = paradigms_.at(it->second);
    forms.push_back(w);
    return sorted_unique(std::move(forms));
  }
  auto forms = regular_verb_forms(fallback_verb_lemma(w));
  forms.push_back(w);
  return sorted_unique(std::move(forms));
}

Number MorphLexicon::number(std::string_view word) const {
  const auto w = to_lower(word);
  if (w.empty()) return Number::Unknown;
  if (!known(w)) {
    bool alpha = true, all_upper = word.size() > 1;
    for (char c : word) {
      const auto u = static_cast<unsigned char>(c);
      if (!std::isalpha(u)) alpha = false;
      if (!std::isupper(u)) all_upper = false;
    }
    if (!alpha || all_upper) return Number::Unknown;
  }
  return lemma(w) == w ? Number::Singular : Number::Plural;
}

std::string MorphLexicon::plural(std::string_view word) const {
  const auto l = lemma(word);
  if (auto it = paradigms_.find(l); it != paradigms_.end()) {
    for (const auto& f : it->second)
      if (f != l && lemma_of_.at(f) == l && fallback_noun_lemma(f) != f) return f;
    for (const auto& f : it->second)
      if (f != l && lemma_of_.at(f) == l) return f;
  }
  return fallback_plural(l);
}

}  // namespace nctk
