#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace nctk {

enum class Number { Singular, Plural, Unknown };

// Regular-morphology fallbacks used when a word has no lexicon entry.
std::string fallback_plural(std::string_view noun);
// Strips plural endings only (-s, -es, -ies); idempotent.
std::string fallback_noun_lemma(std::string_view word);
// Also strips -ing / -ed, undoubling final consonants (running -> run).
std::string fallback_verb_lemma(std::string_view word);
// Regular paradigm of a verb lemma: lemma, 3sg, past, -ing.
std::vector<std::string> regular_verb_forms(std::string_view lemma);

// lemma -> inflected forms, inflected form -> lemma. Lookups lowercase their
// argument. Forms claimed by several lemmas resolve to the first loaded.
class MorphLexicon {
 public:
  MorphLexicon() = default;
  // TSV `lemma<TAB>form1,form2,...`; blank lines and '#' comments ignored.
  static MorphLexicon load(const std::filesystem::path& file);
  static MorphLexicon from_tsv(std::string_view text, std::string source = "<memory>");
  // Bundled lexicon from the installed data directory; empty when not found.
  static const MorphLexicon& bundled();

  void add(const std::string& lemma, const std::vector<std::string>& forms);

  // Word plus its paradigm (lexicon) or {word, lemma, plural(lemma)}. Sorted.
  std::vector<std::string> inflections(std::string_view word) const;
  // Verb paradigm: lexicon forms or the regular verb forms of verb_lemma.
  std::vector<std::string> verb_inflections(std::string_view word) const;
  // Noun-oriented lemma: lexicon, else fallback_noun_lemma.
  std::string lemma(std::string_view word) const;
  // Verb-oriented lemma: lexicon, else fallback_verb_lemma.
  std::string verb_lemma(std::string_view word) const;

  bool known(std::string_view word) const;
  // Plural iff the noun lemma differs from the form. Unknown for words that
  // are neither in the lexicon nor plain lowercase alphabetic.
  Number number(std::string_view word) const;
  std::string plural(std::string_view word) const;

  const std::string& source() const { return source_; }
  std::size_t size() const { return paradigms_.size(); }

 private:
  std::map<std::string, std::vector<std::string>> paradigms_;
  std::map<std::string, std::string> lemma_of_;
  std::string source_;
};

}  // namespace nctk
