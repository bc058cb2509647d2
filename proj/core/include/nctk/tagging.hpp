#pragma once

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nctk/corpus_index.hpp"
#include "nctk/morphology.hpp"

namespace nctk {

// Penn Treebank tags. Punctuation tokens carry their own text as tag
// ("," "." ":" "(" ")") or "SYM".
struct TaggedToken {
  std::string word;  // lowercased
  std::string tag;
};

struct TaggedSentence {
  std::vector<TaggedToken> tokens;
  std::string raw;
};

bool is_noun_tag(std::string_view t);
bool is_verb_tag(std::string_view t);
bool is_adjective_tag(std::string_view t);
bool is_adverb_tag(std::string_view t);
bool is_punct_tag(std::string_view t);
bool is_modal_tag(std::string_view t);

// "word_TAG word_TAG ..." (split at the last underscore). Throws DataError on
// a token without a tag.
TaggedSentence parse_tagged(std::string_view line);
std::string to_tagged_text(const TaggedSentence& s);

// Tagged sentences of an index built with tags; throws DataError("tags
// required") otherwise.
std::vector<TaggedSentence> tagged_sentences(const CorpusIndex& index);

// Tiny lexicon tagger: closed-class words, a word->tag lexicon, suffix rules
// and a noun default. Meant for fixtures, not for real text.
class LexiconTagger {
 public:
  LexiconTagger() = default;
  // TSV `word<TAB>TAG`, '#' comments.
  static LexiconTagger from_tsv(std::string_view text);
  static LexiconTagger load(const std::filesystem::path& file);
  // Bundled tagger lexicon; closed classes only when the file is missing.
  static const LexiconTagger& bundled();

  void add(const std::string& word, const std::string& tag) { lexicon_[word] = tag; }
  TaggedSentence tag(std::string_view raw, const MorphLexicon& lex) const;
  // Closed-class or lexicon tag of a single word, context-free; "" if unknown.
  std::string lookup(std::string_view word) const;

 private:
  std::string tag_word(const std::string& word, const std::string& prev_tag, const MorphLexicon& lex) const;
  std::map<std::string, std::string> lexicon_;
};

}  // namespace nctk
