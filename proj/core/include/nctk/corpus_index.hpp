#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace nctk {

// Bad input data (corpus, dataset, lexicon, cache file).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A count provider could not answer (cache miss on replay, no snippets...).
class ProviderError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Alternatives accepted at one phrase position (typically inflections).
using Slot = std::vector<std::string>;
using Phrase = std::vector<Slot>;

inline constexpr int kMaxGap = 8;

struct GapRange {
  int min = 1;
  int max = 1;
};

// An exact-phrase query, optionally split by a wildcard gap:
// `phrase` *{min,max} `right`. Tokens must already be normalized.
struct CountQuery {
  Phrase phrase;
  std::optional<GapRange> gap;
  Phrase right;

  static CountQuery exact(Phrase p);
  static CountQuery with_gap(Phrase left, int min_gap, int max_gap, Phrase right);

  // Throws std::invalid_argument when empty or the gap is out of [0, 8].
  void validate() const;

  // "a|b c *{1,3} d": alternatives sorted and joined by '|', positions by ' '.
  std::string canonical() const;
};

// One single-alternative slot per token.
Phrase literal(const std::vector<std::string>& tokens);
// Normalizes free text ("Health-care reform") into a literal phrase.
Phrase literal_text(std::string_view text);

// Anything that can answer n-gram counts: a local index, a cache replay, a
// table of reported counts.
class CountProvider {
 public:
  virtual ~CountProvider() = default;
  virtual std::uint64_t count(const CountQuery& q) const = 0;
  virtual std::uint64_t total_ngrams() const = 0;
  // Raw sentences matching `q`, in corpus order. Providers without a text
  // layer throw ProviderError.
  virtual std::vector<std::string> snippets(const CountQuery& q, std::size_t limit) const;
  virtual std::string name() const { return "provider"; }
};

struct IngestConfig {
  bool tagged = false;

  // Stable FNV-1a hash of the options, stored as provenance.
  std::string hash() const;
};

struct Provenance {
  std::string source;
  std::string config_hash;
};

class CorpusIndex final : public CountProvider {
 public:
  static constexpr std::uint8_t kFormatVersion = 1;

  static CorpusIndex build(const std::filesystem::path& corpus_file, const IngestConfig& config);
  static CorpusIndex from_lines(std::span<const std::string> lines, const IngestConfig& config,
                                std::string source = "<memory>");

  static CorpusIndex load(const std::filesystem::path& index_file);
  void save(const std::filesystem::path& index_file) const;
  std::string serialize() const;
  static CorpusIndex deserialize(std::string_view bytes);

  std::uint64_t count_phrase(const Phrase& phrase) const;
  std::uint64_t count_gap(const Phrase& left, const Phrase& right, int min_gap, int max_gap) const;
  std::vector<std::string> fetch_snippets(const CountQuery& q, std::size_t limit) const;

  std::uint64_t count(const CountQuery& q) const override;
  std::uint64_t total_ngrams() const override { return total_tokens_; }
  std::vector<std::string> snippets(const CountQuery& q, std::size_t limit) const override {
    return fetch_snippets(q, limit);
  }
  std::string name() const override { return "index:" + provenance_.source; }

  std::size_t sentence_count() const { return sentences_.size(); }
  const std::string& raw_sentence(std::size_t i) const { return sentences_.at(i).raw; }
  std::vector<std::string> normalized_tokens(std::size_t i) const;
  std::pair<std::size_t, std::size_t> raw_span(std::size_t sentence, std::size_t token) const;
  bool tagged() const { return tagged_; }
  // Whitespace tokens of the raw layer and, for tagged corpora, their tags.
  std::vector<std::string> raw_tokens(std::size_t i) const;
  const std::vector<std::string>& raw_tags(std::size_t i) const { return sentences_.at(i).raw_tags; }
  // Tags aligned with normalized_tokens(i); empty for untagged corpora.
  std::vector<std::string> normalized_tags(std::size_t i) const;
  const Provenance& provenance() const { return provenance_; }

 private:
  struct Sentence {
    std::string raw;
    std::vector<std::uint32_t> tokens;
    std::vector<std::uint32_t> span_begin;
    std::vector<std::uint32_t> span_end;
    std::vector<std::string> raw_tags;
  };
  struct Posting {
    std::uint32_t sentence;
    std::uint32_t position;
  };

  CorpusIndex() = default;
  void add_sentence(std::string raw, std::vector<std::string> raw_tags);
  void finalize();
  std::uint32_t intern(const std::string& token);
  std::vector<std::uint32_t> slot_ids(const Slot& slot) const;
  // Start positions of every match of `phrase`, per sentence, in corpus order.
  std::vector<Posting> match_starts(const Phrase& phrase) const;
  bool matches_at(const Sentence& s, std::size_t start, const std::vector<std::vector<std::uint32_t>>& ids) const;

  Provenance provenance_;
  bool tagged_ = false;
  std::uint64_t total_tokens_ = 0;
  std::vector<std::string> vocab_;
  std::unordered_map<std::string, std::uint32_t> ids_;
  std::vector<Sentence> sentences_;
  std::vector<std::vector<Posting>> postings_;
};

}  // namespace nctk
