#include "nctk/corpus_index.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <sstream>

#include "nctk/normalize.hpp"

namespace nctk {

namespace {

constexpr char kMagic[4] = {'N', 'C', 'I', 'X'};

std::string fnv1a_hex(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  static constexpr char digits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

std::string canonical_phrase(const Phrase& p) {
  std::vector<std::string> positions;
  positions.reserve(p.size());
  for (const auto& slot : p) {
    Slot alts = slot;
    std::sort(alts.begin(), alts.end());
    alts.erase(std::unique(alts.begin(), alts.end()), alts.end());
    positions.push_back(join(alts, "|"));
  }
  return join(positions, " ");
}

// Little-endian binary writer/reader for the index file.
class Writer {
 public:
  void u8(std::uint8_t v) { out_.push_back(static_cast<char>(v)); }
  void u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out_.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
  }
  void u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out_.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
  }
  void str(std::string_view s) {
    u32(static_cast<std::uint32_t>(s.size()));
    out_.append(s);
  }
  void raw(const char* p, std::size_t n) { out_.append(p, n); }
  std::string take() { return std::move(out_); }

 private:
  std::string out_;
};

class Reader {
 public:
  explicit Reader(std::string_view in) : in_(in) {}
  std::uint8_t u8() {
    need(1);
    return static_cast<std::uint8_t>(in_[pos_++]);
  }
  std::uint32_t u32() {
    need(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(static_cast<unsigned char>(in_[pos_++])) << (8 * i);
    return v;
  }
  std::uint64_t u64() {
    need(8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(static_cast<unsigned char>(in_[pos_++])) << (8 * i);
    return v;
  }
  std::string str() {
    const auto n = u32();
    need(n);
    std::string s(in_.substr(pos_, n));
    pos_ += n;
    return s;
  }
  std::string_view bytes(std::size_t n) {
    need(n);
    auto v = in_.substr(pos_, n);
    pos_ += n;
    return v;
  }
  bool done() const { return pos_ == in_.size(); }

 private:
  void need(std::size_t n) const {
    if (in_.size() - pos_ < n) throw DataError("truncated index file");
  }
  std::string_view in_;
  std::size_t pos_ = 0;
};

}  // namespace

CountQuery CountQuery::exact(Phrase p) {
  CountQuery q;
  q.phrase = std::move(p);
  return q;
}

CountQuery CountQuery::with_gap(Phrase left, int min_gap, int max_gap, Phrase right) {
  CountQuery q;
  q.phrase = std::move(left);
  q.gap = GapRange{min_gap, max_gap};
  q.right = std::move(right);
  return q;
}

void CountQuery::validate() const {
  if (phrase.empty()) throw std::invalid_argument("empty query phrase");
  if (gap) {
    if (right.empty()) throw std::invalid_argument("gap query without right phrase");
    if (gap->min < 0 || gap->min > gap->max || gap->max > kMaxGap)
      throw std::invalid_argument("gap range out of [0, 8]");
  } else if (!right.empty()) {
    throw std::invalid_argument("right phrase without gap");
  }
}

std::string CountQuery::canonical() const {
  std::string out = canonical_phrase(phrase);
  if (gap) {
    out += " *{" + std::to_string(gap->min) + "," + std::to_string(gap->max) + "} ";
    out += canonical_phrase(right);
  }
  return out;
}

Phrase literal(const std::vector<std::string>& tokens) {
  Phrase p;
  p.reserve(tokens.size());
  for (const auto& t : tokens) p.push_back(Slot{t});
  return p;
}

Phrase literal_text(std::string_view text) { return literal(normalize_tokens(text)); }

std::vector<std::string> CountProvider::snippets(const CountQuery&, std::size_t) const {
  throw ProviderError(name() + ": snippets unavailable");
}

std::string IngestConfig::hash() const {
  return fnv1a_hex(std::string("nctk-ingest v1 tagged=") + (tagged ? "1" : "0"));
}

// ---- build ----------------------------------------------------------------

std::uint32_t CorpusIndex::intern(const std::string& token) {
  auto [it, inserted] = ids_.try_emplace(token, static_cast<std::uint32_t>(vocab_.size()));
  if (inserted) vocab_.push_back(token);
  return it->second;
}

void CorpusIndex::add_sentence(std::string raw, std::vector<std::string> raw_tags) {
  auto spans = normalize_with_spans(raw);
  if (spans.empty()) return;
  Sentence s;
  s.tokens.reserve(spans.size());
  for (auto& t : spans) {
    s.tokens.push_back(intern(t.text));
    s.span_begin.push_back(static_cast<std::uint32_t>(t.begin));
    s.span_end.push_back(static_cast<std::uint32_t>(t.end));
  }
  s.raw = std::move(raw);
  s.raw_tags = std::move(raw_tags);
  total_tokens_ += s.tokens.size();
  sentences_.push_back(std::move(s));
}

void CorpusIndex::finalize() {
  if (total_tokens_ == 0) throw DataError("empty corpus");
  postings_.assign(vocab_.size(), {});
  for (std::uint32_t si = 0; si < sentences_.size(); ++si) {
    const auto& toks = sentences_[si].tokens;
    for (std::uint32_t p = 0; p < toks.size(); ++p) postings_[toks[p]].push_back({si, p});
  }
}

CorpusIndex CorpusIndex::from_lines(std::span<const std::string> lines, const IngestConfig& config,
                                    std::string source) {
  CorpusIndex idx;
  idx.tagged_ = config.tagged;
  idx.provenance_ = {std::move(source), config.hash()};
  std::size_t line_no = 0;
  for (const auto& line_in : lines) {
    ++line_no;
    std::string_view line = line_in;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!config.tagged) {
      idx.add_sentence(std::string(line), {});
      continue;
    }
    std::vector<std::string> words, tags;
    for (const auto& tok : split_whitespace(line)) {
      const auto us = tok.rfind('_');
      if (us == std::string::npos || us == 0 || us + 1 == tok.size())
        throw DataError("malformed tagged token '" + tok + "' at line " + std::to_string(line_no));
      words.push_back(tok.substr(0, us));
      tags.push_back(tok.substr(us + 1));
    }
    idx.add_sentence(join(words, " "), std::move(tags));
  }
  idx.finalize();
  return idx;
}

CorpusIndex CorpusIndex::build(const std::filesystem::path& corpus_file, const IngestConfig& config) {
  std::ifstream in(corpus_file, std::ios::binary);
  if (!in) throw DataError("cannot open corpus file: " + corpus_file.string());
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(std::move(line));
  return from_lines(lines, config, corpus_file.string());
}

// ---- persistence ----------------------------------------------------------

std::string CorpusIndex::serialize() const {
  Writer w;
  w.raw(kMagic, sizeof kMagic);
  w.u8(kFormatVersion);
  w.str(provenance_.source);
  w.str(provenance_.config_hash);
  w.u8(tagged_ ? 1 : 0);
  w.u32(static_cast<std::uint32_t>(vocab_.size()));
  for (const auto& v : vocab_) w.str(v);
  w.u32(static_cast<std::uint32_t>(sentences_.size()));
  for (const auto& s : sentences_) {
    w.str(s.raw);
    w.u32(static_cast<std::uint32_t>(s.tokens.size()));
    for (std::size_t i = 0; i < s.tokens.size(); ++i) {
      w.u32(s.tokens[i]);
      w.u32(s.span_begin[i]);
      w.u32(s.span_end[i]);
    }
    w.u32(static_cast<std::uint32_t>(s.raw_tags.size()));
    for (const auto& t : s.raw_tags) w.str(t);
  }
  w.u64(total_tokens_);
  return w.take();
}

CorpusIndex CorpusIndex::deserialize(std::string_view bytes) {
  Reader r(bytes);
  if (r.bytes(sizeof kMagic) != std::string_view(kMagic, sizeof kMagic)) throw DataError("not an index file");
  const auto version = r.u8();
  if (version != kFormatVersion)
    throw DataError("unsupported index format version " + std::to_string(version));
  CorpusIndex idx;
  idx.provenance_.source = r.str();
  idx.provenance_.config_hash = r.str();
  idx.tagged_ = r.u8() != 0;
  const auto nvocab = r.u32();
  idx.vocab_.reserve(nvocab);
  for (std::uint32_t i = 0; i < nvocab; ++i) {
    idx.vocab_.push_back(r.str());
    idx.ids_.emplace(idx.vocab_.back(), i);
  }
  const auto nsent = r.u32();
  idx.sentences_.reserve(nsent);
  std::uint64_t total = 0;
  for (std::uint32_t i = 0; i < nsent; ++i) {
    Sentence s;
    s.raw = r.str();
    const auto ntok = r.u32();
    for (std::uint32_t k = 0; k < ntok; ++k) {
      const auto id = r.u32();
      if (id >= nvocab) throw DataError("corrupt index: token id out of range");
      s.tokens.push_back(id);
      s.span_begin.push_back(r.u32());
      s.span_end.push_back(r.u32());
    }
    const auto ntags = r.u32();
    for (std::uint32_t k = 0; k < ntags; ++k) s.raw_tags.push_back(r.str());
    total += ntok;
    idx.sentences_.push_back(std::move(s));
  }
  idx.total_tokens_ = r.u64();
  if (total != idx.total_tokens_ || !r.done()) throw DataError("corrupt index: token total mismatch");
  idx.finalize();
  return idx;
}

void CorpusIndex::save(const std::filesystem::path& index_file) const {
  std::ofstream out(index_file, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write index file: " + index_file.string());
  const auto bytes = serialize();
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

CorpusIndex CorpusIndex::load(const std::filesystem::path& index_file) {
  std::ifstream in(index_file, std::ios::binary);
  if (!in) throw DataError("cannot open index file: " + index_file.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return deserialize(ss.str());
}

// ---- queries --------------------------------------------------------------

std::vector<std::uint32_t> CorpusIndex::slot_ids(const Slot& slot) const {
  std::vector<std::uint32_t> out;
  for (const auto& alt : slot) {
    auto it = ids_.find(alt);
    if (it != ids_.end()) out.push_back(it->second);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool CorpusIndex::matches_at(const Sentence& s, std::size_t start,
                             const std::vector<std::vector<std::uint32_t>>& ids) const {
  if (start + ids.size() > s.tokens.size()) return false;
  for (std::size_t k = 0; k < ids.size(); ++k) {
    if (!std::binary_search(ids[k].begin(), ids[k].end(), s.tokens[start + k])) return false;
  }
  return true;
}

std::vector<CorpusIndex::Posting> CorpusIndex::match_starts(const Phrase& phrase) const {
  std::vector<Posting> out;
  if (phrase.empty()) return out;
  std::vector<std::vector<std::uint32_t>> ids;
  ids.reserve(phrase.size());
  for (const auto& slot : phrase) {
    ids.push_back(slot_ids(slot));
    if (ids.back().empty()) return out;
  }
  // anchor on the position with the fewest postings
  std::size_t anchor = 0;
  std::size_t best = SIZE_MAX;
  for (std::size_t k = 0; k < ids.size(); ++k) {
    std::size_t n = 0;
    for (auto id : ids[k]) n += postings_[id].size();
    if (n < best) {
      best = n;
      anchor = k;
    }
  }
  for (auto id : ids[anchor]) {
    for (const auto& p : postings_[id]) {
      if (p.position < anchor) continue;
      const std::size_t start = p.position - anchor;
      if (matches_at(sentences_[p.sentence], start, ids))
        out.push_back({p.sentence, static_cast<std::uint32_t>(start)});
    }
  }
  std::sort(out.begin(), out.end(), [](const Posting& a, const Posting& b) {
    return a.sentence != b.sentence ? a.sentence < b.sentence : a.position < b.position;
  });
  return out;
}

std::uint64_t CorpusIndex::count_phrase(const Phrase& phrase) const { return match_starts(phrase).size(); }

std::uint64_t CorpusIndex::count_gap(const Phrase& left, const Phrase& right, int min_gap, int max_gap) const {
  CountQuery::with_gap(left, min_gap, max_gap, right).validate();
  std::vector<std::vector<std::uint32_t>> rids;
  for (const auto& slot : right) {
    rids.push_back(slot_ids(slot));
    if (rids.back().empty()) return 0;
  }
  std::uint64_t total = 0;
  for (const auto& m : match_starts(left)) {
    const auto& s = sentences_[m.sentence];
    const std::size_t end = m.position + left.size();
    for (int g = min_gap; g <= max_gap; ++g) {
      if (matches_at(s, end + static_cast<std::size_t>(g), rids)) ++total;
    }
  }
  return total;
}

std::uint64_t CorpusIndex::count(const CountQuery& q) const {
  q.validate();
  if (q.gap) return count_gap(q.phrase, q.right, q.gap->min, q.gap->max);
  return count_phrase(q.phrase);
}

std::vector<std::string> CorpusIndex::fetch_snippets(const CountQuery& q, std::size_t limit) const {
  q.validate();
  if (limit == 0) throw std::invalid_argument("snippet limit must be >= 1");
  std::vector<std::string> out;
  std::vector<std::vector<std::uint32_t>> rids;
  if (q.gap) {
    for (const auto& slot : q.right) {
      rids.push_back(slot_ids(slot));
      if (rids.back().empty()) return out;
    }
  }
  std::uint32_t last = UINT32_MAX;
  for (const auto& m : match_starts(q.phrase)) {
    if (m.sentence == last) continue;
    bool ok = !q.gap;
    if (q.gap) {
      const auto& s = sentences_[m.sentence];
      const std::size_t end = m.position + q.phrase.size();
      for (int g = q.gap->min; g <= q.gap->max && !ok; ++g)
        ok = matches_at(s, end + static_cast<std::size_t>(g), rids);
    }
    if (!ok) continue;
    last = m.sentence;
    out.push_back(sentences_[m.sentence].raw);
    if (out.size() >= limit) break;
  }
  return out;
}

// ---- sentence accessors ---------------------------------------------------

std::vector<std::string> CorpusIndex::normalized_tokens(std::size_t i) const {
  const auto& s = sentences_.at(i);
  std::vector<std::string> out;
  out.reserve(s.tokens.size());
  for (auto id : s.tokens) out.push_back(vocab_[id]);
  return out;
}

std::pair<std::size_t, std::size_t> CorpusIndex::raw_span(std::size_t sentence, std::size_t token) const {
  const auto& s = sentences_.at(sentence);
  return {s.span_begin.at(token), s.span_end.at(token)};
}

std::vector<std::string> CorpusIndex::raw_tokens(std::size_t i) const { return split_whitespace(sentences_.at(i).raw); }

std::vector<std::string> CorpusIndex::normalized_tags(std::size_t i) const {
  const auto& s = sentences_.at(i);
  if (!tagged_) return {};
  // tagged raw text is words joined by single spaces
  std::vector<std::size_t> ws_of(s.raw.size(), 0);
  std::size_t ws = 0;
  for (std::size_t b = 0; b < s.raw.size(); ++b) {
    if (s.raw[b] == ' ') ++ws;
    ws_of[b] = ws;
  }
  std::vector<std::string> out;
  out.reserve(s.tokens.size());
  for (std::size_t k = 0; k < s.tokens.size(); ++k) {
    const auto w = ws_of[s.span_begin[k]];
    out.push_back(w < s.raw_tags.size() ? s.raw_tags[w] : std::string{});
  }
  return out;
}

}  // namespace nctk
