#include "nctk/surface_scan.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "nctk/normalize.hpp"

namespace nctk {

namespace {

bool slot_has(const Slot& s, const std::string& tok) { return std::find(s.begin(), s.end(), tok) != s.end(); }

// "'" or a typographic apostrophe (U+2019) between a word and its "s".
bool is_apostrophe(std::string_view gap) { return gap == "'" || gap == "\xE2\x80\x99"; }

}  // namespace

std::string squeeze(std::string_view gap) {
  std::string out;
  for (char c : gap)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

std::vector<Occurrence> find_occurrences(std::string_view raw, const std::vector<Slot>& words, bool allow_genitive) {
  std::vector<Occurrence> out;
  if (words.empty()) return out;
  const auto toks = normalize_with_spans(raw);
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (!slot_has(words[0], toks[i].text)) continue;
    Occurrence occ;
    occ.words.emplace_back(raw.substr(toks[i].begin, toks[i].end - toks[i].begin));
    occ.genitive.push_back(false);
    std::size_t cur = i;
    bool ok = true;
    for (std::size_t k = 1; k < words.size() && ok; ++k) {
      std::size_t next = cur + 1;
      std::size_t gap_begin = toks[cur].end;
      if (allow_genitive && next + 1 < toks.size() && toks[next].text == "s" &&
          is_apostrophe(raw.substr(toks[cur].end, toks[next].begin - toks[cur].end)) &&
          slot_has(words[k], toks[next + 1].text)) {
        occ.genitive.back() = true;
        gap_begin = toks[next].end;
        ++next;
      }
      if (next >= toks.size() || !slot_has(words[k], toks[next].text)) {
        ok = false;
        break;
      }
      occ.gaps.emplace_back(raw.substr(gap_begin, toks[next].begin - gap_begin));
      occ.words.emplace_back(raw.substr(toks[next].begin, toks[next].end - toks[next].begin));
      occ.genitive.push_back(false);
      cur = next;
    }
    if (!ok) continue;
    const std::size_t before_begin = i > 0 ? toks[i - 1].end : 0;
    occ.before = std::string(raw.substr(before_begin, toks[i].begin - before_begin));
    occ.word_before = i > 0;
    const std::size_t after_end = cur + 1 < toks.size() ? toks[cur + 1].begin : raw.size();
    occ.after = std::string(raw.substr(toks[cur].end, after_end - toks[cur].end));
    occ.word_after = cur + 1 < toks.size();
    out.push_back(std::move(occ));
  }
  return out;
}

bool is_capitalized(std::string_view word) {
  return !word.empty() && std::isupper(static_cast<unsigned char>(word.front())) != 0;
}

bool is_lowercase_word(std::string_view word) {
  return !word.empty() && std::islower(static_cast<unsigned char>(word.front())) != 0;
}

bool is_roman_numeral(std::string_view word) {
  if (word.empty()) return false;
  const auto w = to_lower(word);
  if (w.find_first_not_of("ivxlcdm") != std::string::npos) return false;
  // canonical numerals up to 3999
  static const std::set<std::string> numerals = [] {
    static const char* ones[] = {"", "i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix"};
    static const char* tens[] = {"", "x", "xx", "xxx", "xl", "l", "lx", "lxx", "lxxx", "xc"};
    static const char* hundreds[] = {"", "c", "cc", "ccc", "cd", "d", "dc", "dcc", "dccc", "cm"};
    std::set<std::string> out;
    for (int n = 1; n < 4000; ++n) {
      std::string r(static_cast<std::size_t>(n / 1000), 'm');
      r += hundreds[(n / 100) % 10];
      r += tens[(n / 10) % 10];
      r += ones[n % 10];
      out.insert(std::move(r));
    }
    return out;
  }();
  return numerals.contains(w);
}

bool capitalization_usable(std::string_view word) { return word.size() > 1 && !is_roman_numeral(word); }

std::uint64_t FeatureTally::first_total() const {
  std::uint64_t n = 0;
  for (const auto& [_, v] : features) n += v.first;
  return n;
}

std::uint64_t FeatureTally::second_total() const {
  std::uint64_t n = 0;
  for (const auto& [_, v] : features) n += v.second;
  return n;
}

}  // namespace nctk
