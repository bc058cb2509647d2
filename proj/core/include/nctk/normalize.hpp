#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace nctk {

// A normalized token and the raw byte range [begin, end) it came from.
struct TokenSpan {
  std::string text;
  std::size_t begin = 0;
  std::size_t end = 0;
};

// Search-engine style normalization: lowercase, punctuation dropped, words
// split at every non-alphanumeric character ("brain-stem" -> brain stem,
// "brain's" -> brain s). Bytes >= 0x80 count as word characters so UTF-8
// words survive intact.
std::vector<TokenSpan> normalize_with_spans(std::string_view raw);
std::vector<std::string> normalize_tokens(std::string_view raw);

std::string to_lower(std::string_view s);
bool is_word_byte(char c);
std::vector<std::string> split_whitespace(std::string_view s);
std::string join(const std::vector<std::string>& parts, std::string_view sep);
std::string_view trim(std::string_view s);

}  // namespace nctk
