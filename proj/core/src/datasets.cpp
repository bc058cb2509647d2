#include "nctk/datasets.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "nctk/normalize.hpp"

namespace nctk {

namespace {

struct Row {
  std::size_t line = 0;
  std::vector<std::string> fields;
};

std::vector<std::string> split_fields(std::string_view line) {
  if (line.find('\t') == std::string_view::npos) return split_whitespace(line);
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    out.emplace_back(trim(line.substr(start, tab == std::string_view::npos ? tab : tab - start)));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  while (!out.empty() && out.back().empty()) out.pop_back();
  return out;
}

std::vector<std::string> lines_of(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    out.push_back(std::move(line));
  }
  return out;
}

std::vector<Row> rows_of(std::string_view text) {
  std::vector<Row> rows;
  const auto lines = lines_of(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto t = trim(lines[i]);
    if (t.empty() || t.front() == '#') continue;
    rows.push_back({i + 1, split_fields(lines[i])});
  }
  return rows;
}

[[noreturn]] void bad(const Row& r, const std::string& what) {
  throw DataError("line " + std::to_string(r.line) + ": " + what);
}

void need(const Row& r, std::size_t min, std::size_t max, const char* shape) {
  if (r.fields.size() < min || r.fields.size() > max)
    bad(r, "expected " + std::string(shape) + ", got " + std::to_string(r.fields.size()) + " fields");
}

template <typename L, typename Parse>
L label_field(const Row& r, std::size_t at, Parse parse) {
  if (r.fields.size() <= at) return L::Abstain;
  auto l = parse(r.fields[at]);
  if (!l) bad(r, "unknown label '" + r.fields[at] + "'");
  return *l;
}

template <typename F>
auto guarded(const Row& r, F f) {
  try {
    return f();
  } catch (const std::invalid_argument& e) {
    bad(r, e.what());
  }
}

std::optional<bool> flag(const Row& r, const std::string& s) {
  if (s == "1" || s == "yes" || s == "true") return true;
  if (s == "0" || s == "no" || s == "false") return false;
  if (s == "?" || s == "-") return std::nullopt;
  bad(r, "bad determiner flag '" + s + "'");
}

}  // namespace

std::string read_text_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw DataError("cannot open " + file.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<BracketItem> parse_bracketing_dataset(std::string_view text) {
  std::vector<BracketItem> out;
  for (const auto& r : rows_of(text)) {
    need(r, 3, 5, "w1 w2 w3 [label [freq]]");
    BracketItem item;
    item.triple = guarded(r, [&] { return NounTriple(r.fields[0], r.fields[1], r.fields[2]); });
    item.gold = label_field<Bracketing>(r, 3, [](std::string_view s) { return nctk::parse_bracketing(s); });
    if (r.fields.size() == 5) {
      std::uint64_t f = 0;
      const auto& s = r.fields[4];
      if (std::from_chars(s.data(), s.data() + s.size(), f).ec != std::errc{}) bad(r, "bad frequency '" + s + "'");
      item.frequency = f;
    }
    out.push_back(std::move(item));
  }
  return out;
}

std::vector<BracketItem> load_bracketing(const std::filesystem::path& file) {
  return parse_bracketing_dataset(read_text_file(file));
}

std::vector<PPItem> parse_pp_dataset(std::string_view text) {
  std::vector<PPItem> out;
  for (const auto& r : rows_of(text)) {
    need(r, 4, 5, "v n1 p n2 [label]");
    PPItem item;
    item.quad = guarded(r, [&] { return PPQuad(r.fields[0], r.fields[1], r.fields[2], r.fields[3]); });
    item.gold = label_field<Attachment>(r, 4, [](std::string_view s) { return parse_attachment(s); });
    out.push_back(std::move(item));
  }
  return out;
}

std::vector<PPItem> load_pp(const std::filesystem::path& file) { return parse_pp_dataset(read_text_file(file)); }

std::vector<CoordItem> parse_coordination_dataset(std::string_view text) {
  std::vector<CoordItem> out;
  for (const auto& r : rows_of(text)) {
    need(r, 4, 7, "n1 c n2 h [label [n1_det n2_det]]");
    if (r.fields.size() == 6) bad(r, "determiner flags come in pairs");
    CoordItem item;
    item.quad = guarded(r, [&] { return CoordQuad(r.fields[0], r.fields[1], r.fields[2], r.fields[3]); });
    item.gold = label_field<Coordination>(r, 4, [](std::string_view s) { return nctk::parse_coordination(s); });
    if (r.fields.size() == 7) {
      item.quad.n1_determiner = flag(r, r.fields[5]);
      item.quad.n2_determiner = flag(r, r.fields[6]);
    }
    out.push_back(std::move(item));
  }
  return out;
}

std::vector<CoordItem> load_coordination(const std::filesystem::path& file) {
  return parse_coordination_dataset(read_text_file(file));
}

std::vector<SatQuestion> parse_sat_dataset(std::string_view text) {
  std::vector<SatQuestion> out;
  std::optional<SatQuestion> cur;
  std::size_t start_line = 0;
  auto finish = [&] {
    if (!cur) return;
    if (cur->candidates.empty())
      throw DataError("line " + std::to_string(start_line) + ": SAT block without candidates");
    if (cur->gold && *cur->gold >= cur->candidates.size())
      throw DataError("line " + std::to_string(start_line) + ": answer out of range");
    out.push_back(std::move(*cur));
    cur.reset();
  };
  const auto lines = lines_of(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto t = trim(lines[i]);
    if (!t.empty() && t.front() == '#') continue;
    if (t.empty()) {
      finish();
      continue;
    }
    const Row r{i + 1, split_fields(lines[i])};
    if (!cur) {
      cur.emplace();
      start_line = r.line;
      need(r, 2, 2, "a stem pair");
      cur->stem = {to_lower(r.fields[0]), to_lower(r.fields[1])};
      continue;
    }
    if (r.fields.size() == 1) {
      if (cur->gold) bad(r, "second answer line");
      const auto a = to_lower(r.fields[0]);
      if (a.size() == 1 && a[0] >= 'a' && a[0] <= 'e') cur->gold = static_cast<std::size_t>(a[0] - 'a');
      else if (a.size() == 1 && a[0] >= '1' && a[0] <= '5') cur->gold = static_cast<std::size_t>(a[0] - '1');
      else bad(r, "bad answer '" + r.fields[0] + "'");
      continue;
    }
    need(r, 2, 2, "a word pair");
    if (cur->gold) bad(r, "candidate after the answer line");
    if (cur->candidates.size() == 5) bad(r, "more than five candidates");
    cur->candidates.push_back({to_lower(r.fields[0]), to_lower(r.fields[1])});
  }
  finish();
  return out;
}

std::vector<SatQuestion> load_sat(const std::filesystem::path& file) { return parse_sat_dataset(read_text_file(file)); }

std::vector<SemEvalExample> parse_semeval_dataset(std::string_view text) {
  std::vector<SemEvalExample> out;
  const auto lines = lines_of(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto t = trim(lines[i]);
    if (t.empty() || t.front() == '#') continue;
    Row r{i + 1, {}};
    // sentences contain spaces, so tabs are mandatory here
    std::size_t start = 0;
    while (true) {
      const auto tab = lines[i].find('\t', start);
      r.fields.emplace_back(trim(std::string_view(lines[i]).substr(start, tab == std::string::npos ? tab : tab - start)));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    need(r, 3, 4, "relation, sentence, gold [, query]");
    SemEvalExample ex;
    try {
      ex = parse_semeval_markup(r.fields[1]);
    } catch (const DataError& e) {
      bad(r, e.what());
    }
    ex.relation = r.fields[0];
    const auto g = to_lower(r.fields[2]);
    if (g == "true" || g == "1") ex.gold = true;
    else if (g == "false" || g == "0") ex.gold = false;
    else if (g != "?" && g != "-") bad(r, "gold must be true, false or ?");
    if (r.fields.size() == 4) ex.query = r.fields[3];
    out.push_back(std::move(ex));
  }
  return out;
}

std::vector<SemEvalExample> load_semeval(const std::filesystem::path& file) {
  return parse_semeval_dataset(read_text_file(file));
}

std::vector<std::string> parse_label_column(std::string_view text) {
  std::optional<std::size_t> column;
  std::vector<std::string> out;
  bool data_seen = false;
  const auto lines = lines_of(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto t = trim(lines[i]);
    if (t.empty()) continue;
    if (t.front() == '#') {
      if (!data_seen && !column) {
        const auto header = split_fields(trim(t.substr(1)));
        if (auto it = std::ranges::find(header, "label"); it != header.end())
          column = static_cast<std::size_t>(it - header.begin());
      }
      continue;
    }
    data_seen = true;
    const auto f = split_fields(lines[i]);
    if (f.empty()) continue;
    const auto at = column.value_or(f.size() - 1);
    if (at >= f.size()) throw DataError("line " + std::to_string(i + 1) + ": no label column");
    out.push_back(f[at]);
  }
  return out;
}

std::vector<std::string> load_label_column(const std::filesystem::path& file) {
  return parse_label_column(read_text_file(file));
}

}  // namespace nctk
