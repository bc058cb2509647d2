#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nctk/association.hpp"
#include "nctk/coordination.hpp"
#include "nctk/decision.hpp"
#include "nctk/pp_attachment.hpp"
#include "nctk/relational.hpp"

namespace nctk {

// All loaders: tab-separated (whitespace accepted when there are no tabs),
// '#' lines are comments, blank lines skipped. Malformed rows throw DataError
// naming the line; a missing file throws DataError("cannot open ...").
// A missing or abstain-spelled label leaves `gold` as Abstain / nullopt.

struct BracketItem {
  NounTriple triple;
  Bracketing gold = Bracketing::Abstain;
  std::optional<std::uint64_t> frequency;
};
// `w1 w2 w3 [label [freq]]`
std::vector<BracketItem> parse_bracketing_dataset(std::string_view text);
std::vector<BracketItem> load_bracketing(const std::filesystem::path& file);

struct PPItem {
  PPQuad quad;
  Attachment gold = Attachment::Abstain;
};
// `v n1 p n2 [N|V]`
std::vector<PPItem> parse_pp_dataset(std::string_view text);
std::vector<PPItem> load_pp(const std::filesystem::path& file);

struct CoordItem {
  CoordQuad quad;
  Coordination gold = Coordination::Abstain;
};
// `n1 c n2 h [noun|NP [n1_det n2_det]]`, determiner flags 0/1/"?".
std::vector<CoordItem> parse_coordination_dataset(std::string_view text);
std::vector<CoordItem> load_coordination(const std::filesystem::path& file);

// Blocks separated by blank lines: the stem pair, up to five candidate pairs
// (`w1 w2` per line) and an optional answer line (a-e or 1-5).
std::vector<SatQuestion> parse_sat_dataset(std::string_view text);
std::vector<SatQuestion> load_sat(const std::filesystem::path& file);

// `relation<TAB>sentence with <e1>/<e2> markup<TAB>true|false|?[<TAB>query]`
std::vector<SemEvalExample> parse_semeval_dataset(std::string_view text);
std::vector<SemEvalExample> load_semeval(const std::filesystem::path& file);

// One label per data row. The column is the one named "label" in a leading
// "# ..." header, else the last column.
std::vector<std::string> parse_label_column(std::string_view text);
std::vector<std::string> load_label_column(const std::filesystem::path& file);

std::string read_text_file(const std::filesystem::path& file);

}  // namespace nctk
