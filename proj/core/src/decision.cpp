#include "nctk/decision.hpp"

#include "nctk/normalize.hpp"

namespace nctk {

namespace {

bool is_abstain_word(const std::string& s) {
  return s == "abstain" || s == "none" || s == "n/a" || s == "na" || s == "-" || s == "?";
}

}  // namespace

std::string_view to_string(Bracketing l) {
  switch (l) {
    case Bracketing::Left: return "left";
    case Bracketing::Right: return "right";
    default: return "abstain";
  }
}

std::string_view to_string(Attachment l) {
  switch (l) {
    case Attachment::Noun: return "N";
    case Attachment::Verb: return "V";
    default: return "abstain";
  }
}

std::string_view to_string(Coordination l) {
  switch (l) {
    case Coordination::NounCoord: return "noun";
    case Coordination::NPCoord: return "NP";
    default: return "abstain";
  }
}

std::optional<Bracketing> parse_bracketing(std::string_view s) {
  const auto t = to_lower(trim(s));
  if (t == "left" || t == "l") return Bracketing::Left;
  if (t == "right" || t == "r") return Bracketing::Right;
  if (is_abstain_word(t)) return Bracketing::Abstain;
  return std::nullopt;
}

std::optional<Attachment> parse_attachment(std::string_view s) {
  const auto t = to_lower(trim(s));
  if (t == "n" || t == "noun") return Attachment::Noun;
  if (t == "v" || t == "verb") return Attachment::Verb;
  if (is_abstain_word(t)) return Attachment::Abstain;
  return std::nullopt;
}

std::optional<Coordination> parse_coordination(std::string_view s) {
  const auto t = to_lower(trim(s));
  if (t == "noun" || t == "noun-coord" || t == "nouncoord") return Coordination::NounCoord;
  if (t == "np" || t == "np-coord" || t == "npcoord") return Coordination::NPCoord;
  if (is_abstain_word(t)) return Coordination::Abstain;
  return std::nullopt;
}

}  // namespace nctk
