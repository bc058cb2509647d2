#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nctk {

enum class Bracketing : std::uint8_t { Left, Right, Abstain };
enum class Attachment : std::uint8_t { Noun, Verb, Abstain };
enum class Coordination : std::uint8_t { NounCoord, NPCoord, Abstain };

template <typename L>
concept TriLabel = requires { L::Abstain; };

// Per-task label names as they appear in datasets and reports.
std::string_view to_string(Bracketing l);
std::string_view to_string(Attachment l);
std::string_view to_string(Coordination l);

// Parsers accept the dataset spellings plus a few aliases
// ("left"/"l", "N"/"noun", "NP"/"np-coord", ...); "none", "abstain", "n/a"
// and "-" map to Abstain. Unknown strings yield nullopt.
std::optional<Bracketing> parse_bracketing(std::string_view s);
std::optional<Attachment> parse_attachment(std::string_view s);
std::optional<Coordination> parse_coordination(std::string_view s);

// The two non-abstain values of a task, first one is the "left" side of every
// two-way comparison in that task.
template <TriLabel L> constexpr L first_label();
template <TriLabel L> constexpr L second_label();
template <> constexpr Bracketing first_label<Bracketing>() { return Bracketing::Left; }
template <> constexpr Bracketing second_label<Bracketing>() { return Bracketing::Right; }
template <> constexpr Attachment first_label<Attachment>() { return Attachment::Noun; }
template <> constexpr Attachment second_label<Attachment>() { return Attachment::Verb; }
template <> constexpr Coordination first_label<Coordination>() { return Coordination::NounCoord; }
template <> constexpr Coordination second_label<Coordination>() { return Coordination::NPCoord; }

template <TriLabel L>
constexpr L opposite(L l) {
  if (l == first_label<L>()) return second_label<L>();
  if (l == second_label<L>()) return first_label<L>();
  return L::Abstain;
}

// One voter's output. `first_score`/`second_score` are the two sides of the
// comparison that produced the label (counts, probabilities, vote tallies).
template <TriLabel L>
struct Decision {
  L label = L::Abstain;
  double first_score = 0.0;
  double second_score = 0.0;
  std::string model;
  std::string diagnostic;

  bool abstained() const { return label == L::Abstain; }
};

using BracketDecision = Decision<Bracketing>;
using AttachmentDecision = Decision<Attachment>;
using CoordDecision = Decision<Coordination>;

// Two-way comparison with an optional margin: a label is produced when the
// scores differ and |first - second| >= margin. Margin 0 reduces to a strict
// comparison with ties abstaining.
template <TriLabel L>
Decision<L> compare_scores(double first, double second, double margin, std::string model) {
  Decision<L> d;
  d.first_score = first;
  d.second_score = second;
  d.model = std::move(model);
  const double diff = first - second;
  if (diff == 0.0) return d;
  const double gap = diff > 0 ? diff : -diff;
  if (gap < margin) return d;
  d.label = diff > 0 ? first_label<L>() : second_label<L>();
  return d;
}

template <TriLabel L>
Decision<L> abstain(std::string model, std::string diagnostic = {}) {
  Decision<L> d;
  d.model = std::move(model);
  d.diagnostic = std::move(diagnostic);
  return d;
}

template <TriLabel L>
Decision<L> fixed(L label, std::string model) {
  Decision<L> d;
  d.label = label;
  d.model = std::move(model);
  return d;
}

// Majority vote over non-abstaining voters. A strict majority wins; a tie or
// an empty vote falls back to `fallback` (Abstain when unset).
template <TriLabel L>
Decision<L> majority_vote(std::span<const Decision<L>> votes, std::optional<L> fallback) {
  Decision<L> out;
  out.model = "majority-vote";
  for (const auto& v : votes) {
    if (v.label == first_label<L>()) out.first_score += 1;
    else if (v.label == second_label<L>()) out.second_score += 1;
  }
  if (out.first_score > out.second_score) out.label = first_label<L>();
  else if (out.second_score > out.first_score) out.label = second_label<L>();
  else if (fallback) {
    out.label = *fallback;
    out.diagnostic = "default";
  }
  return out;
}

template <TriLabel L>
Decision<L> majority_vote(const std::vector<Decision<L>>& votes, std::optional<L> fallback) {
  return majority_vote(std::span<const Decision<L>>(votes), fallback);
}

}  // namespace nctk
