#include "nctk/pattern.hpp"

#include <algorithm>
#include <set>

#include "nctk/normalize.hpp"

namespace nctk {

PatternSlot word(const std::string& token) { return PatternSlot{{{token}}}; }

PatternSlot any_of(const std::vector<std::string>& tokens) {
  PatternSlot s;
  for (const auto& t : tokens) s.alts.push_back({t});
  return s;
}

PatternSlot phrases(const std::vector<std::string>& texts) {
  PatternSlot s;
  for (const auto& t : texts) s.alts.push_back(normalize_tokens(t));
  return s;
}

PatternSlot optional(PatternSlot slot) {
  slot.alts.push_back({});
  return slot;
}

namespace {

// Choices for one slot: each choice is a run of Slots.
std::vector<std::vector<Slot>> slot_choices(const PatternSlot& ps) {
  std::set<std::string> singles;
  std::set<std::vector<std::string>> multi;
  bool empty = false;
  for (const auto& a : ps.alts) {
    if (a.empty()) empty = true;
    else if (a.size() == 1) singles.insert(a[0]);
    else multi.insert(a);
  }
  std::vector<std::vector<Slot>> out;
  if (empty) out.push_back({});
  if (!singles.empty()) out.push_back({Slot(singles.begin(), singles.end())});
  for (const auto& m : multi) {
    std::vector<Slot> run;
    for (const auto& t : m) run.push_back(Slot{t});
    out.push_back(std::move(run));
  }
  return out;
}

}  // namespace

std::vector<Phrase> expand(const Pattern& pattern) {
  std::vector<Phrase> acc{Phrase{}};
  for (const auto& ps : pattern) {
    const auto choices = slot_choices(ps);
    std::vector<Phrase> next;
    next.reserve(acc.size() * choices.size());
    for (const auto& prefix : acc) {
      for (const auto& c : choices) {
        Phrase p = prefix;
        p.insert(p.end(), c.begin(), c.end());
        next.push_back(std::move(p));
      }
    }
    acc = std::move(next);
  }
  std::erase_if(acc, [](const Phrase& p) { return p.empty(); });
  return acc;
}

std::vector<CountQuery> pattern_queries(const Pattern& pattern) {
  std::vector<CountQuery> out;
  for (auto& p : expand(pattern)) out.push_back(CountQuery::exact(std::move(p)));
  return out;
}

std::vector<CountQuery> gap_pattern_queries(const Pattern& left, int min_gap, int max_gap, const Pattern& right) {
  std::vector<CountQuery> out;
  const auto rs = expand(right);
  for (const auto& l : expand(left))
    for (const auto& r : rs) out.push_back(CountQuery::with_gap(l, min_gap, max_gap, r));
  return out;
}

std::uint64_t count_queries(const CountProvider& provider, const std::vector<CountQuery>& queries) {
  std::uint64_t total = 0;
  for (const auto& q : queries) total += provider.count(q);
  return total;
}

}  // namespace nctk
