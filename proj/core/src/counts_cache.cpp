#include "nctk/counts_cache.hpp"

#include <charconv>
#include <fstream>
#include <mutex>

#include "nctk/normalize.hpp"

namespace nctk {

CountsCache CountsCache::load(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw DataError("cannot open counts cache: " + file.string());
  CountsCache c;
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab = line.rfind('\t');
    std::uint64_t n = 0;
    const char* first = line.data() + (tab == std::string::npos ? 0 : tab + 1);
    const char* last = line.data() + line.size();
    auto [ptr, ec] = std::from_chars(first, last, n);
    if (tab == std::string::npos || tab == 0 || ec != std::errc{} || ptr != last)
      throw DataError("malformed counts cache line " + std::to_string(line_no) + " in " + file.string());
    c.table_[line.substr(0, tab)] = n;
  }
  return c;
}

std::string CountsCache::to_tsv() const {
  std::string out;
  for (const auto& [k, v] : table_) {
    out += k;
    out += '\t';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

void CountsCache::save(const std::filesystem::path& file) {
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write counts cache: " + file.string());
  out << to_tsv();
  dirty_ = false;
}

std::optional<std::uint64_t> CountsCache::find(const std::string& canonical) const {
  auto it = table_.find(canonical);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

void CountsCache::put(const std::string& canonical, std::uint64_t count) {
  auto [it, inserted] = table_.try_emplace(canonical, count);
  if (inserted || it->second != count) {
    it->second = count;
    dirty_ = true;
  }
}

std::uint64_t CachedProvider::count(const CountQuery& q) const {
  const auto key = q.canonical();
  {
    std::shared_lock lock(mu_);
    if (auto hit = cache_.find(key)) return *hit;
  }
  const auto n = base_.count(q);
  std::unique_lock lock(mu_);
  cache_.put(key, n);
  return n;
}

std::uint64_t CachedProvider::total_ngrams() const {
  {
    std::shared_lock lock(mu_);
    if (auto hit = cache_.find(CountsCache::kTotalKey)) return *hit;
  }
  const auto n = base_.total_ngrams();
  std::unique_lock lock(mu_);
  cache_.put(CountsCache::kTotalKey, n);
  return n;
}

namespace {

// Every single-alternative spelling of a phrase.
void literals(const Phrase& p, std::size_t k, Phrase& cur, std::vector<Phrase>& out) {
  if (k == p.size()) {
    out.push_back(cur);
    return;
  }
  for (const auto& alt : p[k]) {
    cur.push_back(Slot{alt});
    literals(p, k + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<Phrase> literals(const Phrase& p) {
  std::vector<Phrase> out;
  Phrase cur;
  literals(p, 0, cur, out);
  return out;
}

}  // namespace

std::uint64_t TableProvider::count(const CountQuery& q) const {
  q.validate();
  const auto key = q.canonical();
  auto it = table_.find(key);
  if (it != table_.end()) return it->second;
  if (miss_ == Miss::Error) throw ProviderError(name_ + ": no count for '" + key + "'");
  // reported counts are per spelling: sum over the inflection product
  const auto left = literals(q.phrase);
  const auto right = q.gap ? literals(q.right) : std::vector<Phrase>{Phrase{}};
  if (left.size() * right.size() <= 1) return 0;
  std::uint64_t total = 0;
  for (const auto& l : left) {
    for (const auto& r : right) {
      CountQuery lit = q;
      lit.phrase = l;
      lit.right = r;
      if (auto hit = table_.find(lit.canonical()); hit != table_.end()) total += hit->second;
    }
  }
  return total;
}

std::uint64_t TableProvider::total_ngrams() const {
  if (!total_) throw ProviderError(name_ + ": corpus total unknown");
  return *total_;
}

}  // namespace nctk
