#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>

#include "nctk/corpus_index.hpp"

namespace nctk {

// canonical query -> count, persisted as sorted TSV. The corpus total N is
// kept under the reserved key "#total" (normalized tokens never contain '#').
class CountsCache {
 public:
  CountsCache() = default;
  static CountsCache load(const std::filesystem::path& file);
  void save(const std::filesystem::path& file);

  static constexpr const char* kTotalKey = "#total";

  std::optional<std::uint64_t> find(const std::string& canonical) const;
  void put(const std::string& canonical, std::uint64_t count);
  bool dirty() const { return dirty_; }
  std::size_t size() const { return table_.size(); }
  const std::map<std::string, std::uint64_t>& entries() const { return table_; }

  std::string to_tsv() const;

 private:
  std::map<std::string, std::uint64_t> table_;
  bool dirty_ = false;
};

// Serves counts from `base`, remembering every answer in a cache. Concurrent
// readers share the lock; inserts are serialized.
class CachedProvider final : public CountProvider {
 public:
  CachedProvider(const CountProvider& base, CountsCache& cache) : base_(base), cache_(cache) {}

  std::uint64_t count(const CountQuery& q) const override;
  std::uint64_t total_ngrams() const override;
  std::vector<std::string> snippets(const CountQuery& q, std::size_t limit) const override {
    return base_.snippets(q, limit);
  }
  std::string name() const override { return "cached:" + base_.name(); }

 private:
  const CountProvider& base_;
  CountsCache& cache_;
  mutable std::shared_mutex mu_;
};

// Fixed table of counts keyed by canonical query: a cache replay (misses are
// errors) or a table of reported counts. In the latter, a query with
// alternatives that has no entry of its own sums the entries of its
// single-spelling expansions; anything else missing counts zero.
class TableProvider final : public CountProvider {
 public:
  enum class Miss { Zero, Error };

  TableProvider(std::map<std::string, std::uint64_t> table, std::optional<std::uint64_t> total, Miss miss,
                std::string name = "table")
      : table_(std::move(table)), total_(total), miss_(miss), name_(std::move(name)) {}
  static TableProvider replay(const CountsCache& cache) {
    return TableProvider(cache.entries(), cache.find(CountsCache::kTotalKey), Miss::Error, "replay");
  }

  void set(const CountQuery& q, std::uint64_t n) { table_[q.canonical()] = n; }
  std::uint64_t count(const CountQuery& q) const override;
  std::uint64_t total_ngrams() const override;
  std::string name() const override { return name_; }

 private:
  std::map<std::string, std::uint64_t> table_;
  std::optional<std::uint64_t> total_;
  Miss miss_;
  std::string name_;
};

}  // namespace nctk
