#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "nctk/corpus_index.hpp"
#include "nctk/counts_cache.hpp"
#include "nctk/normalize.hpp"
#include "oracle.hpp"

using namespace nctk;

namespace {

const std::vector<std::string> kToy{
    "Health care reform is on the agenda.",          // 7
    "The health care tax reform failed, again.",     // 7
    "Stem cells: brain-stem cells!",                 // 5 (brain stem split)
};

Phrase ph(std::initializer_list<const char*> words) {
  Phrase p;
  for (auto w : words) p.push_back(Slot{w});
  return p;
}

oracle::Phrase oph(const Phrase& p) { return oracle::Phrase(p.begin(), p.end()); }

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  auto p = std::filesystem::temp_directory_path() / ("nctk_test_" + name);
  std::ofstream(p, std::ios::binary) << content;
  return p;
}

}  // namespace

TEST_SUITE("corpus-index") {
  TEST_CASE("toy corpus token total is the hand count") {
    const auto idx = CorpusIndex::from_lines(kToy, {});
    CHECK(idx.total_ngrams() == 19);
    CHECK(idx.sentence_count() == 3);
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < idx.sentence_count(); ++i) sum += idx.normalized_tokens(i).size();
    CHECK(sum == idx.total_ngrams());
  }

  TEST_CASE("empty corpus is rejected") {
    const std::vector<std::string> none;
    CHECK_THROWS_WITH_AS(CorpusIndex::from_lines(none, {}), "empty corpus", DataError);
    const std::vector<std::string> blank{"", "  ", "--"};
    CHECK_THROWS_AS(CorpusIndex::from_lines(blank, {}), DataError);
    const auto f = temp_file("empty.txt", "");
    CHECK_THROWS_WITH_AS(CorpusIndex::build(f, {}), "empty corpus", DataError);
  }

  TEST_CASE("malformed tagged token names its line") {
    const std::vector<std::string> lines{"the_DT cell_NN", "a_DT broken"};
    CHECK_THROWS_WITH_AS(CorpusIndex::from_lines(lines, {true}), doctest::Contains("line 2"), DataError);
  }

  TEST_CASE("indexing is deterministic") {
    std::string text;
    for (const auto& l : kToy) text += l + "\n";
    const auto f = temp_file("toy.txt", text);
    const auto a = CorpusIndex::build(f, {});
    const auto b = CorpusIndex::build(f, {});
    CHECK(a.serialize() == b.serialize());
    const auto back = CorpusIndex::deserialize(a.serialize());
    CHECK(back.serialize() == a.serialize());
    CHECK(back.count(CountQuery::exact(ph({"health", "care"}))) == 2);
  }

  TEST_CASE("save and load round trip; bad files are data errors") {
    const auto idx = CorpusIndex::from_lines(kToy, {});
    const auto f = std::filesystem::temp_directory_path() / "nctk_test_toy.idx";
    idx.save(f);
    CHECK(CorpusIndex::load(f).serialize() == idx.serialize());
    CHECK_THROWS_AS(CorpusIndex::load(temp_file("junk.idx", "not an index")), DataError);
    auto bytes = idx.serialize();
    bytes.resize(bytes.size() / 2);
    CHECK_THROWS_AS(CorpusIndex::deserialize(bytes), DataError);
    CHECK_THROWS_AS(CorpusIndex::load("/nonexistent/nctk.idx"), DataError);
  }

  TEST_CASE("exact phrase counts") {
    const auto idx = CorpusIndex::from_lines(kToy, {});
    CHECK(idx.count_phrase(ph({"health", "care"})) == 2);
    CHECK(idx.count_phrase(literal_text("Health care")) == 2);
    CHECK(idx.count_phrase(ph({"brain", "stem", "cells"})) == 1);
    CHECK(idx.count_phrase(ph({"stem", "cells"})) == 2);
    CHECK(idx.count_phrase(literal_text("health care reform is on the agenda the health")) == 0);
    CHECK(idx.count_phrase(ph({"unseen"})) == 0);
    // alternatives
    CHECK(idx.count_phrase({Slot{"cell", "cells"}}) == 2);
  }

  TEST_CASE("queries never cross sentence boundaries") {
    const std::vector<std::string> lines{"alpha beta", "gamma delta"};
    const auto idx = CorpusIndex::from_lines(lines, {});
    CHECK(idx.count_phrase(ph({"beta", "gamma"})) == 0);
    CHECK(idx.count_gap(ph({"beta"}), ph({"delta"}), 0, 8) == 0);
  }

  TEST_CASE("gap counts") {
    const std::vector<std::string> lines{"health care tax reform"};
    const auto idx = CorpusIndex::from_lines(lines, {});
    CHECK(idx.count_gap(ph({"health", "care"}), ph({"reform"}), 1, 1) == 1);
    CHECK(idx.count_gap(ph({"health", "care"}), ph({"reform"}), 2, 3) == 0);
    CHECK(idx.count_gap(ph({"health"}), ph({"reform"}), 1, 3) == 1);
    CHECK(idx.count_gap(ph({"health"}), ph({"absent"}), 1, 8) == 0);
    CHECK(idx.count(CountQuery::with_gap(ph({"health"}), 2, 2, ph({"reform"}))) == 1);
  }

  TEST_CASE("query validation and canonical form") {
    CHECK_THROWS_AS(CountQuery::exact({}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(CountQuery::with_gap(ph({"a"}), 1, 9, ph({"b"})).validate(), std::invalid_argument);
    CHECK_THROWS_AS(CountQuery::with_gap(ph({"a"}), 3, 2, ph({"b"})).validate(), std::invalid_argument);
    CHECK_NOTHROW(CountQuery::with_gap(ph({"a"}), 1, 8, ph({"b"})).validate());
    const auto q = CountQuery::with_gap({Slot{"cells", "cell"}, Slot{"x"}}, 1, 3, ph({"d"}));
    CHECK(q.canonical() == "cell|cells x *{1,3} d");
  }

  TEST_CASE("snippets: truncation, order, raw text") {
    const std::vector<std::string> lines{"cell one",   "no match", "cell two",  "cell three",
                                         "cell four", "cell five", "CELL-cycle analysis"};
    const auto idx = CorpusIndex::from_lines(lines, {});
    const auto three = idx.fetch_snippets(CountQuery::exact(ph({"cell"})), 3);
    REQUIRE(three.size() == 3);
    CHECK(three[0] == "cell one");
    CHECK(three[1] == "cell two");
    CHECK(three[2] == "cell three");
    CHECK(idx.fetch_snippets(CountQuery::exact(ph({"zebra"})), 10).empty());
    const auto hy = idx.fetch_snippets(CountQuery::exact(ph({"cell", "cycle"})), 5);
    REQUIRE(hy.size() == 1);
    CHECK(hy[0].find("CELL-cycle") != std::string::npos);

    const std::vector<std::string> bs{"Brain-stem cells grow."};
    const auto idx2 = CorpusIndex::from_lines(bs, {});
    const auto s = idx2.fetch_snippets(CountQuery::exact(ph({"brain", "stem", "cells"})), 1);
    REQUIRE(s.size() == 1);
    CHECK(s[0].find("Brain-stem") != std::string::npos);
  }

  TEST_CASE("raw and normalized layers are aligned") {
    const auto idx = CorpusIndex::from_lines(kToy, {});
    for (std::size_t i = 0; i < idx.sentence_count(); ++i) {
      const auto toks = idx.normalized_tokens(i);
      for (std::size_t k = 0; k < toks.size(); ++k) {
        const auto [b, e] = idx.raw_span(i, k);
        CHECK(to_lower(idx.raw_sentence(i).substr(b, e - b)) == toks[k]);
      }
    }
  }

  TEST_CASE("token totals are additive over corpora") {
    const auto a = oracle::random_corpus(50, 1, oracle::small_vocab());
    const auto b = oracle::random_corpus(70, 2, oracle::small_vocab());
    auto ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    CHECK(CorpusIndex::from_lines(ab, {}).total_ngrams() ==
          CorpusIndex::from_lines(a, {}).total_ngrams() + CorpusIndex::from_lines(b, {}).total_ngrams());
  }

  TEST_CASE("oracle equivalence and gap monotonicity on a random corpus") {
    const auto lines = oracle::random_corpus(1500, 7, oracle::small_vocab());
    const auto idx = CorpusIndex::from_lines(lines, {});
    const auto& vocab = oracle::small_vocab();
    std::mt19937 rng(99);
    std::uniform_int_distribution<std::size_t> w(0, vocab.size() - 1), len(1, 3), alts(1, 2);
    std::uniform_int_distribution<int> g(0, 8);
    auto random_phrase = [&] {
      Phrase p;
      for (std::size_t k = len(rng); k > 0; --k) {
        Slot s;
        for (std::size_t a = alts(rng); a > 0; --a) s.push_back(vocab[w(rng)]);
        p.push_back(s);
      }
      return p;
    };
    std::size_t mismatches = 0;
    for (int i = 0; i < 300; ++i) {
      const auto p = random_phrase();
      mismatches += idx.count_phrase(p) != oracle::count_phrase(lines, oph(p));
      const auto r = random_phrase();
      int lo = g(rng), hi = g(rng);
      if (lo > hi) std::swap(lo, hi);
      const auto c = idx.count_gap(p, r, lo, hi);
      mismatches += c != oracle::count_gap(lines, oph(p), oph(r), lo, hi);
      if (hi < 8) CHECK(idx.count_gap(p, r, lo, hi + 1) >= c);
      if (lo > 0) CHECK(idx.count_gap(p, r, lo - 1, hi) >= c);
    }
    CHECK(mismatches == 0);
  }

  TEST_CASE("cache transparency and replay") {
    const auto lines = oracle::random_corpus(300, 3, oracle::small_vocab());
    const auto idx = CorpusIndex::from_lines(lines, {});
    CountsCache cache;
    CachedProvider cached(idx, cache);
    std::vector<CountQuery> qs{CountQuery::exact(ph({"health", "care"})),
                               CountQuery::exact({Slot{"cell", "cells"}}),
                               CountQuery::with_gap(ph({"stem"}), 1, 3, ph({"cells"}))};
    for (const auto& q : qs) CHECK(cached.count(q) == idx.count(q));
    for (const auto& q : qs) CHECK(cached.count(q) == idx.count(q));  // served from the cache
    CHECK(cached.total_ngrams() == idx.total_ngrams());
    CHECK(cache.dirty());

    const auto f = std::filesystem::temp_directory_path() / "nctk_test_cache.tsv";
    cache.save(f);
    CHECK_FALSE(cache.dirty());
    const auto loaded = CountsCache::load(f);
    const auto replay = TableProvider::replay(loaded);
    for (const auto& q : qs) CHECK(replay.count(q) == idx.count(q));
    CHECK(replay.total_ngrams() == idx.total_ngrams());
    CHECK_THROWS_AS(replay.count(CountQuery::exact(ph({"never", "asked"}))), ProviderError);

    // sorted TSV
    std::ifstream in(f);
    std::vector<std::string> keys;
    for (std::string line; std::getline(in, line);) keys.push_back(line.substr(0, line.find('\t')));
    CHECK(std::is_sorted(keys.begin(), keys.end()));
  }

  TEST_CASE("malformed cache files are data errors") {
    CHECK_THROWS_AS(CountsCache::load(temp_file("bad_cache.tsv", "health care\tmany\n")), DataError);
    CHECK_THROWS_AS(CountsCache::load("/nonexistent/cache.tsv"), DataError);
  }
}
