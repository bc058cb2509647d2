#include <doctest.h>

#include <cmath>
#include <random>

#include "nctk/association.hpp"
#include "nctk/counts_cache.hpp"
#include "oracle.hpp"

using namespace nctk;

namespace {

// A provider answering from per-spelling counts; queries with alternatives
// sum their spellings.
TableProvider mock(std::map<std::string, std::uint64_t> t, std::uint64_t n) {
  return TableProvider(std::move(t), n, TableProvider::Miss::Zero, "mock");
}

const MorphLexicon kEmpty;

}  // namespace

TEST_SUITE("assoc-bracketing") {
  TEST_CASE("frequency sums the inflections of the head") {
    const std::vector<std::string> lines{"the stem cell line", "a stem cell", "stem cells grow",
                                         "stem cell", "old stem cells", "stem and cell"};
    const auto idx = CorpusIndex::from_lines(lines, {});
    const double expected = static_cast<double>(oracle::count_phrase(lines, {{"stem"}, {"cell", "cells"}}));
    CHECK(expected == 5);
    CHECK(assoc_score(AssocKind::Freq, idx, kEmpty, "stem", "cell") == expected);
  }

  TEST_CASE("probability, PMI and chi-square against direct evaluation") {
    // #(a b)=6, #(a)=10, #(b)=12, N=1000
    const auto p = mock({{"a b", 6}, {"a", 10}, {"b", 12}}, 1000);
    CHECK(assoc_score(AssocKind::Prob, p, kEmpty, "a", "b") == doctest::Approx(6.0 / 12));
    CHECK(assoc_score(AssocKind::Pmi, p, kEmpty, "a", "b") == doctest::Approx(std::log(1000.0 * 6 / (10 * 12))));
    const double A = 6, B = 4, C = 6, D = 1000 - 16;
    const double x2 = 1000 * std::pow(A * D - B * C, 2) / ((A + C) * (B + D) * (A + B) * (C + D));
    CHECK(assoc_score(AssocKind::Chi2, p, kEmpty, "a", "b") == doctest::Approx(x2));
  }

  TEST_CASE("chi-square on the reported table") {
    CHECK(chi_square({189, 55, 195, 49}) == doctest::Approx(0.4399).epsilon(1e-3));
    CHECK_THROWS_WITH_AS(chi_square({0, 0, 5, 5}), "degenerate table", StatError);
  }

  TEST_CASE("zero marginals") {
    const auto p = mock({{"a", 3}, {"b", 4}}, 100);
    CHECK_THROWS_WITH_AS(assoc_score(AssocKind::Pmi, p, kEmpty, "a", "b"), "zero marginal", StatError);
    CHECK_THROWS_WITH_AS(assoc_score(AssocKind::Prob, p, kEmpty, "a", "zzz"), "zero marginal", StatError);
    const auto d = assoc_decision(BracketModel::Adjacency, AssocKind::Pmi, p, kEmpty, NounTriple("a", "b", "c"));
    CHECK(d.label == Bracketing::Abstain);
    CHECK(d.diagnostic == "zero marginal");
  }

  TEST_CASE("decide") {
    CHECK(decide(BracketModel::Adjacency, 10, 3, 0).label == Bracketing::Left);
    CHECK(decide(BracketModel::Adjacency, 3, 10, 0).label == Bracketing::Right);
    CHECK(decide(BracketModel::Dependency, 7, 7, 0).label == Bracketing::Abstain);
    CHECK(decide(BracketModel::Adjacency, 10, 7, 5).label == Bracketing::Abstain);
    CHECK(decide(BracketModel::Adjacency, 12, 7, 5).label == Bracketing::Left);
    CHECK_THROWS_AS(decide(BracketModel::Adjacency, 1, 2, -1), std::invalid_argument);
  }

  TEST_CASE("adjacency and dependency compare the right pairs") {
    // w1 w2 strong, w2 w3 weak, w1 w3 strongest
    const auto p = mock({{"x y", 5}, {"y z", 2}, {"x z", 9}}, 100);
    const NounTriple t("x", "y", "z");
    CHECK(assoc_decision(BracketModel::Adjacency, AssocKind::Freq, p, kEmpty, t).label == Bracketing::Left);
    CHECK(assoc_decision(BracketModel::Dependency, AssocKind::Freq, p, kEmpty, t).label == Bracketing::Right);
  }

  TEST_CASE("property: dependency decisions under PMI and probability agree") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<std::uint64_t> uni(50, 400), bi(1, 40);
    for (int i = 0; i < 1000; ++i) {
      const auto p = mock({{"w1", uni(rng)}, {"w2", uni(rng)}, {"w3", uni(rng)},
                           {"w1 w2", bi(rng)}, {"w1 w3", bi(rng)}, {"w2 w3", bi(rng)}},
                          100000);
      const NounTriple t("w1", "w2", "w3");
      const auto pmi = assoc_decision(BracketModel::Dependency, AssocKind::Pmi, p, kEmpty, t);
      const auto prob = assoc_decision(BracketModel::Dependency, AssocKind::Prob, p, kEmpty, t);
      CHECK(pmi.label == prob.label);
    }
  }

  TEST_CASE("property: freq and prob decisions are scale invariant") {
    std::mt19937 rng(12);
    std::uniform_int_distribution<std::uint64_t> uni(50, 400), bi(0, 40), k(2, 50);
    for (int i = 0; i < 300; ++i) {
      std::map<std::string, std::uint64_t> t{{"w1", uni(rng)},    {"w2", uni(rng)},    {"w3", uni(rng)},
                                             {"w1 w2", bi(rng)}, {"w1 w3", bi(rng)}, {"w2 w3", bi(rng)}};
      auto scaled = t;
      const auto f = k(rng);
      for (auto& [key, v] : scaled) v *= f;
      const auto a = mock(t, 100000), b = mock(scaled, 100000 * f);
      const NounTriple tr("w1", "w2", "w3");
      for (auto kind : {AssocKind::Freq, AssocKind::Prob})
        for (auto model : {BracketModel::Adjacency, BracketModel::Dependency})
          CHECK(assoc_decision(model, kind, a, kEmpty, tr).label == assoc_decision(model, kind, b, kEmpty, tr).label);
    }
  }

  TEST_CASE("property: chi-square is symmetric under swapping (A,B) with (C,D)") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> cell(1, 500);
    for (int i = 0; i < 500; ++i) {
      const double a = cell(rng), b = cell(rng), c = cell(rng), d = cell(rng);
      CHECK(chi_square({a, b, c, d}) == doctest::Approx(chi_square({c, d, a, b})));
      CHECK(chi_square({a, b, c, d}) >= 0);
    }
  }

  TEST_CASE("noun triples") {
    const NounTriple t("Health", " care ", "REFORM");
    CHECK(t.text() == "health care reform");
    CHECK_THROWS_AS(NounTriple("a", "", "c"), std::invalid_argument);
  }
}
