#include <doctest.h>

#include "nctk/coordination.hpp"
#include "nctk/counts_cache.hpp"

using namespace nctk;

namespace {

const MorphLexicon kEmpty;

CorpusIndex index_of(std::vector<std::string> lines) { return CorpusIndex::from_lines(lines, {}); }

CoordQuad with_dets(CoordQuad q, std::optional<bool> d1, std::optional<bool> d2) {
  q.n1_determiner = d1;
  q.n2_determiner = d2;
  return q;
}

}  // namespace

TEST_SUITE("np-coordination") {
  TEST_CASE("quads") {
    const CoordQuad q("Car", "AND", "truck", "production");
    CHECK(q.text() == "car and truck production");
    CHECK_THROWS_AS(CoordQuad("car", "but", "truck", "production"), std::invalid_argument);
    CHECK_THROWS_AS(CoordQuad("car", "and", "", "production"), std::invalid_argument);
  }

  TEST_CASE("n-gram models") {
    const TableProvider p({{"car production", 50}, {"truck production", 20}, {"car and truck", 30},
                           {"car or truck", 40}, {"president executive", 1}, {"chief executive", 90}},
                          std::nullopt, TableProvider::Miss::Zero);
    const CoordQuad q("car", "and", "truck", "production");
    const auto i = coord_ngram_decision(p, q, 1, kEmpty);
    CHECK(i.label == Coordination::NounCoord);
    CHECK(i.first_score == 50);
    // (ii) pools and/or: 70 vs 50
    const auto ii = coord_ngram_decision(p, q, 2, kEmpty);
    CHECK(ii.label == Coordination::NounCoord);
    CHECK(coord_ngram_decision(p, CoordQuad("president", "and", "chief", "executive"), 1, kEmpty).label ==
          Coordination::NPCoord);
    CHECK_THROWS_AS(coord_ngram_decision(p, q, 3, kEmpty), std::invalid_argument);
  }

  TEST_CASE("inverting the n-gram mappings flips the labels") {
    const TableProvider p({{"car production", 50}, {"truck production", 20}, {"car and truck", 30}}, std::nullopt,
                          TableProvider::Miss::Zero);
    const CoordQuad q("car", "and", "truck", "production");
    CoordMapping inv{false, false};
    CHECK(coord_ngram_decision(p, q, 1, kEmpty, inv).label == Coordination::NPCoord);
    CHECK(coord_ngram_decision(p, q, 2, kEmpty).label == Coordination::NPCoord);
    CHECK(coord_ngram_decision(p, q, 2, kEmpty, inv).label == Coordination::NounCoord);
    const TableProvider none({}, std::nullopt, TableProvider::Miss::Zero);
    CHECK(coord_ngram_decision(none, q, 1, kEmpty).label == Coordination::Abstain);
  }

  TEST_CASE("paraphrase patterns") {
    const CoordQuad bar("bar", "and", "pie", "graph");
    CHECK(coord_paraphrase_decision(index_of({"a pie and bar graph"}), bar, 1, kEmpty).label ==
          Coordination::NounCoord);
    CHECK(coord_paraphrase_decision(index_of({"bar graph and pie graphs"}), bar, 3, kEmpty).label ==
          Coordination::NounCoord);
    CHECK(coord_paraphrase_decision(index_of({"pie graphs and bar graph"}), bar, 4, kEmpty).label ==
          Coordination::NounCoord);
    const CoordQuad pres("president", "and", "chief", "executive");
    CHECK(coord_paraphrase_decision(index_of({"the chief executive and president"}), pres, 2, kEmpty).label ==
          Coordination::NPCoord);
    // not found: the opposite label
    CHECK(coord_paraphrase_decision(index_of({"nothing"}), pres, 2, kEmpty).label == Coordination::NounCoord);
    CHECK(coord_paraphrase_decision(index_of({"nothing"}), bar, 1, kEmpty).label == Coordination::NPCoord);
  }

  TEST_CASE("paraphrase threshold") {
    const CoordQuad bar("bar", "and", "pie", "graph");
    const auto idx = index_of({"pie and bar graph", "pie and bar graphs", "x"});
    CHECK(coord_paraphrase_decision(idx, bar, 1, kEmpty, 2).label == Coordination::NounCoord);
    CHECK(coord_paraphrase_decision(idx, bar, 1, kEmpty, 3).label == Coordination::NPCoord);
    CHECK_THROWS_AS(coord_paraphrase_decision(idx, bar, 1, kEmpty, 0), std::invalid_argument);
    CHECK_THROWS_AS(coord_paraphrase_decision(idx, bar, 5, kEmpty), std::invalid_argument);
  }

  TEST_CASE("heuristics") {
    CHECK(coord_heuristic(CoordQuad("milk", "and", "milk", "products"), CoordHeuristic::H1, kEmpty).label ==
          Coordination::NPCoord);
    CHECK(coord_heuristic(CoordQuad("book", "and", "books", "stores"), CoordHeuristic::H1, kEmpty).label ==
          Coordination::NPCoord);
    CHECK(coord_heuristic(CoordQuad("car", "and", "truck", "production"), CoordHeuristic::H1, kEmpty).label ==
          Coordination::Abstain);
    const CoordQuad q("car", "or", "truck", "production");
    CHECK(coord_heuristic(with_dets(q, true, true), CoordHeuristic::H4, kEmpty).label == Coordination::NPCoord);
    CHECK(coord_heuristic(with_dets(q, true, false), CoordHeuristic::H4, kEmpty).label == Coordination::Abstain);
    CHECK(coord_heuristic(with_dets(q, true, false), CoordHeuristic::H5, kEmpty).label == Coordination::NounCoord);
    CHECK(coord_heuristic(with_dets(CoordQuad("car", "and", "truck", "production"), true, false), CoordHeuristic::H5,
                          kEmpty)
              .label == Coordination::Abstain);
    CHECK(coord_heuristic(with_dets(q, false, true), CoordHeuristic::H6, kEmpty).label == Coordination::NPCoord);
    CHECK(coord_heuristic(with_dets(q, std::nullopt, true), CoordHeuristic::H6, kEmpty).diagnostic ==
          "determiner context unknown");
  }

  TEST_CASE("number agreement") {
    CHECK(number_agreement_decision(CoordQuad("car", "and", "truck", "productions"), kEmpty).label ==
          Coordination::NounCoord);
    CHECK(number_agreement_decision(CoordQuad("cars", "and", "truck", "productions"), kEmpty).label ==
          Coordination::NPCoord);
    CHECK(number_agreement_decision(CoordQuad("car", "and", "truck", "production"), kEmpty).label ==
          Coordination::Abstain);
    CHECK(number_agreement_decision(CoordQuad("car", "and", "truck", "r2d2"), kEmpty).diagnostic == "number unknown");
  }

  TEST_CASE("surface features") {
    const CoordQuad q("buy", "and", "sell", "orders");
    auto vote = [&](std::vector<std::string> s) { return coord_surface_vote(s, q, kEmpty).decision.label; };
    for (const char* np : {"(buy) and sell orders", "buy (and sell orders)", "buy: and sell orders",
                           "buy; and sell orders", "buy. and sell orders"})
      CHECK_MESSAGE(vote({np}) == Coordination::NPCoord, np);
    for (const char* noun : {"buy- and sell orders", "buy and sell / orders", "(buy and sell) orders",
                             "buy and sell (orders)", "buy and sell, orders", "buy and sell: orders",
                             "buy and sell; orders", "buy and sell. orders"})
      CHECK_MESSAGE(vote({noun}) == Coordination::NounCoord, noun);
    CHECK(vote({"buy, and sell orders"}) == Coordination::Abstain);
    CHECK(vote({"buy and sell orders"}) == Coordination::Abstain);
    CHECK(vote({"buy. and sell orders", "buy and sell, orders"}) == Coordination::Abstain);
    CHECK(coord_surface_decision(index_of({"Buy- and sell order", "buy and sell orders"}), q, kEmpty, 10).label ==
          Coordination::NounCoord);
  }

  TEST_CASE("pipeline") {
    const auto idx = index_of({"pie and bar graph", "bar graph and pie graph", "the chief executive and president",
                               "bar graph", "pie graph"});
    const auto c = CoordConfig::standard();
    const auto r = coord_pipeline(CoordQuad("bar", "and", "pie", "graph"), idx, kEmpty, c);
    CHECK(r.votes.size() == c.voters.size());
    CHECK(r.final.label == Coordination::NounCoord);
    CoordConfig bad = c;
    bad.voters = {"para-5"};
    CHECK_THROWS_AS(coord_pipeline(CoordQuad("a", "and", "b", "c"), idx, kEmpty, bad), std::invalid_argument);
    bad = c;
    bad.threshold = 0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    // nothing decides: default
    CoordConfig only_h1;
    only_h1.voters = {"h1"};
    const auto d = coord_pipeline(CoordQuad("x", "and", "y", "z"), idx, kEmpty, only_h1);
    CHECK(d.final.label == Coordination::NPCoord);
    CHECK(d.final.diagnostic == "default");
  }
}
