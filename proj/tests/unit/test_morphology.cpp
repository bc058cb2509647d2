#include <doctest.h>

#include <algorithm>
#include <random>

#include "nctk/morphology.hpp"
#include "nctk/corpus_index.hpp"

using namespace nctk;

namespace {

const MorphLexicon& fixture() {
  static const MorphLexicon lex = MorphLexicon::from_tsv(
      "# fixture\n"
      "analysis\tanalyses\n"
      "include\tincludes,included,including\n"
      "run\truns,ran,running\n"
      "child\tchildren\n");
  return lex;
}

bool has(const std::vector<std::string>& v, const std::string& w) { return std::ranges::find(v, w) != v.end(); }

}  // namespace

TEST_SUITE("morphology") {
  TEST_CASE("inflections") {
    const auto& lex = fixture();
    CHECK(lex.inflections("tumor") == std::vector<std::string>{"tumor", "tumors"});
    CHECK(lex.inflections("analysis") == std::vector<std::string>{"analyses", "analysis"});
    CHECK(lex.inflections("blorf") == std::vector<std::string>{"blorf", "blorfs"});
    CHECK(lex.inflections("Children") == std::vector<std::string>{"child", "children"});
    CHECK(lex.inflections("box") == std::vector<std::string>{"box", "boxes"});
    CHECK(lex.inflections("body") == std::vector<std::string>{"bodies", "body"});
    CHECK(lex.inflections("cells") == std::vector<std::string>{"cell", "cells"});
  }

  TEST_CASE("lemmas") {
    const auto& lex = fixture();
    CHECK(lex.lemma("includes") == "include");
    CHECK(lex.lemma("include") == "include");
    CHECK(lex.lemma("running") == "run");
    CHECK(lex.lemma("runnings") == "running");
    CHECK(lex.lemma("INCLUDES") == "include");
    CHECK(lex.verb_lemma("stopped") == "stop");
    CHECK(lex.verb_lemma("causing") == "cause");
    CHECK(lex.verb_lemma("carried") == "carry");
  }

  TEST_CASE("fallback rule table") {
    CHECK(fallback_plural("bus") == "buses");
    CHECK(fallback_plural("church") == "churches");
    CHECK(fallback_plural("dish") == "dishes");
    CHECK(fallback_plural("fly") == "flies");
    CHECK(fallback_plural("day") == "days");
    CHECK(fallback_noun_lemma("flies") == "fly");
    CHECK(fallback_noun_lemma("glass") == "glass");
    CHECK(regular_verb_forms("cause") == std::vector<std::string>{"cause", "caused", "causes", "causing"});
  }

  TEST_CASE("number") {
    const auto& lex = fixture();
    CHECK(lex.number("children") == Number::Plural);
    CHECK(lex.number("child") == Number::Singular);
    CHECK(lex.number("cells") == Number::Plural);
    CHECK(lex.number("IBM") == Number::Unknown);
    CHECK(lex.number("b12") == Number::Unknown);
    CHECK(lex.plural("child") == "children");
    CHECK(lex.plural("cell") == "cells");
  }

  TEST_CASE("malformed lexicon lines are data errors") {
    CHECK_THROWS_AS(MorphLexicon::from_tsv("cell cells\n"), DataError);
    CHECK_THROWS_AS(MorphLexicon::load("/nonexistent/lexicon.tsv"), DataError);
  }

  TEST_CASE("bundled lexicon loads") {
    const auto& lex = MorphLexicon::bundled();
    CHECK(lex.size() > 20);
    CHECK(lex.lemma("is") == "be");
    CHECK(lex.verb_lemma("donating") == "donate");
    CHECK(lex.lemma("analyses") == "analysis");
  }

  // Random words avoid s and y and end in a plain consonant: regular fallback
  // rules cannot invert "bus" -> "buses" and "cause" -> "causes" at the same
  // time, nor "ache" -> "aches" and "church" -> "churches".
  TEST_CASE("properties: inflections contain the word, lemma is idempotent, round trip") {
    const auto& lex = fixture();
    std::mt19937 rng(5);
    const std::string letters = "abcdefghijklmnoprtu";
    std::uniform_int_distribution<std::size_t> len(3, 9), ch(0, letters.size() - 1);
    std::vector<std::string> words{"analysis", "analyses", "include", "ran", "children", "child"};
    for (int i = 0; i < 500; ++i) {
      std::string w;
      for (auto n = len(rng); n > 0; --n) w += letters[ch(rng)];
      w += "bdgklmnprt"[ch(rng) % 10];
      words.push_back(w);
    }
    for (const auto& w : words) {
      CHECK(has(lex.inflections(w), w));
      const auto l = lex.lemma(w);
      CHECK(lex.lemma(l) == l);
      for (const auto& f : lex.inflections(l)) CHECK(lex.lemma(f) == l);
    }
  }
}
