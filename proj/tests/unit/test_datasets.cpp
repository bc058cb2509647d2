#include <doctest.h>

#include <algorithm>

#include "nctk/datasets.hpp"
#include "nctk/resources.hpp"

using namespace nctk;

TEST_SUITE("datasets") {
  TEST_CASE("bundled biomedical bracketing table") {
    const auto items = load_bracketing(data_file("biomedical.tsv"));
    CHECK(items.size() == 429);
    const auto left = std::ranges::count_if(items, [](const auto& i) { return i.gold == Bracketing::Left; });
    const auto right = std::ranges::count_if(items, [](const auto& i) { return i.gold == Bracketing::Right; });
    CHECK(left == 361);
    CHECK(right == 68);
    CHECK(items[0].triple.w1 == "polymerase");
    CHECK(items[0].frequency == 5208u);
    CHECK(std::ranges::all_of(items, [](const auto& i) { return i.frequency.has_value(); }));
  }

  TEST_CASE("bundled coordination table") {
    const auto items = load_coordination(data_file("coordination.tsv"));
    REQUIRE(items.size() == 428);
    const auto noun = std::ranges::count_if(items, [](const auto& i) { return i.gold == Coordination::NounCoord; });
    CHECK(noun == 242);
    CHECK(100.0 * double(noun) / double(items.size()) == doctest::Approx(56.54).epsilon(1e-4));
    CHECK(items[3].gold == Coordination::NPCoord);
    CHECK(items[3].quad.c == "or");
  }

  TEST_CASE("bracketing rows") {
    const auto items = parse_bracketing_dataset("# comment\n\nliver cell antibody left\nA B C\nx y z right 12\n");
    REQUIRE(items.size() == 3);
    CHECK(items[0].gold == Bracketing::Left);
    CHECK(items[1].gold == Bracketing::Abstain);
    CHECK(items[1].triple.w1 == "a");
    CHECK(items[2].frequency == 12u);
    CHECK_THROWS_WITH_AS(parse_bracketing_dataset("a b\n"), doctest::Contains("line 1"), DataError);
    CHECK_THROWS_WITH_AS(parse_bracketing_dataset("\na b c sideways\n"), doctest::Contains("line 2"), DataError);
    CHECK_THROWS_WITH_AS(parse_bracketing_dataset("a b c left many\n"), doctest::Contains("bad frequency"), DataError);
    CHECK_THROWS_WITH_AS(load_bracketing("/nonexistent/x.tsv"), doctest::Contains("cannot open"), DataError);
  }

  TEST_CASE("pp and coordination rows") {
    const auto pp = parse_pp_dataset("eat spaghetti with fork V\nate spaghetti with sauce N\nsaw\tman\twith\ttelescope\n");
    REQUIRE(pp.size() == 3);
    CHECK(pp[0].gold == Attachment::Verb);
    CHECK(pp[1].gold == Attachment::Noun);
    CHECK(pp[2].gold == Attachment::Abstain);
    CHECK_THROWS_AS(parse_pp_dataset("a b c\n"), DataError);
    CHECK_THROWS_AS(parse_pp_dataset("a b c d X\n"), DataError);

    const auto co = parse_coordination_dataset("bar and pie graph noun 0 0\nboys and girls toys NP ? 1\n");
    REQUIRE(co.size() == 2);
    CHECK(co[0].quad.n1_determiner == false);
    CHECK_FALSE(co[1].quad.n1_determiner.has_value());
    CHECK(co[1].quad.n2_determiner == true);
    CHECK_THROWS_WITH_AS(parse_coordination_dataset("a and b c noun 1\n"), doctest::Contains("pairs"), DataError);
    CHECK_THROWS_WITH_AS(parse_coordination_dataset("a and b c noun 1 x\n"), doctest::Contains("determiner"),
                         DataError);
  }

  TEST_CASE("SAT blocks") {
    const auto qs = parse_sat_dataset("ostrich bird\nlion cat\ngoose flock\nb\n\n# next\nx y\na b\nc d\n");
    REQUIRE(qs.size() == 2);
    CHECK(qs[0].stem.first == "ostrich");
    CHECK(qs[0].candidates.size() == 2);
    CHECK(qs[0].gold == 1u);
    CHECK_FALSE(qs[1].gold.has_value());
    CHECK_THROWS_AS(parse_sat_dataset("x y\n"), DataError);
    CHECK_THROWS_AS(parse_sat_dataset("x y\na b\ne\n"), DataError);
    CHECK_THROWS_AS(parse_sat_dataset("x y\na b\nc d\ne f\ng h\ni j\nk l\n"), DataError);
  }

  TEST_CASE("SemEval rows") {
    const auto ex = parse_semeval_dataset(
        "Content-Container\tThe <e1>vessel</e1> held <e2>tools</e2>.\ttrue\t\"* tools in * vessel\"\n"
        "Content-Container\tA <e1>box</e1> of <e2>chocolates</e2>.\t?\n");
    REQUIRE(ex.size() == 2);
    CHECK(ex[0].gold == true);
    CHECK(ex[0].e2_text() == "tools");
    CHECK(ex[0].query == "\"* tools in * vessel\"");
    CHECK_FALSE(ex[1].gold.has_value());
    CHECK_THROWS_WITH_AS(parse_semeval_dataset("r\tno markup\ttrue\n"), doctest::Contains("line 1"), DataError);
    CHECK_THROWS_AS(parse_semeval_dataset("r\tThe <e1>a</e1> <e2>b</e2>\tmaybe\n"), DataError);
  }

  TEST_CASE("label columns") {
    CHECK(parse_label_column("a b left\nc d right\n") == std::vector<std::string>{"left", "right"});
    CHECK(parse_label_column("# w1\tlabel\tscore\nx\tleft\t3\ny\tnone\t0\n") ==
          std::vector<std::string>{"left", "none"});
  }
}
