// One PASS/FAIL line per acceptance criterion. `--only NAME` runs a single
// criterion; the exit status is non-zero when any criterion that ran failed.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nctk/bracketer.hpp"
#include "nctk/coordination.hpp"
#include "nctk/counts_cache.hpp"
#include "nctk/datasets.hpp"
#include "nctk/human_verbs.hpp"
#include "nctk/pp_attachment.hpp"
#include "nctk/relational.hpp"
#include "nctk/resources.hpp"
#include "nctk/stats.hpp"
#include "oracle.hpp"

using namespace nctk;
namespace fs = std::filesystem;

namespace {

const fs::path kData = NCTK_TEST_DATA;

// Collects failed checks; the criterion passes when there are none.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (!ok) failed_.push_back(what);
  }
  void near(double got, double want, double tol, const std::string& what) {
    std::ostringstream s;
    s << what << " = " << got << " (want " << want << " +- " << tol << ")";
    expect(std::abs(got - want) <= tol, s.str());
  }
  bool ok() const { return failed_.empty(); }
  std::string summary() const {
    if (failed_.empty()) return std::to_string(total_) + " checks";
    std::string s = std::to_string(failed_.size()) + "/" + std::to_string(total_) + " failed: " + failed_.front();
    for (std::size_t i = 1; i < failed_.size() && i < 4; ++i) s += "; " + failed_[i];
    return s;
  }

 private:
  std::size_t total_ = 0;
  std::vector<std::string> failed_;
};

void statistics(Checks& c) {
  const auto w = wilson_interval(195, 244, 0.95);
  c.near(w.reported_margin(), 0.0547, 0.001, "wilson half-width");
  c.near(w.estimate, 0.7992, 0.0005, "wilson center");
  const auto d = wald_interval(195, 244, 0.95);
  c.near(d.low, 0.7492, 0.001, "wald low");
  c.near(d.high, 0.8492, 0.001, "wald high");
  c.near(pearson_chi2(189, 55, 195, 49).p, 0.5072, 0.002, "p(189,55,195,49)");
  const auto a = pearson_chi2(197, 47, 218, 26);
  c.near(a.chi2, 7.104, 0.01, "chi2(197,47,218,26)");
  c.near(a.p, 0.0077, 0.0005, "p(197,47,218,26)");
  const auto b = pearson_chi2(218, 26, 203, 41);
  c.near(b.chi2, 3.893, 0.01, "chi2(218,26,203,41)");
  c.near(b.p, 0.0485, 0.001, "p(218,26,203,41)");
}

void dataset_integrity(Checks& c) {
  const auto bio = load_bracketing(data_file("biomedical.tsv"));
  const auto left = std::ranges::count_if(bio, [](const auto& i) { return i.gold == Bracketing::Left; });
  const auto right = std::ranges::count_if(bio, [](const auto& i) { return i.gold == Bracketing::Right; });
  c.expect(bio.size() == 430, "biomedical rows = " + std::to_string(bio.size()) + " (want 430)");
  c.expect(left == 361, "biomedical left = " + std::to_string(left) + " (want 361)");
  c.expect(right == 69, "biomedical right = " + std::to_string(right) + " (want 69)");
  c.near(100.0 * double(left) / double(bio.size()), 83.95, 0.01, "biomedical left baseline");

  const auto co = load_coordination(data_file("coordination.tsv"));
  const auto noun = std::ranges::count_if(co, [](const auto& i) { return i.gold == Coordination::NounCoord; });
  c.expect(co.size() == 428, "coordination rows = " + std::to_string(co.size()) + " (want 428)");
  c.near(100.0 * double(noun) / double(co.size()), 56.54, 0.01, "coordination noun baseline");

  const auto r = make_report(183, 31, 30);
  c.near(100 * r.accuracy().value_or(0), 85.51, 0.01, "accuracy(183,31,30)");
  c.near(100 * r.coverage(), 87.70, 0.01, "coverage(183,31,30)");
}

void provider_oracle(Checks& c) {
  const auto& vocab = oracle::small_vocab();
  const auto lines = oracle::random_corpus(5000, 2024, vocab);
  const auto idx = CorpusIndex::from_lines(lines, {});
  std::vector<std::vector<std::string>> toks;
  for (const auto& l : lines) toks.push_back(oracle::tokens(l));

  auto brute_phrase = [&](const oracle::Phrase& p) {
    std::uint64_t n = 0;
    for (const auto& s : toks)
      for (std::size_t i = 0; i < s.size(); ++i) n += oracle::matches(s, i, p);
    return n;
  };
  auto brute_gap = [&](const oracle::Phrase& l, const oracle::Phrase& r, int lo, int hi) {
    std::uint64_t n = 0;
    for (const auto& s : toks)
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (!oracle::matches(s, i, l)) continue;
        for (int g = lo; g <= hi; ++g) n += oracle::matches(s, i + l.size() + g, r);
      }
    return n;
  };

  std::mt19937 rng(4242);
  std::uniform_int_distribution<std::size_t> w(0, vocab.size() - 1), len(1, 4), alts(1, 3);
  std::uniform_int_distribution<int> g(0, kMaxGap);
  auto random_phrase = [&] {
    Phrase p;
    for (std::size_t k = len(rng); k > 0; --k) {
      Slot s;
      for (std::size_t a = alts(rng); a > 0; --a) s.push_back(vocab[w(rng)]);
      p.push_back(s);
    }
    return p;
  };
  std::size_t mismatches = 0, nonzero = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto p = random_phrase();
    std::uint64_t got = 0, want = 0;
    if (i % 2 == 0) {
      got = idx.count(CountQuery::exact(p));
      want = brute_phrase(oracle::Phrase(p.begin(), p.end()));
    } else {
      const auto r = random_phrase();
      int lo = g(rng), hi = g(rng);
      if (lo > hi) std::swap(lo, hi);
      got = idx.count(CountQuery::with_gap(p, lo, hi, r));
      want = brute_gap(oracle::Phrase(p.begin(), p.end()), oracle::Phrase(r.begin(), r.end()), lo, hi);
    }
    mismatches += got != want;
    nonzero += want > 0;
  }
  c.expect(mismatches == 0, std::to_string(mismatches) + " of 1000 queries differ from the scanner");
  c.expect(nonzero >= 200, "too few queries with hits: " + std::to_string(nonzero));
}

TableProvider reported(std::map<std::string, std::uint64_t> t) {
  return TableProvider(std::move(t), std::nullopt, TableProvider::Miss::Zero, "reported");
}

void expect_decision(Checks& c, const BracketDecision& d, double left, double right, const std::string& what) {
  c.expect(d.first_score == left && d.second_score == right && d.label == Bracketing::Left,
           what + ": " + std::to_string(d.first_score) + " vs " + std::to_string(d.second_score) + " -> " +
               std::string(to_string(d.label)));
}

void worked_examples(Checks& c) {
  const MorphLexicon none;
  const NounTriple health("health", "care", "reform");
  const auto concat = reported({{"healthcare", 98600000}, {"healthcares", 33000}, {"carereform", 471},
                                {"carereforms", 27}, {"healthcare reform", 668000}, {"healthcare reforms", 77700},
                                {"health carereform", 289}, {"health carereforms", 15}});
  expect_decision(c, concatenation_decision(concat, health, ConcatVariant::Adjacency, none), 98633000, 498,
                  "concatenation");
  expect_decision(c, concatenation_decision(concat, health, ConcatVariant::Triple, none), 745700, 304, "triple");

  const auto wild = reported({{"health care *{1,1} reform", 556000}, {"health care *{1,1} reforms", 79700},
                              {"health cares *{1,1} reform", 1}, {"health *{1,1} care reform", 255000},
                              {"health *{1,1} care reforms", 17600}, {"healths *{1,1} care reform", 1}});
  expect_decision(c, wildcard_decision(wild, health, WildcardVariant::Adjacency, 1, none), 635701, 272601,
                  "wildcard");

  const auto misc = reported({{"reform health care", 137000}, {"reforms health care", 1010},
                              {"care reform health", 23300}, {"care reforms health", 1720},
                              {"tyrosine kinases activation", 882}, {"brain s stem cell", 4},
                              {"brain s stem cells", 281}, {"brain stem s cell", 2}, {"brain stem s cells", 3}});
  expect_decision(c, misc_decision(MiscKind::Reorder, misc, health, none), 138010, 25020, "reorder");
  expect_decision(c, misc_decision(MiscKind::Genitive, misc, NounTriple("brain", "stem", "cell"), none), 285, 5,
                  "genitive");
  expect_decision(c,
                  misc_decision(MiscKind::InflectionVariability, misc,
                                NounTriple("tyrosine", "kinase", "activation"), none),
                  882, 0, "inflection variability");
}

FeatureVector random_vector(std::mt19937& rng) {
  std::uniform_int_distribution<int> n(0, 6), key(0, 9);
  std::uniform_real_distribution<double> w(0.0, 5.0);
  FeatureVector v;
  for (int k = n(rng); k > 0; --k) v["f" + std::to_string(key(rng))] = w(rng);
  return v;
}

void properties(Checks& c) {
  std::mt19937 rng(31);
  std::size_t bad = 0;
  for (int i = 0; i < 10000; ++i) {
    const auto a = random_vector(rng), b = random_vector(rng);
    if (a.empty() && b.empty()) continue;
    const double d = dice(a, b);
    bad += std::abs(d - dice(b, a)) > 1e-12 || d < 0 || d > 1 + 1e-12;
    if (!a.empty()) bad += std::abs(dice(a, a) - 1) > 1e-12;
  }
  c.expect(bad == 0, "dice symmetry/range/identity violated " + std::to_string(bad) + " times");

  bad = 0;
  std::uniform_int_distribution<int> lab(0, 2), len(0, 12);
  for (int i = 0; i < 2000; ++i) {
    std::vector<BracketDecision> v;
    for (int k = len(rng); k > 0; --k) {
      BracketDecision d;
      d.label = static_cast<Bracketing>(lab(rng));
      v.push_back(d);
    }
    const std::optional<Bracketing> fb =
        lab(rng) == 0 ? std::nullopt : std::optional(static_cast<Bracketing>(lab(rng) % 2));
    const auto ref = majority_vote(v, fb);
    std::shuffle(v.begin(), v.end(), rng);
    bad += majority_vote(v, fb).label != ref.label;
  }
  c.expect(bad == 0, "majority vote changed under permutation " + std::to_string(bad) + " times");

  bad = 0;
  const MorphLexicon none;
  const NounTriple t("w1", "w2", "w3");
  std::uniform_int_distribution<std::uint64_t> uni(50, 400), bi(1, 40);
  for (int i = 0; i < 1000; ++i) {
    const TableProvider p({{"w1", uni(rng)}, {"w2", uni(rng)}, {"w3", uni(rng)}, {"w1 w2", bi(rng)},
                           {"w1 w3", bi(rng)}, {"w2 w3", bi(rng)}},
                          100000, TableProvider::Miss::Zero, "profile");
    bad += assoc_decision(BracketModel::Dependency, AssocKind::Pmi, p, none, t).label !=
           assoc_decision(BracketModel::Dependency, AssocKind::Prob, p, none, t).label;
  }
  c.expect(bad == 0, "PMI and probability dependency decisions differ " + std::to_string(bad) + " times");

  bad = 0;
  std::uniform_int_distribution<int> cell(1, 500);
  for (int i = 0; i < 2000; ++i) {
    const double a = cell(rng), b = cell(rng), x = cell(rng), d = cell(rng);
    const auto ref = pearson_chi2(a, b, x, d).chi2;
    bad += std::abs(pearson_chi2(x, d, a, b).chi2 - ref) > 1e-9 * (1 + ref) ||
           std::abs(pearson_chi2(b, a, d, x).chi2 - ref) > 1e-9 * (1 + ref);
  }
  c.expect(bad == 0, "chi-square not symmetric " + std::to_string(bad) + " times");

  bad = 0;
  for (std::uint64_t n = 1; n <= 300; ++n)
    for (std::uint64_t k = 0; k <= n; ++k) {
      const auto w = wilson_interval(k, n);
      bad += w.low < -1e-12 || w.high > 1 + 1e-12;
    }
  c.expect(bad == 0, "wilson interval left [0,1] " + std::to_string(bad) + " times");

  bad = 0;
  for (int i = 0; i < 500; ++i) {
    std::vector<LabeledVector> train;
    for (int k = 0; k < 12; ++k) train.push_back({random_vector(rng), "l" + std::to_string(lab(rng))});
    const auto q = random_vector(rng);
    const auto ref = knn_classify(train, q);
    std::shuffle(train.begin(), train.end(), rng);
    const auto got = knn_classify(train, q);
    bad += got.label != ref.label || got.similarity != ref.similarity;
  }
  c.expect(bad == 0, "1-nn depends on training order " + std::to_string(bad) + " times");
}

std::vector<std::string> read_lines(const fs::path& p) {
  std::istringstream in(read_text_file(p));
  std::vector<std::string> out;
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

void end_to_end(Checks& c) {
  const auto& lex = MorphLexicon::bundled();

  // bracketing: full standard vote, no default
  {
    const auto lines = read_lines(kData / "bracket_corpus.txt");
    const auto idx = CorpusIndex::from_lines(lines, {});
    const auto items = load_bracketing(kData / "bracket10.tsv");
    VoteConfig config;
    config.voters = VoteConfig::standard_voters();
    std::size_t right = 0;
    for (const auto& item : items) {
      const auto& t = item.triple;
      // the counts behind the chi-square voters agree with the scanner
      for (const auto& [a, b] : {std::pair{t.w1, t.w2}, std::pair{t.w2, t.w3}, std::pair{t.w1, t.w3}}) {
        const Phrase p{lex.inflections(a), lex.inflections(b)};
        c.expect(idx.count_phrase(p) == oracle::count_phrase(lines, oracle::Phrase(p.begin(), p.end())),
                 "bigram count " + a + " " + b);
      }
      const auto r = bracket(t, idx, lex, ParaphraseInventory::standard(), config);
      right += r.final.label == item.gold;
      c.expect(r.final.label == item.gold, "bracketing of " + t.text());
    }
    c.expect(right == 10 && items.size() == 10, "bracketing " + std::to_string(right) + "/10");
  }

  // PP attachment: of-rule and the six paraphrase pattern fixtures
  {
    const auto idx = CorpusIndex::from_lines(read_lines(kData / "pp_corpus.txt"), {});
    const auto config = PPConfig::standard();
    for (const auto& item : load_pp(kData / "pp_of.tsv")) {
      const auto r = pp_pipeline(item.quad, idx, lex, config);
      c.expect(r.final.label == Attachment::Noun && r.final.model == "of-rule", "of-rule on " + item.quad.text());
    }
    const auto patterns = load_pp(kData / "pp_patterns.tsv");
    c.expect(patterns.size() == 6, "six pattern fixtures");
    for (std::size_t k = 0; k < patterns.size(); ++k) {
      const auto& q = patterns[k].quad;
      const auto d = pp_paraphrase_decision(idx, q, static_cast<int>(k + 1), lex);
      c.expect(d.label == patterns[k].gold, "pattern " + std::to_string(k + 1) + " on " + q.text());
      c.expect(pp_pipeline(q, idx, lex, config).final.label == patterns[k].gold, "vote on " + q.text());
    }
  }

  // coordination: number agreement and h1 fixtures
  {
    const auto idx = CorpusIndex::from_lines(read_lines(kData / "coord_corpus.txt"), {});
    const auto config = CoordConfig::standard();
    const auto items = load_coordination(kData / "coord_fixtures.tsv");
    const std::vector<std::string> cue{"number", "number", "h1", "number"};
    c.expect(items.size() == cue.size(), "four coordination fixtures");
    for (std::size_t i = 0; i < items.size() && i < cue.size(); ++i) {
      const auto r = coord_pipeline(items[i].quad, idx, lex, config);
      const auto it = std::ranges::find(r.votes, cue[i], &CoordDecision::model);
      c.expect(it != r.votes.end() && it->label == items[i].gold, cue[i] + " cue on " + items[i].quad.text());
      c.expect(r.final.label == items[i].gold, "vote on " + items[i].quad.text());
    }
  }

  // relational similarity: rigged SAT block and a tie block
  {
    const auto idx = CorpusIndex::from_lines(read_lines(kData / "relsim_corpus.txt"), IngestConfig{.tagged = true});
    PairFeatureSource source(idx, lex);
    const auto qs = load_sat(kData / "sat.txt");
    c.expect(qs.size() == 2, "two SAT blocks");
    if (qs.size() == 2) {
      const auto solved = solve_sat(qs[0], source, KindMask{});
      c.expect(solved.choice.has_value() && solved.choice == qs[0].gold, "rigged SAT block solved");
      c.expect(!solve_sat(qs[1], source, KindMask{}).choice.has_value(), "tie SAT block abstains");
    }
  }
}

void human_verbs(Checks& c) {
  const auto& lex = MorphLexicon::bundled();
  for (const auto& [in, want] : std::vector<std::pair<const char*, const char*>>{
           {"can cause", "cause"}, {"seems to be", "be"}, {"made from", "be made from"}, {"is donating", "donate"}}) {
    const auto got = normalize_human_verb(in, lex);
    c.expect(got == want, std::string(in) + " -> " + got.value_or("REJECT"));
  }
}

struct Criterion {
  const char* name;
  void (*run)(Checks&);
  double limit_seconds;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {"statistics", statistics, 1},       {"dataset-integrity", dataset_integrity, 1},
      {"provider-oracle", provider_oracle, 30}, {"worked-examples", worked_examples, 1},
      {"properties", properties, 30},      {"end-to-end", end_to_end, 60},
      {"human-verbs", human_verbs, 1},
  };
  std::string only;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--only" && i + 1 < argc) only = argv[++i];
    else {
      std::cerr << "usage: nctk_acceptance [--only NAME]\n";
      return 2;
    }
  }
  if (!only.empty() && std::ranges::none_of(criteria, [&](const Criterion& c) { return only == c.name; })) {
    std::cerr << "unknown criterion: " << only << '\n';
    return 2;
  }

  bool all = true;
  for (const auto& crit : criteria) {
    if (!only.empty() && only != crit.name) continue;
    Checks checks;
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      crit.run(checks);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= crit.limit_seconds;
    const bool ok = error.empty() && checks.ok() && in_time;
    all = all && ok;
    std::ostringstream line;
    line << (ok ? "PASS " : "FAIL ") << crit.name << " (" << std::fixed;
    line.precision(3);
    line << secs << " s) ";
    if (!error.empty()) line << "error: " << error;
    else if (!in_time) line << "over the " << crit.limit_seconds << " s limit; " << checks.summary();
    else line << checks.summary();
    std::cout << line.str() << std::endl;
  }
  return all ? 0 : 1;
}
