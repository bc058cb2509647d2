#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <memory>
#include <ostream>
#include <sstream>

#include "nctk/bracketer.hpp"
#include "nctk/coordination.hpp"
#include "nctk/counts_cache.hpp"
#include "nctk/datasets.hpp"
#include "nctk/human_verbs.hpp"
#include "nctk/normalize.hpp"
#include "nctk/pp_attachment.hpp"
#include "nctk/relational.hpp"
#include "nctk/stats.hpp"

namespace nctk::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ProviderOptions {
  std::string index, corpus, cache;
  bool tagged = false;
};

struct CommonOptions {
  std::string lexicon;
  std::string report;
  std::string format = "text";
};

// Owns whatever backs the count provider; not movable because the cached
// provider keeps references into it.
struct ProviderHolder {
  std::optional<CorpusIndex> index;
  CountsCache cache;
  std::filesystem::path cache_path;
  std::unique_ptr<TableProvider> replay;
  std::unique_ptr<CachedProvider> cached;
  const CountProvider* provider = nullptr;

  void finish() {
    if (cached && cache.dirty()) cache.save(cache_path);
  }
};

std::unique_ptr<ProviderHolder> open_provider(const ProviderOptions& o) {
  auto h = std::make_unique<ProviderHolder>();
  if (!o.index.empty() && !o.corpus.empty()) throw UsageError("give either --index or --corpus, not both");
  if (!o.index.empty()) h->index = CorpusIndex::load(o.index);
  else if (!o.corpus.empty()) h->index = CorpusIndex::build(o.corpus, IngestConfig{o.tagged});

  if (h->index) {
    h->provider = &*h->index;
    if (!o.cache.empty()) {
      h->cache_path = o.cache;
      if (std::filesystem::exists(h->cache_path)) h->cache = CountsCache::load(h->cache_path);
      h->cached = std::make_unique<CachedProvider>(*h->index, h->cache);
      h->provider = h->cached.get();
    }
  } else if (!o.cache.empty()) {
    h->cache = CountsCache::load(o.cache);
    h->replay = std::make_unique<TableProvider>(TableProvider::replay(h->cache));
    h->provider = h->replay.get();
  } else {
    throw UsageError("one of --index, --corpus or --cache is required");
  }
  return h;
}

const MorphLexicon& lexicon(const CommonOptions& c, std::optional<MorphLexicon>& storage) {
  if (c.lexicon.empty()) return MorphLexicon::bundled();
  storage = MorphLexicon::load(c.lexicon);
  return *storage;
}

void add_provider_options(CLI::App* app, ProviderOptions& o) {
  app->add_option("--index", o.index, "Index file built by `nctk index`");
  app->add_option("--corpus", o.corpus, "Corpus file (one sentence per line), indexed on the fly");
  app->add_flag("--tagged", o.tagged, "Corpus tokens are word_TAG");
  app->add_option("--cache", o.cache,
                  "Counts cache TSV: recorded when an index is given, replayed when it is the only source");
}

void add_common_options(CLI::App* app, CommonOptions& c) {
  app->add_option("--lexicon", c.lexicon, "Morphology lexicon TSV (default: bundled)");
  app->add_option("--report", c.report, "Write per-item predictions as TSV");
  app->add_option("--format", c.format, "Summary format")->check(CLI::IsMember({"text", "tsv"}));
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s + ",") {
    if (ch == ',') {
      auto t = std::string(trim(cur));
      if (!t.empty()) out.push_back(t);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  return out;
}

std::vector<std::string> expand_voters(const std::string& spec, const std::vector<std::string>& standard,
                                       const std::vector<std::string>& all) {
  if (spec == "standard") return standard;
  if (spec == "all") return all;
  return split_list(spec);
}

// Writes to the file, or to `fallback` for "-".
void write_output(const std::string& path, const std::string& text, std::ostream& fallback) {
  if (path == "-") {
    fallback << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DataError("cannot write " + path);
  f << text;
}

void print_reports(std::ostream& out, const std::vector<NamedReport>& rows, const std::string& format) {
  out << (format == "tsv" ? report_tsv(rows) : report_summary(rows));
}

// Per-voter and final-vote reports over the rows that have a gold label.
template <TriLabel L, typename Result>
std::vector<NamedReport> vote_reports(const std::vector<Result>& results, const std::vector<L>& gold,
                                      const std::vector<std::string>& voters) {
  std::vector<NamedReport> rows;
  std::vector<std::vector<L>> pred(voters.size() + 1);
  std::vector<L> g;
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (gold[i] == L::Abstain) continue;
    g.push_back(gold[i]);
    for (std::size_t v = 0; v < voters.size(); ++v) {
      L label = L::Abstain;
      for (const auto& d : results[i].votes)
        if (d.model == voters[v]) label = d.label;
      pred[v].push_back(label);
    }
    pred.back().push_back(results[i].final.label);
  }
  if (g.empty()) return rows;
  for (std::size_t v = 0; v < voters.size(); ++v)
    rows.push_back({voters[v], evaluate<L>(pred[v], g)});
  rows.push_back({"vote", evaluate<L>(pred.back(), g)});
  return rows;
}

template <typename Result>
std::vector<std::string> voter_names(const std::vector<Result>& results) {
  std::vector<std::string> names;
  for (const auto& r : results)
    for (const auto& d : r.votes)
      if (std::ranges::find(names, d.model) == names.end()) names.push_back(d.model);
  return names;
}

template <typename Result>
std::string vote_cells(const Result& r, const std::vector<std::string>& voters) {
  std::string s;
  for (const auto& v : voters) {
    std::string_view label = "-";
    for (const auto& d : r.votes)
      if (d.model == v) label = to_string(d.label);
    s += '\t';
    s += label;
  }
  return s;
}

std::string label_or_none(std::string_view l) { return l == "abstain" || l.empty() ? "none" : std::string(l); }

// ---- index ----------------------------------------------------------------

int cmd_index(const ProviderOptions& p, const std::string& out_path, std::ostream& out) {
  if (p.corpus.empty()) throw UsageError("--corpus is required");
  const auto idx = CorpusIndex::build(p.corpus, IngestConfig{p.tagged});
  idx.save(out_path);
  out << "sentences\t" << idx.sentence_count() << "\ntokens\t" << idx.total_ngrams() << "\ntagged\t"
      << (idx.tagged() ? "yes" : "no") << "\nconfig\t" << idx.provenance().config_hash << '\n';
  return kOk;
}

// ---- bracket --------------------------------------------------------------

struct BracketOptions {
  std::string dataset, preset, voters, default_label, inventory;
  std::optional<double> margin;
  std::optional<std::size_t> snippet_limit;
};

int cmd_bracket(const ProviderOptions& po, const CommonOptions& co, const BracketOptions& bo, std::ostream& out) {
  VoteConfig config;
  config.voters = VoteConfig::standard_voters();
  if (!bo.preset.empty()) config = VoteConfig::preset(bo.preset);
  if (!bo.voters.empty()) config.voters = expand_voters(bo.voters, VoteConfig::standard_voters(), VoteConfig::all_voters());
  if (!bo.default_label.empty()) {
    const auto l = parse_bracketing(bo.default_label);
    if (!l) throw UsageError("--default must be left, right or none");
    config.default_label = *l == Bracketing::Abstain ? std::nullopt : std::optional(*l);
  }
  if (bo.margin) config.margin = *bo.margin;
  if (bo.snippet_limit) config.snippet_limit = *bo.snippet_limit;
  config.validate();

  const auto items = load_bracketing(bo.dataset);
  const auto inv = bo.inventory.empty() ? ParaphraseInventory::standard() : ParaphraseInventory::load(bo.inventory);
  std::optional<MorphLexicon> lex_storage;
  const auto& lex = lexicon(co, lex_storage);
  auto holder = open_provider(po);

  std::vector<BracketResult> results;
  std::vector<Bracketing> gold;
  for (const auto& item : items) {
    results.push_back(bracket(item.triple, *holder->provider, lex, inv, config));
    gold.push_back(item.gold);
  }
  holder->finish();

  if (!co.report.empty()) {
    std::ostringstream r;
    r << "# w1\tw2\tw3\tgold\tlabel";
    for (const auto& v : config.voters) r << '\t' << v;
    r << '\n';
    for (std::size_t i = 0; i < results.size(); ++i) {
      const auto& t = results[i].triple;
      r << t.w1 << '\t' << t.w2 << '\t' << t.w3 << '\t' << label_or_none(to_string(gold[i])) << '\t'
        << label_or_none(to_string(results[i].final.label)) << vote_cells(results[i], config.voters) << '\n';
    }
    write_output(co.report, r.str(), out);
  }
  print_reports(out, vote_reports(results, gold, config.voters), co.format);
  return kOk;
}

// ---- ppattach -------------------------------------------------------------

struct PPOptions {
  std::string dataset, voters, default_label;
  bool no_of_first = false, backoff = false;
  std::optional<std::size_t> snippet_limit;
};

int cmd_pp(const ProviderOptions& po, const CommonOptions& co, const PPOptions& o, std::ostream& out) {
  auto config = PPConfig::standard();
  if (!o.voters.empty()) config.voters = expand_voters(o.voters, PPConfig::standard_voters(), PPConfig::all_voters());
  if (!o.default_label.empty()) {
    const auto l = parse_attachment(o.default_label);
    if (!l) throw UsageError("--default must be noun, verb or none");
    config.default_label = *l == Attachment::Abstain ? std::nullopt : std::optional(*l);
  }
  config.of_rule_first = !o.no_of_first;
  if (o.snippet_limit) config.snippet_limit = *o.snippet_limit;
  config.validate();

  const auto items = load_pp(o.dataset);
  std::optional<MorphLexicon> lex_storage;
  const auto& lex = lexicon(co, lex_storage);
  auto holder = open_provider(po);

  if (o.backoff) {
    std::vector<PPQuad> quads;
    for (const auto& it : items) quads.push_back(it.quad);
    config.backoff = std::make_shared<const BackoffModel>(bootstrap_backoff(quads, *holder->provider, lex, config));
  }

  std::vector<PPResult> results;
  std::vector<Attachment> gold;
  for (const auto& item : items) {
    results.push_back(pp_pipeline(item.quad, *holder->provider, lex, config));
    gold.push_back(item.gold);
  }
  holder->finish();

  const auto voters = voter_names(results);
  if (!co.report.empty()) {
    std::ostringstream r;
    r << "# v\tn1\tp\tn2\tgold\tlabel";
    for (const auto& v : voters) r << '\t' << v;
    r << '\n';
    for (std::size_t i = 0; i < results.size(); ++i) {
      const auto& q = results[i].quad;
      r << q.v << '\t' << q.n1 << '\t' << q.p << '\t' << q.n2 << '\t' << label_or_none(to_string(gold[i])) << '\t'
        << label_or_none(to_string(results[i].final.label)) << vote_cells(results[i], voters) << '\n';
    }
    write_output(co.report, r.str(), out);
  }
  print_reports(out, vote_reports(results, gold, voters), co.format);
  return kOk;
}

// ---- coord ----------------------------------------------------------------

struct CoordOptions {
  std::string dataset, voters, default_label;
  std::uint64_t threshold = 1;
  bool invert_i = false, invert_ii = false;
  std::optional<std::size_t> snippet_limit;
};

int cmd_coord(const ProviderOptions& po, const CommonOptions& co, const CoordOptions& o, std::ostream& out) {
  auto config = CoordConfig::standard();
  if (!o.voters.empty())
    config.voters = expand_voters(o.voters, CoordConfig::standard_voters(), CoordConfig::all_voters());
  if (!o.default_label.empty()) {
    const auto l = parse_coordination(o.default_label);
    if (!l) throw UsageError("--default must be noun, np or none");
    config.default_label = *l == Coordination::Abstain ? std::nullopt : std::optional(*l);
  }
  config.threshold = o.threshold;
  config.mapping.n1h_over_n2h_is_noun = !o.invert_i;
  config.mapping.conj_over_n1h_is_noun = !o.invert_ii;
  if (o.snippet_limit) config.snippet_limit = *o.snippet_limit;
  config.validate();

  const auto items = load_coordination(o.dataset);
  std::optional<MorphLexicon> lex_storage;
  const auto& lex = lexicon(co, lex_storage);
  auto holder = open_provider(po);

  std::vector<CoordResult> results;
  std::vector<Coordination> gold;
  for (const auto& item : items) {
    results.push_back(coord_pipeline(item.quad, *holder->provider, lex, config));
    gold.push_back(item.gold);
  }
  holder->finish();

  if (!co.report.empty()) {
    std::ostringstream r;
    r << "# n1\tc\tn2\th\tgold\tlabel";
    for (const auto& v : config.voters) r << '\t' << v;
    r << '\n';
    for (std::size_t i = 0; i < results.size(); ++i) {
      const auto& q = results[i].quad;
      r << q.n1 << '\t' << q.c << '\t' << q.n2 << '\t' << q.h << '\t' << label_or_none(to_string(gold[i])) << '\t'
        << label_or_none(to_string(results[i].final.label)) << vote_cells(results[i], config.voters) << '\n';
    }
    write_output(co.report, r.str(), out);
  }
  print_reports(out, vote_reports(results, gold, config.voters), co.format);
  return kOk;
}

// ---- relational similarity -----------------------------------------------

// Tagged sentences of the index, or the bundled lexicon tagger's output for
// plain corpora.
std::vector<TaggedSentence> sentences_for(const CorpusIndex& index, const MorphLexicon& lex) {
  if (index.tagged()) return tagged_sentences(index);
  std::vector<TaggedSentence> out;
  const auto& tagger = LexiconTagger::bundled();
  for (std::size_t i = 0; i < index.sentence_count(); ++i) out.push_back(tagger.tag(index.raw_sentence(i), lex));
  return out;
}

CorpusIndex open_index(const ProviderOptions& o) {
  if (!o.index.empty()) return CorpusIndex::load(o.index);
  if (!o.corpus.empty()) return CorpusIndex::build(o.corpus, IngestConfig{o.tagged});
  throw UsageError("--index or --corpus is required");
}

struct RelsimOptions {
  std::vector<std::string> pairs;
  std::string pairs_file, kinds = "vpc", human_verbs;
  bool verbs = false, similarity = false;
};

std::vector<WordPair> read_pairs(const RelsimOptions& o) {
  std::vector<WordPair> out;
  for (const auto& p : o.pairs) {
    const auto parts = split_list(p);
    if (parts.size() != 2) throw UsageError("--pair expects noun1,noun2");
    out.push_back({to_lower(parts[0]), to_lower(parts[1])});
  }
  if (!o.pairs_file.empty()) {
    std::istringstream in(read_text_file(o.pairs_file));
    std::size_t line_no = 0;
    for (std::string line; std::getline(in, line);) {
      ++line_no;
      const auto t = trim(line);
      if (t.empty() || t.front() == '#') continue;
      const auto w = split_whitespace(t);
      if (w.size() != 2) throw DataError("line " + std::to_string(line_no) + ": expected two nouns");
      out.push_back({to_lower(w[0]), to_lower(w[1])});
    }
  }
  return out;
}

int cmd_relsim(const ProviderOptions& po, const CommonOptions& co, const RelsimOptions& o, std::ostream& out) {
  std::optional<MorphLexicon> lex_storage;
  const auto& lex = lexicon(co, lex_storage);

  if (!o.human_verbs.empty()) {
    std::istringstream in(read_text_file(o.human_verbs));
    std::ostringstream r;
    for (std::string line; std::getline(in, line);) {
      const auto t = trim(line);
      if (t.empty() || t.front() == '#') continue;
      const auto n = normalize_human_verb(t, lex);
      r << t << '\t' << n.value_or("REJECT") << '\n';
    }
    write_output(co.report.empty() ? "-" : co.report, r.str(), out);
    return kOk;
  }

  const auto pairs = read_pairs(o);
  if (pairs.empty()) throw UsageError("give --pair or --pairs");
  const auto index = open_index(po);
  PairFeatureSource source(sentences_for(index, lex), lex);
  const auto kinds = KindMask::parse(o.kinds);

  std::ostringstream r;
  if (o.verbs) {
    // pairs read as modifier,head
    r << "# modifier\thead\tverb\tfreq\n";
    for (const auto& [mod, head] : pairs) {
      const auto verbs = extract_paraphrase_verbs(source.sentences(), mod, head, lex);
      std::vector<std::pair<std::string, std::uint64_t>> sorted(verbs.begin(), verbs.end());
      std::ranges::stable_sort(sorted, [](const auto& a, const auto& b) { return a.second > b.second; });
      for (const auto& [v, n] : sorted) r << mod << '\t' << head << '\t' << v << '\t' << n << '\n';
    }
  } else if (o.similarity) {
    std::vector<FeatureVector> vectors;
    for (const auto& [a, b] : pairs) vectors.push_back(to_feature_vector(filter_kinds(source.features(a, b), kinds)));
    r << "# pair1\tpair2\tdice\n";
    for (std::size_t i = 0; i < pairs.size(); ++i)
      for (std::size_t j = i + 1; j < pairs.size(); ++j) {
        r << pairs[i].first << ':' << pairs[i].second << '\t' << pairs[j].first << ':' << pairs[j].second << '\t';
        try {
          r << std::fixed << std::setprecision(4) << dice(vectors[i], vectors[j]) << '\n';
        } catch (const StatError&) {
          r << "undefined\n";
        }
      }
  } else {
    r << "# noun1\tnoun2\tlexeme\tkind\tdirection\tfreq\n";
    for (const auto& [a, b] : pairs) r << pair_features_tsv(a, b, filter_kinds(source.features(a, b), kinds));
  }
  write_output(co.report.empty() ? "-" : co.report, r.str(), out);
  return kOk;
}

int cmd_sat(const ProviderOptions& po, const CommonOptions& co, const std::string& dataset, const std::string& kinds,
            std::ostream& out) {
  const auto questions = load_sat(dataset);
  std::optional<MorphLexicon> lex_storage;
  const auto& lex = lexicon(co, lex_storage);
  const auto index = open_index(po);
  PairFeatureSource source(sentences_for(index, lex), lex);
  const auto mask = KindMask::parse(kinds);

  std::ostringstream r;
  r << "# stem\tgold\tlabel\tscores\n";
  std::vector<std::string> pred, gold;
  for (const auto& q : questions) {
    const auto a = solve_sat(q, source, mask);
    const auto letter = [](std::optional<std::size_t> i) {
      return i ? std::string(1, static_cast<char>('a' + *i)) : std::string("none");
    };
    r << q.stem.first << ':' << q.stem.second << '\t' << letter(q.gold) << '\t' << letter(a.choice) << '\t';
    for (std::size_t i = 0; i < a.scores.size(); ++i)
      r << (i ? "," : "") << std::fixed << std::setprecision(4) << a.scores[i];
    r << '\n';
    if (q.gold) {
      gold.push_back(letter(q.gold));
      pred.push_back(letter(a.choice));
    }
  }
  if (!co.report.empty()) write_output(co.report, r.str(), out);
  if (!gold.empty()) {
    const std::vector<NamedReport> rows{{"sat", evaluate_labels(pred, gold)}};
    print_reports(out, rows, co.format);
  }
  return kOk;
}

struct SemEvalCliOptions {
  std::string train, test, kinds = "vpc";
  bool no_sentence_words = false, no_entity_words = false, query_words = false;
};

int cmd_semeval(const ProviderOptions& po, const CommonOptions& co, const SemEvalCliOptions& o, std::ostream& out) {
  const auto train = load_semeval(o.train);
  const auto test = load_semeval(o.test);
  std::optional<MorphLexicon> lex_storage;
  const auto& lex = lexicon(co, lex_storage);
  const auto index = open_index(po);
  PairFeatureSource source(sentences_for(index, lex), lex);
  SemEvalOptions opts{KindMask::parse(o.kinds), !o.no_sentence_words, !o.no_entity_words, o.query_words};
  const auto& stop = StopWords::bundled();

  std::vector<FeatureVector> train_vectors;
  for (const auto& ex : train) train_vectors.push_back(semeval_features(ex, source, lex, stop, opts));
  const SemEvalClassifier clf(train, train_vectors);

  std::ostringstream r;
  r << "# relation\te1\te2\tgold\tlabel\treason\n";
  std::vector<bool> pred, gold;
  for (const auto& ex : test) {
    const auto p = clf.classify(ex, semeval_features(ex, source, lex, stop, opts), lex);
    r << ex.relation << '\t' << ex.e1_text() << '\t' << ex.e2_text() << '\t'
      << (ex.gold ? (*ex.gold ? "true" : "false") : "none") << '\t' << (p.value ? "true" : "false") << '\t'
      << p.reason << '\n';
    if (ex.gold) {
      gold.push_back(*ex.gold);
      pred.push_back(p.value);
    }
  }
  if (!co.report.empty()) write_output(co.report, r.str(), out);
  if (!gold.empty()) {
    const auto s = binary_scores(pred, gold);
    out << std::fixed << std::setprecision(2);
    if (co.format == "tsv") {
      out << "precision\trecall\tf1\taccuracy\tn\n"
          << 100 * s.precision << '\t' << 100 * s.recall << '\t' << 100 * s.f1 << '\t' << 100 * s.accuracy << '\t'
          << gold.size() << '\n';
    } else {
      out << "P=" << 100 * s.precision << " R=" << 100 * s.recall << " F=" << 100 * s.f1 << " Acc=" << 100 * s.accuracy
          << " (n=" << gold.size() << ")\n";
    }
  }
  return kOk;
}

// ---- eval / compare --------------------------------------------------------

int cmd_eval(const CommonOptions& co, const std::string& gold_path, const std::string& pred_path, double level,
             const std::string& name, std::ostream& out) {
  const auto gold = load_label_column(gold_path);
  const auto pred = load_label_column(pred_path);
  if (gold.size() != pred.size())
    throw DataError("gold has " + std::to_string(gold.size()) + " rows, predictions " + std::to_string(pred.size()));
  EvalReport report;
  try {
    report = evaluate_labels(pred, gold, level);
  } catch (const std::invalid_argument& e) {
    throw DataError(e.what());
  }
  const std::vector<NamedReport> rows{{name, report}};
  print_reports(out, rows, co.format);
  if (co.format == "text") {
    if (auto ci = report.interval())
      out << std::fixed << std::setprecision(4) << "wilson " << 100 * level << "%: [" << ci->low << ", " << ci->high
          << "]\n";
    else
      out << "accuracy undefined: no predictions\n";
  }
  return kOk;
}

struct CompareOptions {
  std::vector<std::string> providers;
  std::string dataset, voters, default_label = "none";
  double margin = 5.0, alpha = 0.05;
};

int cmd_compare(const CommonOptions& co, const CompareOptions& o, std::ostream& out) {
  if (o.providers.size() < 2) throw UsageError("compare needs at least two --provider name=path entries");
  VoteConfig config;
  config.voters = o.voters.empty() ? VoteConfig::standard_voters()
                                   : expand_voters(o.voters, VoteConfig::standard_voters(), VoteConfig::all_voters());
  const auto dl = parse_bracketing(o.default_label);
  if (!dl) throw UsageError("--default must be left, right or none");
  config.default_label = *dl == Bracketing::Abstain ? std::nullopt : std::optional(*dl);
  config.margin = o.margin;
  config.validate();

  const auto items = load_bracketing(o.dataset);
  std::optional<MorphLexicon> lex_storage;
  const auto& lex = lexicon(co, lex_storage);
  const auto& inv = ParaphraseInventory::standard();

  std::vector<std::string> names;
  std::vector<std::string> models = config.voters;
  models.push_back("vote");
  std::vector<std::vector<EvalReport>> reports(models.size());
  for (const auto& spec : o.providers) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--provider expects name=path");
    names.push_back(spec.substr(0, eq));
    const std::string path = spec.substr(eq + 1);
    ProviderOptions po;
    (path.ends_with(".tsv") ? po.cache : po.index) = path;
    auto holder = open_provider(po);
    std::vector<BracketResult> results;
    std::vector<Bracketing> gold;
    for (const auto& item : items) {
      if (item.gold == Bracketing::Abstain) continue;
      results.push_back(bracket(item.triple, *holder->provider, lex, inv, config));
      gold.push_back(item.gold);
    }
    const auto rows = vote_reports(results, gold, config.voters);
    if (rows.size() != models.size()) throw DataError("dataset has no gold labels");
    for (std::size_t m = 0; m < models.size(); ++m) reports[m].push_back(rows[m].report);
  }
  const auto cmp = compare_providers(names, models, reports, o.alpha);
  const auto text = co.format == "tsv" ? comparison_tsv(cmp) : comparison_summary(cmp);
  if (!co.report.empty()) write_output(co.report, comparison_tsv(cmp), out);
  out << text;
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Noun-phrase ambiguity and relational similarity from corpus counts", "nctk"};
  app.require_subcommand(1);
  app.allow_windows_style_options(false);
  long long seed = 0;
  app.add_option("--seed", seed, "Reserved; nothing is randomized")->check(CLI::NonNegativeNumber);

  ProviderOptions po;
  CommonOptions co;

  std::string index_out;
  auto* index_cmd = app.add_subcommand("index", "Build an index file from a corpus");
  index_cmd->add_option("--corpus", po.corpus, "Corpus file")->required();
  index_cmd->add_option("--out", index_out, "Index file to write")->required();
  index_cmd->add_flag("--tagged", po.tagged, "Corpus tokens are word_TAG");

  BracketOptions bo;
  auto* bracket_cmd = app.add_subcommand("bracket", "Bracket three-word noun compounds");
  add_provider_options(bracket_cmd, po);
  add_common_options(bracket_cmd, co);
  bracket_cmd->add_option("--dataset", bo.dataset, "w1 w2 w3 [label] TSV")->required();
  bracket_cmd->add_option("--preset", bo.preset, "Named configuration")
      ->check(CLI::IsMember({"lauer", "biomedical", "stability"}));
  bracket_cmd->add_option("--voters", bo.voters, "Comma-separated voters, 'standard' or 'all'");
  bracket_cmd->add_option("--default", bo.default_label, "Fallback label: left, right or none");
  bracket_cmd->add_option("--margin", bo.margin, "Minimum score difference for association voters")
      ->check(CLI::NonNegativeNumber);
  bracket_cmd->add_option("--snippet-limit", bo.snippet_limit, "Snippets scanned per query")
      ->check(CLI::PositiveNumber);
  bracket_cmd->add_option("--inventory", bo.inventory, "Paraphrase inventory file");

  PPOptions ppo;
  auto* pp_cmd = app.add_subcommand("ppattach", "Prepositional-phrase attachment");
  add_provider_options(pp_cmd, po);
  add_common_options(pp_cmd, co);
  pp_cmd->add_option("--dataset", ppo.dataset, "v n1 p n2 [N|V] TSV")->required();
  pp_cmd->add_option("--voters", ppo.voters, "Comma-separated voters, 'standard' or 'all'");
  pp_cmd->add_option("--default", ppo.default_label, "Fallback label: noun, verb or none");
  pp_cmd->add_flag("--no-of-first", ppo.no_of_first, "Let 'of' quads go through the vote");
  pp_cmd->add_flag("--backoff", ppo.backoff, "Bootstrap a back-off model on the dataset and let it vote");
  pp_cmd->add_option("--snippet-limit", ppo.snippet_limit, "Snippets scanned per query")->check(CLI::PositiveNumber);

  CoordOptions cdo;
  auto* coord_cmd = app.add_subcommand("coord", "NP coordination");
  add_provider_options(coord_cmd, po);
  add_common_options(coord_cmd, co);
  coord_cmd->add_option("--dataset", cdo.dataset, "n1 c n2 h [label] TSV")->required();
  coord_cmd->add_option("--voters", cdo.voters, "Comma-separated voters, 'standard' or 'all'");
  coord_cmd->add_option("--default", cdo.default_label, "Fallback label: noun, np or none");
  coord_cmd->add_option("--threshold", cdo.threshold, "Paraphrase count threshold");
  coord_cmd->add_flag("--invert-model-i", cdo.invert_i, "#(n1 h) > #(n2 h) means NP coordination");
  coord_cmd->add_flag("--invert-model-ii", cdo.invert_ii, "#(n1 c n2) > #(n1 h) means NP coordination");
  coord_cmd->add_option("--snippet-limit", cdo.snippet_limit, "Snippets scanned per query")
      ->check(CLI::PositiveNumber);

  RelsimOptions ro;
  auto* relsim_cmd = app.add_subcommand("relsim", "Pair features, paraphrase verbs and pair similarity");
  add_provider_options(relsim_cmd, po);
  add_common_options(relsim_cmd, co);
  relsim_cmd->add_option("--pair", ro.pairs, "noun1,noun2 (repeatable)");
  relsim_cmd->add_option("--pairs", ro.pairs_file, "File with one noun pair per line");
  relsim_cmd->add_option("--kinds", ro.kinds, "Feature kinds: letters v, p, c");
  relsim_cmd->add_flag("--verbs", ro.verbs, "Extract paraphrase verbs for modifier,head pairs");
  relsim_cmd->add_flag("--similarity", ro.similarity, "Dice similarity between every two pairs");
  relsim_cmd->add_option("--human-verbs", ro.human_verbs, "Normalize one free-text paraphrase per line");

  std::string sat_dataset, sat_kinds = "vpc";
  auto* sat_cmd = app.add_subcommand("sat", "SAT verbal analogy questions");
  add_provider_options(sat_cmd, po);
  add_common_options(sat_cmd, co);
  sat_cmd->add_option("--dataset", sat_dataset, "SAT question blocks")->required();
  sat_cmd->add_option("--kinds", sat_kinds, "Feature kinds: letters v, p, c");

  SemEvalCliOptions so;
  auto* semeval_cmd = app.add_subcommand("semeval", "Binary semantic-relation classification");
  add_provider_options(semeval_cmd, po);
  add_common_options(semeval_cmd, co);
  semeval_cmd->add_option("--train", so.train, "Training examples")->required();
  semeval_cmd->add_option("--test", so.test, "Test examples")->required();
  semeval_cmd->add_option("--kinds", so.kinds, "Feature kinds: letters v, p, c");
  semeval_cmd->add_flag("--no-sentence-words", so.no_sentence_words, "Drop sentence-word features");
  semeval_cmd->add_flag("--no-entity-words", so.no_entity_words, "Drop entity-word features");
  semeval_cmd->add_flag("--query-words", so.query_words, "Add query-word features");

  std::string gold_path, pred_path, eval_name = "predictions";
  double level = 0.95;
  auto* eval_cmd = app.add_subcommand("eval", "Score predictions against gold labels");
  eval_cmd->add_option("--gold", gold_path, "Gold file")->required();
  eval_cmd->add_option("--pred", pred_path, "Prediction file")->required();
  eval_cmd->add_option("--level", level, "Confidence level")->check(CLI::Range(0.5, 0.9999));
  eval_cmd->add_option("--name", eval_name, "Row name in the summary");
  eval_cmd->add_option("--format", co.format, "Summary format")->check(CLI::IsMember({"text", "tsv"}));

  CompareOptions cmpo;
  auto* compare_cmd = app.add_subcommand("compare", "Bracketing accuracy across count providers");
  compare_cmd->add_option("--provider", cmpo.providers, "name=path (index file, or counts cache .tsv)")->required();
  compare_cmd->add_option("--dataset", cmpo.dataset, "Bracketing dataset")->required();
  compare_cmd->add_option("--voters", cmpo.voters, "Comma-separated voters, 'standard' or 'all'");
  compare_cmd->add_option("--default", cmpo.default_label, "Fallback label: left, right or none");
  compare_cmd->add_option("--margin", cmpo.margin, "Minimum score difference")->check(CLI::NonNegativeNumber);
  compare_cmd->add_option("--alpha", cmpo.alpha, "Significance level")->check(CLI::Range(0.0, 1.0));
  compare_cmd->add_option("--lexicon", co.lexicon, "Morphology lexicon TSV");
  compare_cmd->add_option("--report", co.report, "Write the comparison TSV");
  compare_cmd->add_option("--format", co.format, "Summary format")->check(CLI::IsMember({"text", "tsv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "nctk: " << e.what() << '\n';
    if (auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front()) err << sub->help();
    return kUsage;
  }

  try {
    if (*index_cmd) return cmd_index(po, index_out, out);
    if (*bracket_cmd) return cmd_bracket(po, co, bo, out);
    if (*pp_cmd) return cmd_pp(po, co, ppo, out);
    if (*coord_cmd) return cmd_coord(po, co, cdo, out);
    if (*relsim_cmd) return cmd_relsim(po, co, ro, out);
    if (*sat_cmd) return cmd_sat(po, co, sat_dataset, sat_kinds, out);
    if (*semeval_cmd) return cmd_semeval(po, co, so, out);
    if (*eval_cmd) return cmd_eval(co, gold_path, pred_path, level, eval_name, out);
    if (*compare_cmd) return cmd_compare(co, cmpo, out);
  } catch (const UsageError& e) {
    err << "nctk: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "nctk: " << e.what() << '\n';
    return kUsage;
  } catch (const DataError& e) {
    err << "nctk: " << e.what() << '\n';
    return kData;
  } catch (const ProviderError& e) {
    err << "nctk: " << e.what() << '\n';
    return kData;
  } catch (const std::exception& e) {
    err << "nctk: " << e.what() << '\n';
    return kData;
  }
  return kUsage;
}

}  // namespace nctk::cli
