#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "nctk/association.hpp"
#include "nctk/decision.hpp"

namespace nctk {

// Standard normal quantile (Acklam's rational approximation refined by one
// Halley step). Throws std::domain_error outside (0, 1).
double normal_quantile(double p);
// Two-sided critical value: level 0.95 -> 1.96.
double z_for_level(double level);

// Upper tail of the chi-square distribution with `dof` degrees of freedom,
// via the regularized incomplete gamma Q(dof/2, x/2).
double chi2_survival(double x, int dof = 1);

struct Interval {
  double low = 0.0;
  double high = 0.0;
  double level = 0.95;
  double estimate = 0.0;  // p-hat

  double center() const { return (low + high) / 2; }
  double half_width() const { return (high - low) / 2; }
  // "p-hat +- m" as printed in accuracy tables: the larger distance from p-hat
  // to either bound.
  double reported_margin() const;
};

// Throws std::invalid_argument on total == 0, correct > total or a level
// outside (0, 1).
Interval wilson_interval(std::uint64_t correct, std::uint64_t total, double level = 0.95);
// Not clamped to [0, 1].
Interval wald_interval(std::uint64_t correct, std::uint64_t total, double level = 0.95);

struct ChiSquareTest {
  double chi2 = 0.0;
  double p = 1.0;
};

// 2x2 test on (correct1, wrong1, correct2, wrong2); StatError("degenerate
// table") on a zero marginal.
ChiSquareTest pearson_chi2(double a, double b, double c, double d);

// (Pr(A) - Pr(E)) / (1 - Pr(E)); StatError when pr_e >= 1.
double kappa(double pr_a, double pr_e);
// Two-rater Cohen kappa over paired labels.
double cohen_kappa(std::span<const std::string> rater1, std::span<const std::string> rater2);

struct EvalReport {
  std::uint64_t correct = 0;
  std::uint64_t wrong = 0;
  std::uint64_t abstained = 0;
  double level = 0.95;

  std::uint64_t predicted() const { return correct + wrong; }
  std::uint64_t total() const { return correct + wrong + abstained; }
  // nullopt when nothing was predicted.
  std::optional<double> accuracy() const;
  double coverage() const;
  std::optional<Interval> interval() const;
};

EvalReport make_report(std::uint64_t correct, std::uint64_t wrong, std::uint64_t abstained, double level = 0.95);

// Gold labels must not be Abstain; sizes must match (std::invalid_argument).
template <TriLabel L>
EvalReport evaluate(std::span<const L> predictions, std::span<const L> gold, double level = 0.95) {
  if (predictions.size() != gold.size()) throw std::invalid_argument("prediction and gold sizes differ");
  EvalReport r;
  r.level = level;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (gold[i] == L::Abstain) throw std::invalid_argument("gold label missing at row " + std::to_string(i + 1));
    if (predictions[i] == L::Abstain) ++r.abstained;
    else if (predictions[i] == gold[i]) ++r.correct;
    else ++r.wrong;
  }
  return r;
}

// Same over label strings; "" or an abstain spelling counts as abstained.
EvalReport evaluate_labels(std::span<const std::string> predictions, std::span<const std::string> gold,
                           double level = 0.95);

// Baseline accuracy of always predicting `label`.
double majority_baseline(std::span<const std::string> gold, const std::string& label);

struct BinaryScores {
  double precision = 0, recall = 0, f1 = 0, accuracy = 0;
  std::uint64_t tp = 0, fp = 0, fn = 0, tn = 0;
};
// Positive class = true. Undefined P or R are reported as 0.
BinaryScores binary_scores(const std::vector<bool>& predictions, const std::vector<bool>& gold);

struct NamedReport {
  std::string name;
  EvalReport report;
};

// "85.51±5.34" style accuracy, or "undefined".
std::string format_accuracy(const EvalReport& r);
std::string report_tsv(std::span<const NamedReport> rows);
std::string report_summary(std::span<const NamedReport> rows);

struct PairwiseTest {
  std::size_t first = 0, second = 0;  // provider indices
  std::optional<ChiSquareTest> test;  // nullopt: degenerate table
  bool significant = false;
};

struct ModelComparison {
  std::string model;
  std::vector<EvalReport> per_provider;
  std::vector<PairwiseTest> tests;
  bool significant() const;  // any pair below alpha
};

struct ProviderComparison {
  std::vector<std::string> providers;
  std::vector<ModelComparison> models;
  double alpha = 0.05;
};

// reports[m][p]: model m under provider p. Every model must have one report
// per provider.
ProviderComparison compare_providers(const std::vector<std::string>& providers, const std::vector<std::string>& models,
                                     const std::vector<std::vector<EvalReport>>& reports, double alpha = 0.05);
// One row per model with a trailing "*" on significantly varying models.
std::string comparison_tsv(const ProviderComparison& c);
std::string comparison_summary(const ProviderComparison& c);

}  // namespace nctk
