#include "nctk/stats.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>

#include "nctk/normalize.hpp"

namespace nctk {

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::domain_error("normal quantile needs p in (0, 1)");
  static constexpr std::array a{-3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
                                1.383577518672690e+02,  -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr std::array b{-5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
                                6.680131188771972e+01, -1.328068155288572e+01};
  static constexpr std::array c{-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
                                -2.549732539343734e+00, 4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr std::array d{7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
                                3.754408661907416e+00};
  constexpr double p_low = 0.02425;
  double x;
  if (p < p_low) {
    const double q = std::sqrt(-2 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
  } else if (p <= 1 - p_low) {
    const double q = p - 0.5, r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1);
  } else {
    const double q = std::sqrt(-2 * std::log1p(-p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
  }
  // Halley refinement
  const double e = 0.5 * std::erfc(-x / std::numbers::sqrt2) - p;
  const double u = e * std::sqrt(2 * std::numbers::pi) * std::exp(x * x / 2);
  return x - u / (1 + x * u / 2);
}

double z_for_level(double level) {
  if (!(level > 0.0 && level < 1.0)) throw std::invalid_argument("confidence level must be in (0, 1)");
  return normal_quantile(1 - (1 - level) / 2);
}

namespace {

// P(a, x) by its series, valid for x < a + 1.
double gamma_p_series(double a, double x) {
  double sum = 1.0 / a, term = sum, ap = a;
  for (int n = 0; n < 1000; ++n) {
    ap += 1;
    term *= x / ap;
    sum += term;
    if (std::abs(term) < std::abs(sum) * 1e-16) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Q(a, x) by Lentz's continued fraction, valid for x >= a + 1.
double gamma_q_fraction(double a, double x) {
  constexpr double tiny = 1e-300;
  double b = x + 1 - a, c = 1 / tiny, d = 1 / b, h = d;
  for (int i = 1; i < 1000; ++i) {
    const double an = -i * (i - a);
    b += 2;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1) < 1e-16) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double chi2_survival(double x, int dof) {
  if (dof < 1) throw std::invalid_argument("chi-square needs dof >= 1");
  if (x <= 0) return 1.0;
  const double a = dof / 2.0, hx = x / 2;
  return hx < a + 1 ? 1 - gamma_p_series(a, hx) : gamma_q_fraction(a, hx);
}

double Interval::reported_margin() const { return std::max(estimate - low, high - estimate); }

namespace {
void check_counts(std::uint64_t correct, std::uint64_t total) {
  if (total == 0) throw std::invalid_argument("interval over zero trials");
  if (correct > total) throw std::invalid_argument("more successes than trials");
}
}  // namespace

Interval wilson_interval(std::uint64_t correct, std::uint64_t total, double level) {
  check_counts(correct, total);
  const double z = z_for_level(level), n = static_cast<double>(total);
  const double p = static_cast<double>(correct) / n, z2 = z * z;
  const double mid = p + z2 / (2 * n);
  const double spread = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n));
  const double denom = 1 + z2 / n;
  return {std::max(0.0, (mid - spread) / denom), std::min(1.0, (mid + spread) / denom), level, p};
}

Interval wald_interval(std::uint64_t correct, std::uint64_t total, double level) {
  check_counts(correct, total);
  const double z = z_for_level(level), n = static_cast<double>(total);
  const double p = static_cast<double>(correct) / n;
  const double m = z * std::sqrt(p * (1 - p) / n);
  return {p - m, p + m, level, p};
}

ChiSquareTest pearson_chi2(double a, double b, double c, double d) {
  const double x = chi_square({a, b, c, d});
  return {x, chi2_survival(x, 1)};
}

double kappa(double pr_a, double pr_e) {
  if (pr_e >= 1.0) throw StatError("kappa undefined when chance agreement is 1");
  return (pr_a - pr_e) / (1 - pr_e);
}

double cohen_kappa(std::span<const std::string> r1, std::span<const std::string> r2) {
  if (r1.size() != r2.size() || r1.empty()) throw std::invalid_argument("kappa needs two equal non-empty label lists");
  std::map<std::string, double> m1, m2;
  double agree = 0;
  for (std::size_t i = 0; i < r1.size(); ++i) {
    agree += r1[i] == r2[i];
    m1[r1[i]] += 1;
    m2[r2[i]] += 1;
  }
  const double n = static_cast<double>(r1.size());
  double pe = 0;
  for (const auto& [label, k] : m1)
    if (auto it = m2.find(label); it != m2.end()) pe += (k / n) * (it->second / n);
  return kappa(agree / n, pe);
}

std::optional<double> EvalReport::accuracy() const {
  if (predicted() == 0) return std::nullopt;
  return static_cast<double>(correct) / static_cast<double>(predicted());
}

double EvalReport::coverage() const {
  return total() == 0 ? 0.0 : static_cast<double>(predicted()) / static_cast<double>(total());
}

std::optional<Interval> EvalReport::interval() const {
  if (predicted() == 0) return std::nullopt;
  return wilson_interval(correct, predicted(), level);
}

EvalReport make_report(std::uint64_t correct, std::uint64_t wrong, std::uint64_t abstained, double level) {
  return {correct, wrong, abstained, level};
}

namespace {
bool abstain_spelling(const std::string& s) {
  const auto l = to_lower(trim(s));
  return l.empty() || l == "none" || l == "abstain" || l == "n/a" || l == "na" || l == "-";
}
}  // namespace

EvalReport evaluate_labels(std::span<const std::string> predictions, std::span<const std::string> gold,
                           double level) {
  if (predictions.size() != gold.size()) throw std::invalid_argument("prediction and gold sizes differ");
  EvalReport r;
  r.level = level;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (abstain_spelling(gold[i])) throw std::invalid_argument("gold label missing at row " + std::to_string(i + 1));
    if (abstain_spelling(predictions[i])) ++r.abstained;
    else if (to_lower(trim(predictions[i])) == to_lower(trim(gold[i]))) ++r.correct;
    else ++r.wrong;
  }
  return r;
}

double majority_baseline(std::span<const std::string> gold, const std::string& label) {
  if (gold.empty()) throw std::invalid_argument("empty gold set");
  const auto l = to_lower(label);
  const auto hits = std::ranges::count_if(gold, [&](const std::string& g) { return to_lower(trim(g)) == l; });
  return static_cast<double>(hits) / static_cast<double>(gold.size());
}

BinaryScores binary_scores(const std::vector<bool>& predictions, const std::vector<bool>& gold) {
  if (predictions.size() != gold.size()) throw std::invalid_argument("prediction and gold sizes differ");
  BinaryScores s;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (predictions[i] && gold[i]) ++s.tp;
    else if (predictions[i]) ++s.fp;
    else if (gold[i]) ++s.fn;
    else ++s.tn;
  }
  const auto ratio = [](std::uint64_t a, std::uint64_t b) { return b == 0 ? 0.0 : double(a) / double(b); };
  s.precision = ratio(s.tp, s.tp + s.fp);
  s.recall = ratio(s.tp, s.tp + s.fn);
  s.f1 = s.precision + s.recall == 0 ? 0.0 : 2 * s.precision * s.recall / (s.precision + s.recall);
  s.accuracy = ratio(s.tp + s.tn, gold.size());
  return s;
}

namespace {
std::string pct(double x) {
  std::ostringstream o;
  o << std::fixed << std::setprecision(2) << 100 * x;
  return o.str();
}
}  // namespace

std::string format_accuracy(const EvalReport& r) {
  const auto acc = r.accuracy();
  if (!acc) return "undefined";
  return pct(*acc) + "±" + pct(r.interval()->reported_margin());
}

std::string report_tsv(std::span<const NamedReport> rows) {
  std::ostringstream o;
  o << "model\tcorrect\twrong\tna\taccuracy\tci_low\tci_high\tcoverage\n";
  for (const auto& [name, r] : rows) {
    o << name << '\t' << r.correct << '\t' << r.wrong << '\t' << r.abstained << '\t';
    if (auto acc = r.accuracy()) {
      const auto ci = *r.interval();
      o << pct(*acc) << '\t' << pct(ci.low) << '\t' << pct(ci.high);
    } else {
      o << "undefined\tundefined\tundefined";
    }
    o << '\t' << pct(r.coverage()) << '\n';
  }
  return o.str();
}

std::string report_summary(std::span<const NamedReport> rows) {
  std::size_t width = 5;
  for (const auto& row : rows) width = std::max(width, row.name.size());
  std::ostringstream o;
  o << std::left << std::setw(static_cast<int>(width)) << "Model" << "  " << std::right << std::setw(7) << "Correct"
    << std::setw(7) << "Wrong" << std::setw(7) << "N/A" << "  " << std::left << std::setw(14) << "Accuracy"
    << "Coverage\n";
  for (const auto& [name, r] : rows) {
    o << std::left << std::setw(static_cast<int>(width)) << name << "  " << std::right << std::setw(7) << r.correct
      << std::setw(7) << r.wrong << std::setw(7) << r.abstained << "  " << std::left;
    // the ± sign is two bytes; pad by hand
    const auto acc = format_accuracy(r);
    o << acc << std::string(acc.size() < 15 ? 15 - acc.size() : 1, ' ') << pct(r.coverage()) << '\n';
  }
  return o.str();
}

bool ModelComparison::significant() const {
  return std::ranges::any_of(tests, [](const PairwiseTest& t) { return t.significant; });
}

ProviderComparison compare_providers(const std::vector<std::string>& providers, const std::vector<std::string>& models,
                                     const std::vector<std::vector<EvalReport>>& reports, double alpha) {
  if (reports.size() != models.size()) throw std::invalid_argument("one report row per model expected");
  ProviderComparison c;
  c.providers = providers;
  c.alpha = alpha;
  for (std::size_t m = 0; m < models.size(); ++m) {
    if (reports[m].size() != providers.size())
      throw std::invalid_argument("model '" + models[m] + "' lacks a report for every provider");
    ModelComparison mc{models[m], reports[m], {}};
    for (std::size_t i = 0; i < providers.size(); ++i)
      for (std::size_t j = i + 1; j < providers.size(); ++j) {
        PairwiseTest t{i, j, std::nullopt, false};
        const auto& x = reports[m][i];
        const auto& y = reports[m][j];
        try {
          t.test = pearson_chi2(double(x.correct), double(x.wrong), double(y.correct), double(y.wrong));
          t.significant = t.test->p < alpha;
        } catch (const StatError&) {
        }
        mc.tests.push_back(t);
      }
    c.models.push_back(std::move(mc));
  }
  return c;
}

std::string comparison_tsv(const ProviderComparison& c) {
  std::ostringstream o;
  o << "model";
  for (const auto& p : c.providers) o << '\t' << p;
  o << "\tmin_p\n";
  for (const auto& m : c.models) {
    o << m.model << (m.significant() ? "*" : "");
    for (const auto& r : m.per_provider) o << '\t' << (r.accuracy() ? pct(*r.accuracy()) : "undefined");
    double min_p = 1.0;
    bool any = false;
    for (const auto& t : m.tests)
      if (t.test) {
        min_p = std::min(min_p, t.test->p);
        any = true;
      }
    std::ostringstream ps;
    ps << std::fixed << std::setprecision(4) << min_p;
    o << '\t' << (any ? ps.str() : "undefined") << '\n';
  }
  return o.str();
}

std::string comparison_summary(const ProviderComparison& c) {
  std::ostringstream o;
  for (const auto& m : c.models) {
    o << m.model << (m.significant() ? " *" : "") << '\n';
    for (std::size_t p = 0; p < c.providers.size(); ++p)
      o << "  " << c.providers[p] << ": " << format_accuracy(m.per_provider[p]) << " (coverage "
        << pct(m.per_provider[p].coverage()) << ")\n";
    for (const auto& t : m.tests) {
      o << "  " << c.providers[t.first] << " vs " << c.providers[t.second] << ": ";
      if (!t.test) {
        o << "degenerate table\n";
        continue;
      }
      o << std::fixed << std::setprecision(3) << "chi2=" << t.test->chi2 << " p=" << std::setprecision(4)
        << t.test->p << (t.significant ? " *" : "") << '\n';
    }
  }
  o << "* p < " << c.alpha << '\n';
  return o.str();
}

}  // namespace nctk
