#include "nctk/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nctk/association.hpp"

namespace nctk {

TfIdf TfIdf::fit(std::span<const FeatureVector> training) {
  if (training.empty()) throw std::invalid_argument("TF.IDF needs at least one training vector");
  TfIdf t;
  t.n_ = training.size();
  for (const auto& v : training)
    for (const auto& [f, w] : v)
      if (w > 0) ++t.df_[f];
  return t;
}

std::size_t TfIdf::df(const std::string& feature) const {
  auto it = df_.find(feature);
  return it == df_.end() ? 0 : it->second;
}

FeatureVector TfIdf::weight(const FeatureVector& v) const {
  FeatureVector out;
  for (const auto& [f, tf] : v) {
    const auto d = df(f);
    out[f] = d == 0 ? 0.0 : tf * std::log(static_cast<double>(n_) / static_cast<double>(d));
  }
  return out;
}

std::vector<FeatureVector> tfidf_weight(std::span<const FeatureVector> vectors) {
  const auto t = TfIdf::fit(vectors);
  std::vector<FeatureVector> out;
  out.reserve(vectors.size());
  for (const auto& v : vectors) out.push_back(t.weight(v));
  return out;
}

double dice(const FeatureVector& a, const FeatureVector& b) {
  double sa = 0, sb = 0, common = 0;
  for (const auto& [f, w] : a) {
    if (w < 0) throw std::invalid_argument("negative feature weight");
    sa += w;
  }
  for (const auto& [f, w] : b) {
    if (w < 0) throw std::invalid_argument("negative feature weight");
    sb += w;
  }
  // walk the two sorted maps together
  auto ia = a.begin(), ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first < ib->first) ++ia;
    else if (ib->first < ia->first) ++ib;
    else {
      common += std::min(ia->second, ib->second);
      ++ia;
      ++ib;
    }
  }
  if (sa + sb == 0) throw StatError("undefined similarity");
  return 2 * common / (sa + sb);
}

double cosine(const FeatureVector& a, const FeatureVector& b) {
  double na = 0, nb = 0, dot = 0;
  for (const auto& [f, w] : a) na += w * w;
  for (const auto& [f, w] : b) nb += w * w;
  for (const auto& [f, w] : a)
    if (auto it = b.find(f); it != b.end()) dot += w * it->second;
  if (na == 0 || nb == 0) throw StatError("undefined similarity");
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

KnnResult knn_classify(std::span<const LabeledVector> train, const FeatureVector& query) {
  if (train.empty()) throw std::invalid_argument("empty training set");
  double best = -1;
  std::map<std::string, std::size_t> votes;
  for (const auto& ex : train) {
    double s = 0;
    try {
      s = dice(ex.vector, query);
    } catch (const StatError&) {
      s = 0;
    }
    if (s > best) {
      best = s;
      votes.clear();
    }
    if (s == best) ++votes[ex.label];
  }
  KnnResult r;
  r.similarity = best;
  std::size_t total = 0, top = 0;
  const std::string* top_label = nullptr;
  for (const auto& [label, n] : votes) {
    total += n;
    if (n > top) {
      top = n;
      top_label = &label;
    }
  }
  r.tied = total;
  if (2 * top > total) r.label = *top_label;
  return r;
}

}  // namespace nctk
