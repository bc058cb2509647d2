#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nctk/pair_features.hpp"

namespace nctk {

// Document frequencies over a set of training vectors.
class TfIdf {
 public:
  TfIdf() = default;
  // Throws std::invalid_argument when `training` is empty.
  static TfIdf fit(std::span<const FeatureVector> training);

  // w(x) = TF(x) * log(N / DF(x)); features unseen in training weigh 0.
  FeatureVector weight(const FeatureVector& v) const;
  std::size_t n() const { return n_; }
  std::size_t df(const std::string& feature) const;

 private:
  std::size_t n_ = 0;
  std::map<std::string, std::size_t> df_;
};

// Weights every vector against the DF of the whole set.
std::vector<FeatureVector> tfidf_weight(std::span<const FeatureVector> vectors);

// 2 * sum(min(a_i, b_i)) / (sum(a) + sum(b)). Throws std::invalid_argument on
// a negative weight and StatError("undefined similarity") when both vectors
// are all zero.
double dice(const FeatureVector& a, const FeatureVector& b);

// sum(h_i p_i) / (|h| |p|); throws StatError("undefined similarity") on a
// zero vector.
double cosine(const FeatureVector& a, const FeatureVector& b);

struct LabeledVector {
  FeatureVector vector;
  std::string label;
};

struct KnnResult {
  std::optional<std::string> label;  // nullopt: tied neighbours without a majority
  double similarity = 0.0;
  std::size_t tied = 0;
};

// 1-NN by Dice; neighbours tied at the top vote, a strict majority wins.
// Undefined similarities count as 0. Throws std::invalid_argument on an
// empty training set.
KnnResult knn_classify(std::span<const LabeledVector> train, const FeatureVector& query);

}  // namespace nctk
