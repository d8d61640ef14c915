#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "fatcat/context.hpp"
#include "fatcat/rate.hpp"
#include "fatcat/topic.hpp"

namespace fatcat {


inline constexpr double kDefaultTargetDensity = 0.1;

struct Document {
  std::string id;
  std::string path;

  friend bool operator==(const Document&, const Document&) = default;
};

struct WeightEntry {
  std::size_t document;  // index into documents()
  std::size_t topic;     // index into topics()
  double weight;

  friend bool operator==(const WeightEntry&, const WeightEntry&) = default;
};

/// Sparse document x topic weights. Absent cells have weight 0.
class WeightedDocTopicMatrix {
public:
  WeightedDocTopicMatrix() = default;
  /// Validates unique ids, in-range references, finite non-negative
  /// weights, and at most one entry per (document, topic).
  WeightedDocTopicMatrix(std::vector<Document> documents, std::vector<TopicId> topics,
                         std::vector<WeightEntry> entries);

  const std::vector<Document>& documents() const noexcept { return documents_; }
  const std::vector<TopicId>& topics() const noexcept { return topics_; }
  const std::vector<WeightEntry>& entries() const noexcept { return entries_; }
  std::size_t cell_count() const noexcept { return documents_.size() * topics_.size(); }

private:
  std::vector<Document> documents_;
  std::vector<TopicId> topics_;
  std::vector<WeightEntry> entries_;
};

/// Outcome of the density-driven threshold search. When no candidate
/// reaches the target, `delta` is +infinity and `reached` is false.
struct ThresholdReport {
  double delta = 0.0;
  double achieved_density = 0.0;
  double target_density = kDefaultTargetDensity;
  std::size_t candidates_examined = 0;
  bool reached = true;
};

/// Scales every document's weights to sum 1; all-zero rows stay zero.
WeightedDocTopicMatrix row_normalize(const WeightedDocTopicMatrix& weights);

/// Fraction of cells with weight >= delta (absent cells weigh 0).
/// Throws DomainError when there are no documents or no topics.
double density(const WeightedDocTopicMatrix& weights, double delta);

/// Smallest distinct weight value whose thresholded density is <= target.
ThresholdReport select_threshold(const WeightedDocTopicMatrix& weights, const Rate& target_density);
ThresholdReport select_threshold(const WeightedDocTopicMatrix& weights, double target_density);

/// Directory id of a document path: the first `depth` directory components
/// joined by '/', or "." for a file at the root. The final component is the
/// file name and never part of the directory. Throws InputError on an empty
/// path or depth 0.
std::string directory_of(const std::string& path, std::size_t depth);

/// Objects are documents (file order, paths attached), attributes are topic
/// ids in decimal, and (d, t) is incident iff weight(d, t) >= delta.
/// `directory_depth` is validated against every document path.
FormalContext binarize(const WeightedDocTopicMatrix& weights, double delta, std::size_t directory_depth = 1);

} // namespace fatcat
