#include "fatcat/thresholding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <unordered_set>

#include "fatcat/error.hpp"

namespace fatcat {

WeightedDocTopicMatrix::WeightedDocTopicMatrix(std::vector<Document> documents, std::vector<TopicId> topics,
                                               std::vector<WeightEntry> entries)
    : documents_(std::move(documents)), topics_(std::move(topics)), entries_(std::move(entries)) {
  std::unordered_set<std::string> doc_ids;
  for (const auto& d : documents_)
    if (!doc_ids.insert(d.id).second) throw InputError("duplicate document id '" + d.id + "'");
  std::unordered_set<TopicId> topic_ids;
  for (TopicId t : topics_)
    if (!topic_ids.insert(t).second) throw InputError("duplicate topic id " + std::to_string(t));

  std::unordered_set<std::uint64_t> cells;
  for (const auto& e : entries_) {
    if (e.document >= documents_.size())
      throw InputError("weight entry references document index " + std::to_string(e.document));
    if (e.topic >= topics_.size()) throw InputError("weight entry references topic index " + std::to_string(e.topic));
    const std::string where = "(" + documents_[e.document].id + ", " + std::to_string(topics_[e.topic]) + ")";
    if (!std::isfinite(e.weight) || e.weight < 0.0)
      throw InputError("weight for " + where + " must be finite and non-negative");
    if (!cells.insert(static_cast<std::uint64_t>(e.document) * topics_.size() + e.topic).second)
      throw InputError("duplicate weight entry for " + where);
  }
}

WeightedDocTopicMatrix row_normalize(const WeightedDocTopicMatrix& weights) {
  std::vector<double> row_sum(weights.documents().size(), 0.0);
  for (const auto& e : weights.entries()) {
    if (e.weight < 0.0) throw InputError("negative weight cannot be row-normalized");
    row_sum[e.document] += e.weight;
  }
  std::vector<WeightEntry> scaled = weights.entries();
  for (auto& e : scaled)
    if (row_sum[e.document] > 0.0) e.weight /= row_sum[e.document];
  return WeightedDocTopicMatrix(weights.documents(), weights.topics(), std::move(scaled));
}

namespace {

void require_cells(const WeightedDocTopicMatrix& weights) {
  if (weights.documents().empty() || weights.topics().empty())
    throw DomainError("density is undefined for a matrix without documents or topics");
}

std::size_t cells_at_or_above(const WeightedDocTopicMatrix& weights, double delta) {
  if (delta <= 0.0) return weights.cell_count();
  return static_cast<std::size_t>(std::count_if(weights.entries().begin(), weights.entries().end(),
                                                 [&](const WeightEntry& e) { return e.weight >= delta; }));
}

} // namespace

double density(const WeightedDocTopicMatrix& weights, double delta) {
  require_cells(weights);
  return static_cast<double>(cells_at_or_above(weights, delta)) / static_cast<double>(weights.cell_count());
}

ThresholdReport select_threshold(const WeightedDocTopicMatrix& weights, double target_density) {
  return select_threshold(weights, Rate::from_double(target_density));
}

ThresholdReport select_threshold(const WeightedDocTopicMatrix& weights, const Rate& target_density) {
  require_cells(weights);
  if (target_density.numerator() == 0) throw InputError("target density must lie in (0, 1]");

  std::vector<double> sorted;
  sorted.reserve(weights.entries().size());
  for (const auto& e : weights.entries()) sorted.push_back(e.weight);
  std::sort(sorted.begin(), sorted.end());

  const std::size_t cells = weights.cell_count();
  ThresholdReport report;
  report.target_density = target_density.value();

  // Ascending scan over distinct weights; cells >= delta is everything from
  // the first occurrence of delta onward (plus absent cells when delta <= 0).
  for (std::size_t i = 0; i < sorted.size();) {
    const double delta = sorted[i];
    ++report.candidates_examined;
    const std::size_t hits = delta <= 0.0 ? cells : sorted.size() - i;
    if (target_density.geq_fraction(hits, cells)) {
      report.delta = delta;
      report.achieved_density = static_cast<double>(hits) / static_cast<double>(cells);
      return report;
    }
    while (i < sorted.size() && sorted[i] == delta) ++i;
  }
  report.delta = std::numeric_limits<double>::infinity();
  report.achieved_density = 0.0;
  report.reached = false;
  return report;
}

std::string directory_of(const std::string& path, std::size_t depth) {
  if (depth == 0) throw InputError("directory depth must be at least 1");
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start <= path.size()) {
    std::size_t end = path.find('/', start);
    if (end == std::string::npos) end = path.size();
    if (end > start) parts.push_back(path.substr(start, end - start));
    start = end + 1;
  }
  if (parts.empty()) throw InputError("document path is empty");
  parts.pop_back();  // file name
  if (parts.empty()) return ".";
  std::string dir;
  for (std::size_t i = 0; i < std::min(depth, parts.size()); ++i) {
    if (i) dir += '/';
    dir += parts[i];
  }
  return dir;
}

FormalContext binarize(const WeightedDocTopicMatrix& weights, double delta, std::size_t directory_depth) {
  if (std::isnan(delta) || delta < 0.0) throw InputError("delta must be non-negative");
  std::vector<ObjectId> objects;
  std::vector<std::string> paths;
  for (const auto& d : weights.documents()) {
    try {
      (void)directory_of(d.path, directory_depth);
    } catch (const InputError& e) {
      throw InputError("document '" + d.id + "': " + e.what());
    }
    objects.push_back(d.id);
    paths.push_back(d.path);
  }
  std::vector<AttributeId> attributes;
  for (TopicId t : weights.topics()) attributes.push_back(std::to_string(t));

  std::vector<BitSet> rows(objects.size(), BitSet(attributes.size()));
  if (delta <= 0.0) {
    for (auto& r : rows) r = BitSet::full(attributes.size());
  } else {
    for (const auto& e : weights.entries())
      if (e.weight >= delta) rows[e.document].set(e.topic);
  }
  return FormalContext::from_rows(std::move(objects), std::move(attributes), std::move(rows), std::move(paths));
}

} // namespace fatcat
