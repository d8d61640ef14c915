#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "fatcat/aggregation.hpp"
#include "fatcat/iceberg.hpp"
#include "fatcat/lattice_export.hpp"
#include "fatcat/rate.hpp"
#include "fatcat/thresholding.hpp"
#include "fatcat/weights_io.hpp"

namespace fatcat {

struct PipelineConfig {
  Rate target_density = Rate::ratio(1, 10);
  Rate minsupp_directory = Rate::ratio(1, 10);
  std::optional<Rate> minsupp_final;  // absent: full directory lattice
  std::size_t directory_depth = kDefaultDirectoryDepth;
  std::size_t words_per_topic = kDefaultWordsPerTopic;
  std::size_t max_exact_attributes = EnumerationOptions{}.max_attributes;
};

struct StageTiming {
  std::string stage;
  double milliseconds = 0.0;
};

struct PipelineResult {
  PipelineConfig config;
  FormalContext context;
  ThresholdReport threshold;
  std::map<DirectoryId, FormalContext> directory_contexts;
  std::map<DirectoryId, IcebergLattice> directory_icebergs;
  DirectoryTopicContext directory_topic_context;
  LabeledLattice final_lattice;
  std::string dot;
  std::string json;
  std::vector<StageTiming> timings;
};

/// Stage names in execution order, as listed in the manifest.
const std::vector<std::string>& pipeline_stages();

/// normalize -> select_threshold -> binarize -> split_by_directory ->
/// directory_icebergs -> directory_topic_context -> directory_lattice ->
/// export. A failing stage rethrows its InputError/DomainError with the
/// stage name prefixed; an unreachable density target is a DomainError.
PipelineResult run_pipeline(const WeightsFile& weights, const PipelineConfig& config);

/// Run summary without timings, so it is byte-stable across runs.
nlohmann::ordered_json manifest(const PipelineResult& result);
nlohmann::ordered_json threshold_report_json(const ThresholdReport& report);

/// Writes context.json, directory_icebergs.json,
/// directory_topic_context.json, lattice.json, lattice.dot, manifest.json
/// and timings.json into `out_dir` (created if needed). Returns the paths.
std::vector<std::filesystem::path> write_artifacts(const PipelineResult& result, const std::filesystem::path& out_dir);

} // namespace fatcat
