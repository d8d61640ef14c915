#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fatcat/thresholding.hpp"
#include "fatcat/topic.hpp"

namespace fatcat {

/// Producers should emit at most this many weights per document; more only
/// triggers a warning.
inline constexpr std::size_t kTopTopicsPerDocument = 10;

/// Canonical weights file: documents [{id, path}], topics [{id, words?,
/// word_scores?}], weights [{doc, topic, weight}].
struct WeightsFile {
  WeightedDocTopicMatrix matrix;
  std::map<TopicId, TopicInfo> topics;
};

struct ParsedWeights {
  WeightsFile file;
  std::vector<std::string> warnings;
};

/// Validates and loads a weights JSON document. Errors are InputError
/// messages prefixed with the JSON path of the offending value.
ParsedWeights parse_weights(std::string_view json_text);

/// CSV shim: header "doc,topic,weight" (an optional "path" column may
/// follow "doc"). Documents and topics are declared in order of first
/// appearance; a missing path defaults to the document id.
ParsedWeights parse_weights_csv(std::string_view csv_text);

std::string write_weights(const WeightsFile& file);

struct SyntheticConfig {
  std::uint64_t seed = 42;
  std::size_t n_dirs = 3;
  std::size_t docs_per_dir = 50;
  std::size_t n_topics = 20;
  std::size_t topics_per_doc = kTopTopicsPerDocument;
};

/// Topics favoured by directory `dir`: a contiguous window (wrapping) that
/// overlaps the neighbouring directories' windows by one topic.
std::vector<TopicId> synthetic_biased_topics(const SyntheticConfig& config, std::size_t dir);

/// Seeded corpus of n_dirs directories. Every document names
/// `topics_per_doc` distinct topics, at least one from its directory's
/// biased window, and biased topics carry larger weights. Byte-identical
/// output for equal configs on every platform.
WeightsFile generate_synthetic(const SyntheticConfig& config);

} // namespace fatcat
