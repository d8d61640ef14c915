#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fatcat {

using TopicId = std::uint64_t;

/// A topic and its ranked descriptive words. `word_scores` is either empty
/// or parallel to `words`.
struct TopicInfo {
  TopicId topic_id = 0;
  std::vector<std::string> words;
  std::vector<double> word_scores;

  friend bool operator==(const TopicInfo&, const TopicInfo&) = default;
};

} // namespace fatcat
