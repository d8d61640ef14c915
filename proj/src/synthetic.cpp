#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <random>

#include "fatcat/error.hpp"
#include "fatcat/weights_io.hpp"

namespace fatcat {

namespace {

constexpr std::array<const char*, 40> kVocabulary = {
    "archive", "signal",  "vessel",   "orbit",   "harvest", "ledger",  "engine",  "river",
    "charter", "cipher",  "fortress", "canvas",  "reactor", "pilgrim", "market",  "glacier",
    "sensor",  "treaty",  "harbor",   "lantern", "circuit", "meadow",  "galaxy",  "furnace",
    "compass", "chronicle", "tunnel", "beacon",  "quarry",  "satellite", "vault", "forest",
    "mineral", "protocol", "garrison", "scroll", "turbine", "delta",   "citadel", "nebula"};

/// mt19937_64 output is fixed by the standard; the distributions in
/// <random> are not, so sampling is done by hand.
class Sampler {
public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }

private:
  std::mt19937_64 engine_;
};

double round6(double x) { return std::round(x * 1e6) / 1e6; }

std::string padded(std::size_t value, int width) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%0*zu", width, value);
  return buf;
}

int digits(std::size_t n) {
  int d = 1;
  while (n >= 10) {
    n /= 10;
    ++d;
  }
  return d;
}

} // namespace

std::vector<TopicId> synthetic_biased_topics(const SyntheticConfig& config, std::size_t dir) {
  const std::size_t n = config.n_topics;
  const std::size_t share = (n + config.n_dirs - 1) / config.n_dirs;
  const std::size_t width = std::min(n, std::max<std::size_t>(2, share + 1));
  const std::size_t start = dir * n / config.n_dirs;
  std::vector<TopicId> out;
  for (std::size_t i = 0; i < width; ++i) out.push_back((start + i) % n);
  return out;
}

WeightsFile generate_synthetic(const SyntheticConfig& config) {
  if (config.n_dirs == 0 || config.docs_per_dir == 0 || config.n_topics == 0 || config.topics_per_doc == 0)
    throw InputError("synthetic corpus counts must be positive");
  if (config.topics_per_doc > config.n_topics)
    throw InputError("topics_per_doc (" + std::to_string(config.topics_per_doc) + ") exceeds n_topics (" +
                     std::to_string(config.n_topics) + ")");

  Sampler rng(config.seed);
  std::vector<Document> documents;
  std::vector<TopicId> topic_ids;
  std::vector<WeightEntry> entries;
  for (std::size_t t = 0; t < config.n_topics; ++t) topic_ids.push_back(t);

  const int dir_digits = std::max(2, digits(config.n_dirs - 1));
  const int doc_digits = std::max(3, digits(config.docs_per_dir - 1));
  for (std::size_t d = 0; d < config.n_dirs; ++d) {
    const std::vector<TopicId> biased = synthetic_biased_topics(config, d);
    const std::string dir = "dir" + padded(d, dir_digits);
    for (std::size_t k = 0; k < config.docs_per_dir; ++k) {
      const std::size_t doc = documents.size();
      const std::string name = dir + "/doc" + padded(k, doc_digits);
      documents.push_back({name, name + ".txt"});

      std::vector<bool> taken(config.n_topics, false);
      std::vector<TopicId> remaining_biased = biased;
      std::vector<std::pair<double, TopicId>> picks;
      auto take_biased = [&] {
        const std::size_t i = rng.below(remaining_biased.size());
        const TopicId t = remaining_biased[i];
        remaining_biased.erase(remaining_biased.begin() + static_cast<std::ptrdiff_t>(i));
        taken[t] = true;
        picks.emplace_back(round6(0.4 + 0.6 * rng.unit()), t);
      };
      take_biased();
      while (picks.size() < config.topics_per_doc) {
        if (!remaining_biased.empty() && rng.unit() < 0.6) {
          take_biased();
          continue;
        }
        std::vector<TopicId> free;
        for (std::size_t t = 0; t < config.n_topics; ++t)
          if (!taken[t]) free.push_back(t);
        const TopicId t = free[rng.below(free.size())];
        taken[t] = true;
        std::erase(remaining_biased, t);
        const bool is_biased = std::find(biased.begin(), biased.end(), t) != biased.end();
        picks.emplace_back(round6(is_biased ? 0.4 + 0.6 * rng.unit() : 0.02 + 0.25 * rng.unit()), t);
      }
      std::sort(picks.begin(), picks.end(), [](const auto& a, const auto& b) {
        return a.first != b.first ? a.first > b.first : a.second < b.second;
      });
      for (const auto& [w, t] : picks) entries.push_back({doc, static_cast<std::size_t>(t), w});
    }
  }

  WeightsFile out;
  out.matrix = WeightedDocTopicMatrix(std::move(documents), std::move(topic_ids), std::move(entries));
  for (std::size_t t = 0; t < config.n_topics; ++t) {
    TopicInfo info;
    info.topic_id = t;
    for (std::size_t i = 0; i < 10; ++i) {
      info.words.emplace_back(kVocabulary[(t * 7 + i * 3) % kVocabulary.size()]);
      info.word_scores.push_back(round6(0.9 - 0.05 * static_cast<double>(i)));
    }
    out.topics.emplace(t, std::move(info));
  }
  return out;
}

} // namespace fatcat
