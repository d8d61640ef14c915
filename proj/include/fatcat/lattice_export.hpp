#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "fatcat/context.hpp"
#include "fatcat/topic.hpp"

namespace fatcat {

inline constexpr std::size_t kDefaultWordsPerTopic = 5;
inline constexpr std::string_view kLatticeSchema = "fatcat.lattice/1";

struct Label {
  std::string name;
  std::size_t concept_index;

  friend bool operator==(const Label&, const Label&) = default;
};

/// A concept set with reduced labeling: every attribute sits at its
/// attribute concept (m', m''), every object at its object concept
/// (g'', g'). Labels are listed in context order. For an iceberg, objects
/// whose object concept was cut are left out.
struct LabeledLattice {
  ConceptSet lattice;
  std::optional<double> minsupp;
  std::vector<Label> attribute_labels;
  std::vector<Label> object_labels;

  friend bool operator==(const LabeledLattice& a, const LabeledLattice& b) {
    return a.lattice.objects == b.lattice.objects && a.lattice.attributes == b.lattice.attributes &&
           a.lattice.concepts == b.lattice.concepts && a.lattice.covers == b.lattice.covers &&
           a.minsupp == b.minsupp && a.attribute_labels == b.attribute_labels && a.object_labels == b.object_labels;
  }
};

/// `context` must be the context `lattice` was computed from.
LabeledLattice reduced_labels(const ConceptSet& lattice, const FormalContext& context,
                              std::optional<double> minsupp = std::nullopt);

/// {3, 4, 5, 9} -> "3-5, 9"
std::string compress_ranges(const std::set<TopicId>& ids);
/// Inverse of compress_ranges; throws InputError on malformed text.
std::set<TopicId> expand_ranges(std::string_view text);

/// Graphviz digraph: one node per concept (`c<index>`), one edge per cover
/// (parent -> child). Node labels show attribute labels on top (compressed
/// to ID ranges when all are numeric) and object labels below. When
/// `topics` is given, a trailing comment legend lists each labeled topic
/// with its first `words_per_topic` words.
std::string to_dot(const LabeledLattice& lattice, const std::map<TopicId, TopicInfo>* topics = nullptr,
                   std::size_t words_per_topic = kDefaultWordsPerTopic);

nlohmann::ordered_json lattice_to_json_value(const LabeledLattice& lattice);
std::string to_json(const LabeledLattice& lattice);
/// Parses the lattice JSON written by to_json; throws InputError.
LabeledLattice lattice_from_json(std::string_view text);
LabeledLattice lattice_from_json_value(const nlohmann::ordered_json& value);

} // namespace fatcat
