#include "fatcat/iceberg.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <unordered_map>

#include "fatcat/error.hpp"

namespace fatcat {

namespace {

struct Key {
  std::vector<std::size_t> attributes;  // ascending
  BitSet extent;
  std::size_t count = 0;
};

void require_objects(const FormalContext& context) {
  if (context.object_count() == 0)
    throw DomainError("iceberg lattice is undefined on a context without objects");
}

BitSet closure_from_supports(const FormalContext& context, const Key& key) {
  BitSet intent(context.attribute_count());
  for (std::size_t m = 0; m < context.attribute_count(); ++m)
    if (key.extent.intersection_count(context.column(m)) == key.count) intent.set(m);
  return intent;
}

} // namespace

bool is_frequent(const FormalContext& context, const std::vector<AttributeId>& attributes, const Rate& minsupp) {
  BitSet b = context.attribute_set(attributes);
  require_objects(context);
  return minsupp.leq_fraction(context.extent_of(b).count(), context.object_count());
}

bool is_frequent(const FormalContext& context, const std::vector<AttributeId>& attributes, double minsupp) {
  return is_frequent(context, attributes, Rate::from_double(minsupp));
}

IcebergLattice iceberg_concepts(const FormalContext& context, double minsupp) {
  return iceberg_concepts(context, Rate::from_double(minsupp));
}

IcebergLattice iceberg_concepts(const FormalContext& context, const Rate& minsupp) {
  require_objects(context);
  const std::size_t n_obj = context.object_count();
  const std::size_t n_attr = context.attribute_count();
  const std::size_t min_count = minsupp.min_count(n_obj);

  IcebergLattice result;
  result.minsupp = minsupp;

  std::vector<Key> keys;  // all frequent keys found so far, in level order
  std::vector<Key> level;
  level.push_back({{}, BitSet::full(n_obj), n_obj});
  result.levels.push_back({0, 1, 1});

  for (std::size_t k = 1; !level.empty() && k <= n_attr; ++k) {
    // Frequent keys of the previous level, indexed for subset lookups.
    std::map<std::vector<std::size_t>, std::size_t> index;
    for (std::size_t i = 0; i < level.size(); ++i) index.emplace(level[i].attributes, i);

    std::vector<Key> next;
    LevelStats stats{k, 0, 0};
    auto consider = [&](std::vector<std::size_t> attrs, BitSet extent, std::size_t parent_floor) {
      ++stats.candidates;
      const std::size_t count = extent.count();
      if (count < min_count || count == parent_floor) return;
      next.push_back({std::move(attrs), std::move(extent), count});
    };

    if (k == 1) {
      const Key& root = level.front();
      for (std::size_t m = 0; m < n_attr; ++m)
        consider({m}, root.extent & context.column(m), root.count);
    } else {
      // Apriori join: keys sharing their first k - 2 attributes. `level` is
      // kept sorted, so such keys are contiguous.
      for (std::size_t a = 0; a < level.size(); ++a) {
        const auto& left = level[a].attributes;
        for (std::size_t b = a + 1; b < level.size(); ++b) {
          const auto& right = level[b].attributes;
          if (!std::equal(left.begin(), left.end() - 1, right.begin())) break;
          std::vector<std::size_t> attrs = left;
          attrs.push_back(right.back());

          // Every (k - 1)-subset must be a frequent key; track the smallest
          // support among them.
          std::size_t floor = std::min(level[a].count, level[b].count);
          bool viable = true;
          std::vector<std::size_t> subset(attrs.size() - 1);
          for (std::size_t drop = 0; drop + 2 < attrs.size() && viable; ++drop) {
            std::copy(attrs.begin(), attrs.begin() + static_cast<std::ptrdiff_t>(drop), subset.begin());
            std::copy(attrs.begin() + static_cast<std::ptrdiff_t>(drop) + 1, attrs.end(),
                      subset.begin() + static_cast<std::ptrdiff_t>(drop));
            auto it = index.find(subset);
            if (it == index.end()) {
              viable = false;
            } else {
              floor = std::min(floor, level[it->second].count);
            }
          }
          if (!viable) continue;
          consider(std::move(attrs), level[a].extent & level[b].extent, floor);
        }
      }
    }

    stats.frequent_keys = next.size();
    result.levels.push_back(stats);
    for (auto& key : level) keys.push_back(std::move(key));
    std::sort(next.begin(), next.end(), [](const Key& x, const Key& y) { return x.attributes < y.attributes; });
    level = std::move(next);
  }
  for (auto& key : level) keys.push_back(std::move(key));

  // Distinct closures of frequent keys are exactly the frequent intents.
  std::unordered_map<BitSet, std::size_t, BitSetHash> seen;
  std::vector<FormalConcept> concepts;
  for (const Key& key : keys) {
    if (seen.contains(key.extent)) continue;
    seen.emplace(key.extent, concepts.size());
    FormalConcept c;
    c.extent = key.extent;
    c.intent = closure_from_supports(context, key);
    c.support = static_cast<double>(key.count) / static_cast<double>(n_obj);
    concepts.push_back(std::move(c));
  }
  result.lattice = make_concept_set(context, std::move(concepts));
  return result;
}

} // namespace fatcat
