#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "fatcat/context.hpp"
#include "fatcat/error.hpp"

namespace fatcat {

bool canonical_less(const FormalConcept& a, const FormalConcept& b) {
  const std::size_t ea = a.extent.count();
  const std::size_t eb = b.extent.count();
  if (ea != eb) return ea > eb;
  return BitSet::lex_less(a.intent, b.intent);
}

std::vector<Cover> cover_relation(const std::vector<FormalConcept>& concepts) {
  {
    std::unordered_set<BitSet, BitSetHash> seen;
    for (const auto& c : concepts)
      if (!seen.insert(c.extent).second) throw InputError("cover_relation: duplicate concept extents");
  }

  std::vector<std::size_t> sizes(concepts.size());
  for (std::size_t i = 0; i < concepts.size(); ++i) sizes[i] = concepts[i].extent.count();
  // Ascending extent size: a strict superset always comes after its subsets.
  std::vector<std::size_t> by_size(concepts.size());
  std::iota(by_size.begin(), by_size.end(), std::size_t{0});
  std::stable_sort(by_size.begin(), by_size.end(), [&](std::size_t a, std::size_t b) { return sizes[a] < sizes[b]; });

  std::vector<Cover> covers;
  std::vector<std::size_t> upper;
  for (std::size_t child = 0; child < concepts.size(); ++child) {
    const BitSet& ext = concepts[child].extent;
    upper.clear();
    for (std::size_t p : by_size) {
      if (sizes[p] <= sizes[child] || !ext.is_subset_of(concepts[p].extent)) continue;
      // p is a minimal strict upper bound iff no accepted minimal one lies below it.
      bool minimal = std::none_of(upper.begin(), upper.end(), [&](std::size_t q) {
        return concepts[q].extent.is_subset_of(concepts[p].extent);
      });
      if (minimal) upper.push_back(p);
    }
    for (std::size_t p : upper) covers.push_back({p, child});
  }
  std::sort(covers.begin(), covers.end());
  return covers;
}

ConceptSet make_concept_set(const FormalContext& context, std::vector<FormalConcept> concepts) {
  std::sort(concepts.begin(), concepts.end(), canonical_less);
  ConceptSet out;
  out.objects = context.objects();
  out.attributes = context.attributes();
  out.covers = cover_relation(concepts);
  out.concepts = std::move(concepts);
  return out;
}

FormalConcept concept_from_attributes(const FormalContext& context, const BitSet& attributes) {
  FormalConcept c;
  c.extent = context.extent_of(attributes);
  c.intent = context.intent_of(c.extent);
  const std::size_t n = context.object_count();
  c.support = n == 0 ? 0.0 : static_cast<double>(c.extent.count()) / static_cast<double>(n);
  return c;
}

ConceptSet enumerate_concepts(const FormalContext& context, const EnumerationOptions& options) {
  const std::size_t n_attr = context.attribute_count();
  if (n_attr > options.max_attributes)
    throw DomainError("context too large for exact enumeration: " + std::to_string(n_attr) +
                      " attributes exceed the limit of " + std::to_string(options.max_attributes));

  std::vector<FormalConcept> found;
  FormalConcept current = concept_from_attributes(context, BitSet(n_attr));
  found.push_back(current);

  // NextClosure: visit closed intents in lectic order.
  for (;;) {
    bool advanced = false;
    for (std::size_t i = n_attr; i-- > 0;) {
      if (current.intent.test(i)) continue;
      BitSet candidate = current.intent.prefix(i);
      candidate.set(i);
      FormalConcept next = concept_from_attributes(context, candidate);
      if (next.intent.prefix(i) == current.intent.prefix(i)) {
        current = std::move(next);
        found.push_back(current);
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return make_concept_set(context, std::move(found));
}

} // namespace fatcat
