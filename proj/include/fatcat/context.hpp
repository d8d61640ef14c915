#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fatcat/bitset.hpp"

namespace fatcat {

using ObjectId = std::string;
using AttributeId = std::string;

/// Binary formal context (objects, attributes, incidence).
///
/// Immutable after construction. Incidence is held twice, as packed object
/// rows (width |M|) and packed attribute columns (width |G|), so both
/// derivation directions are word-parallel intersections. Object and
/// attribute order is fixed at construction and every derived output is
/// reported in that order.
class FormalContext {
public:
  FormalContext() = default;

  /// `incidence[g][m]` is true iff object g has attribute m. `object_paths`
  /// is optional metadata (empty, or one entry per object).
  FormalContext(std::vector<ObjectId> objects, std::vector<AttributeId> attributes,
                const std::vector<std::vector<bool>>& incidence,
                std::vector<std::string> object_paths = {});

  /// Same as above with rows already packed (each of width |attributes|).
  static FormalContext from_rows(std::vector<ObjectId> objects, std::vector<AttributeId> attributes,
                                 std::vector<BitSet> rows, std::vector<std::string> object_paths = {});

  const std::vector<ObjectId>& objects() const noexcept { return objects_; }
  const std::vector<AttributeId>& attributes() const noexcept { return attributes_; }
  const std::vector<std::string>& object_paths() const noexcept { return object_paths_; }
  std::size_t object_count() const noexcept { return objects_.size(); }
  std::size_t attribute_count() const noexcept { return attributes_.size(); }

  bool incident(std::size_t object, std::size_t attribute) const noexcept {
    return rows_[object].test(attribute);
  }
  const BitSet& row(std::size_t object) const noexcept { return rows_[object]; }
  const BitSet& column(std::size_t attribute) const noexcept { return columns_[attribute]; }

  /// Throws InputError naming the id when it is unknown.
  std::size_t object_index(std::string_view id) const;
  std::size_t attribute_index(std::string_view id) const;
  BitSet object_set(const std::vector<ObjectId>& ids) const;
  BitSet attribute_set(const std::vector<AttributeId>& ids) const;
  std::vector<ObjectId> object_names(const BitSet& extent) const;
  std::vector<AttributeId> attribute_names(const BitSet& intent) const;

  /// A' for a set of objects (bits over G); result has bits over M.
  BitSet intent_of(const BitSet& objects) const;
  /// B' for a set of attributes (bits over M); result has bits over G.
  BitSet extent_of(const BitSet& attributes) const;
  /// B''
  BitSet closure_of(const BitSet& attributes) const { return intent_of(extent_of(attributes)); }

  /// Incident cells over all cells; 0 for an empty grid.
  double density() const noexcept;
  std::size_t incidence_count() const noexcept;

private:
  void index_names();

  std::vector<ObjectId> objects_;
  std::vector<AttributeId> attributes_;
  std::vector<std::string> object_paths_;
  std::vector<BitSet> rows_;
  std::vector<BitSet> columns_;
  std::unordered_map<std::string, std::size_t> object_lookup_;
  std::unordered_map<std::string, std::size_t> attribute_lookup_;
};

std::vector<AttributeId> derive_intent(const FormalContext& context, const std::vector<ObjectId>& objects);
std::vector<ObjectId> derive_extent(const FormalContext& context, const std::vector<AttributeId>& attributes);
std::vector<AttributeId> closure(const FormalContext& context, const std::vector<AttributeId>& attributes);

/// |B'| / |G|. Throws DomainError when the context has no objects.
double support(const FormalContext& context, const std::vector<AttributeId>& attributes);

struct FormalConcept {
  BitSet extent;  // over the owning context's objects
  BitSet intent;  // over the owning context's attributes
  double support = 0.0;

  friend bool operator==(const FormalConcept&, const FormalConcept&) = default;
};

struct Cover {
  std::size_t parent;
  std::size_t child;

  friend bool operator==(const Cover&, const Cover&) = default;
  friend auto operator<=>(const Cover&, const Cover&) = default;
};

/// Concepts in canonical order (extent size descending, then intent
/// lexicographic) together with their cover relation. Carries the owning
/// context's object and attribute names so it can be serialized on its own.
struct ConceptSet {
  std::vector<ObjectId> objects;
  std::vector<AttributeId> attributes;
  std::vector<FormalConcept> concepts;
  std::vector<Cover> covers;
};

/// Canonical concept order: |extent| descending, then intent lexicographic.
bool canonical_less(const FormalConcept& a, const FormalConcept& b);

/// Transitive reduction of extent inclusion. Pairs are (parent, child)
/// indices into `concepts`, sorted. Throws InputError on duplicate extents.
std::vector<Cover> cover_relation(const std::vector<FormalConcept>& concepts);

/// Sorts `concepts` canonically and attaches names and covers.
ConceptSet make_concept_set(const FormalContext& context, std::vector<FormalConcept> concepts);

/// Builds the concept (B', B'') generated by an attribute set.
FormalConcept concept_from_attributes(const FormalContext& context, const BitSet& attributes);

struct EnumerationOptions {
  std::size_t max_attributes = 25;
};

/// All formal concepts of `context` via closure-order generation
/// (NextClosure). Throws DomainError when |M| exceeds the configured limit.
ConceptSet enumerate_concepts(const FormalContext& context, const EnumerationOptions& options = {});

} // namespace fatcat
