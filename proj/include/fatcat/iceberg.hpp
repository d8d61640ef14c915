#pragma once

#include <cstddef>
#include <vector>

#include "fatcat/context.hpp"
#include "fatcat/rate.hpp"

namespace fatcat {

inline constexpr double kDefaultMinSupport = 0.1;

/// Per-level bookkeeping of the level-wise key search. Level k examines
/// attribute sets of size k.
struct LevelStats {
  std::size_t level = 0;
  std::size_t candidates = 0;     // sets whose support was counted
  std::size_t frequent_keys = 0;  // candidates kept as generators for level k + 1
};

struct IcebergLattice {
  Rate minsupp;
  ConceptSet lattice;
  std::vector<LevelStats> levels;
};

/// support(B) >= minsupp, with the boundary compared exactly.
bool is_frequent(const FormalContext& context, const std::vector<AttributeId>& attributes, const Rate& minsupp);
bool is_frequent(const FormalContext& context, const std::vector<AttributeId>& attributes, double minsupp);

/// All concepts whose intent is frequent, with their cover relation.
///
/// Level-wise search over key sets (minimal generators): candidates of size
/// k are joined from frequent keys of size k - 1 sharing a (k - 2)-prefix,
/// dropped unless every (k - 1)-subset is a frequent key, and counted with
/// one extent intersection each. A candidate whose support equals the
/// smallest support among its subsets is not a key. The closure of each
/// frequent key is read off supports: B'' = B + {m : supp(B + m) = supp(B)}.
///
/// Throws DomainError on a context without objects.
IcebergLattice iceberg_concepts(const FormalContext& context, const Rate& minsupp);
IcebergLattice iceberg_concepts(const FormalContext& context, double minsupp);

} // namespace fatcat
