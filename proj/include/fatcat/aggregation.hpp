#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fatcat/context.hpp"
#include "fatcat/iceberg.hpp"
#include "fatcat/rate.hpp"

namespace fatcat {

using DirectoryId = std::string;

inline constexpr std::size_t kDefaultDirectoryDepth = 1;

/// Directories x topics; (d, t) is incident iff topic t is present in
/// directory d. Rows keep every directory that held a document, including
/// those where no topic survived.
struct DirectoryTopicContext {
  FormalContext context;
};

/// Partitions objects by `directory_of(path, depth)`. Each part keeps the
/// full attribute list and column order; objects keep their relative order.
/// Throws InputError when the context carries no object paths.
std::map<DirectoryId, FormalContext> split_by_directory(const FormalContext& context, std::size_t depth);

/// Topics that occur in the intent of at least one frequent concept with a
/// non-empty extent. The extent condition only matters at minsupp 0, where
/// the bottom concept (possibly with no documents) is frequent too.
BitSet topics_in_frequent_intents(const IcebergLattice& iceberg);
/// Topics m held by some document with supp({m}) >= minsupp; equals the
/// above for the same minsupp.
BitSet frequent_singletons(const FormalContext& context, const Rate& minsupp);

/// Per-directory iceberg lattices, keyed like the input.
std::map<DirectoryId, IcebergLattice> directory_icebergs(const std::map<DirectoryId, FormalContext>& subcontexts,
                                                         const Rate& minsupp);

/// Row i marks the topics present in the frequent intents of directory i.
/// All sub-contexts must share the same attribute list.
DirectoryTopicContext directory_topic_context(const std::map<DirectoryId, IcebergLattice>& icebergs);
DirectoryTopicContext directory_topic_context(const std::map<DirectoryId, FormalContext>& subcontexts,
                                              const Rate& minsupp);

/// Full concept lattice of the directory-topic context, or its iceberg when
/// `minsupp` is given.
ConceptSet directory_lattice(const DirectoryTopicContext& dtc, const std::optional<Rate>& minsupp,
                             const EnumerationOptions& options = {});

} // namespace fatcat
