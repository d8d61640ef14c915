#include "fatcat/aggregation.hpp"

#include "fatcat/error.hpp"
#include "fatcat/thresholding.hpp"

namespace fatcat {

std::map<DirectoryId, FormalContext> split_by_directory(const FormalContext& context, std::size_t depth) {
  if (depth == 0) throw InputError("directory depth must be at least 1");
  if (context.object_paths().empty() && context.object_count() > 0)
    throw InputError("context carries no object paths to split by");

  std::map<DirectoryId, std::vector<std::size_t>> members;
  for (std::size_t g = 0; g < context.object_count(); ++g) {
    const std::string& path = context.object_paths()[g];
    if (path.empty()) throw InputError("object '" + context.objects()[g] + "' has an empty path");
    try {
      members[directory_of(path, depth)].push_back(g);
    } catch (const InputError& e) {
      throw InputError("object '" + context.objects()[g] + "': " + e.what());
    }
  }

  std::map<DirectoryId, FormalContext> out;
  for (const auto& [dir, indices] : members) {
    std::vector<ObjectId> objects;
    std::vector<std::string> paths;
    std::vector<BitSet> rows;
    for (std::size_t g : indices) {
      objects.push_back(context.objects()[g]);
      paths.push_back(context.object_paths()[g]);
      rows.push_back(context.row(g));
    }
    out.emplace(dir, FormalContext::from_rows(std::move(objects), context.attributes(), std::move(rows),
                                              std::move(paths)));
  }
  return out;
}

BitSet topics_in_frequent_intents(const IcebergLattice& iceberg) {
  BitSet present(iceberg.lattice.attributes.size());
  for (const auto& c : iceberg.lattice.concepts)
    if (!c.extent.none()) present |= c.intent;
  return present;
}

BitSet frequent_singletons(const FormalContext& context, const Rate& minsupp) {
  if (context.object_count() == 0) throw DomainError("support is undefined on a context without objects");
  BitSet present(context.attribute_count());
  for (std::size_t m = 0; m < context.attribute_count(); ++m) {
    const std::size_t held = context.column(m).count();
    if (held > 0 && minsupp.leq_fraction(held, context.object_count())) present.set(m);
  }
  return present;
}

std::map<DirectoryId, IcebergLattice> directory_icebergs(const std::map<DirectoryId, FormalContext>& subcontexts,
                                                         const Rate& minsupp) {
  std::map<DirectoryId, IcebergLattice> out;
  for (const auto& [dir, ctx] : subcontexts) {
    try {
      if (ctx.object_count() == 0) throw InputError("sub-context has no objects");
      out.emplace(dir, iceberg_concepts(ctx, minsupp));
    } catch (const InputError& e) {
      throw InputError("directory '" + dir + "': " + e.what());
    } catch (const DomainError& e) {
      throw DomainError("directory '" + dir + "': " + e.what());
    }
  }
  return out;
}

DirectoryTopicContext directory_topic_context(const std::map<DirectoryId, IcebergLattice>& icebergs) {
  std::vector<ObjectId> directories;
  std::vector<AttributeId> topics;
  std::vector<BitSet> rows;
  bool first = true;
  for (const auto& [dir, iceberg] : icebergs) {
    if (first) {
      topics = iceberg.lattice.attributes;
      first = false;
    } else if (iceberg.lattice.attributes != topics) {
      throw InputError("directory '" + dir + "': topic columns differ from the other directories");
    }
    directories.push_back(dir);
    rows.push_back(topics_in_frequent_intents(iceberg));
  }
  return {FormalContext::from_rows(std::move(directories), std::move(topics), std::move(rows))};
}

DirectoryTopicContext directory_topic_context(const std::map<DirectoryId, FormalContext>& subcontexts,
                                              const Rate& minsupp) {
  return directory_topic_context(directory_icebergs(subcontexts, minsupp));
}

ConceptSet directory_lattice(const DirectoryTopicContext& dtc, const std::optional<Rate>& minsupp,
                             const EnumerationOptions& options) {
  if (dtc.context.object_count() == 0) throw InputError("directory-topic context has no directories");
  if (minsupp) return iceberg_concepts(dtc.context, *minsupp).lattice;
  return enumerate_concepts(dtc.context, options);
}

} // namespace fatcat
