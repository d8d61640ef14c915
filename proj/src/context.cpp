#include "fatcat/context.hpp"

#include <utility>

#include "fatcat/error.hpp"

namespace fatcat {

FormalContext::FormalContext(std::vector<ObjectId> objects, std::vector<AttributeId> attributes,
                             const std::vector<std::vector<bool>>& incidence,
                             std::vector<std::string> object_paths) {
  if (incidence.size() != objects.size())
    throw InputError("incidence has " + std::to_string(incidence.size()) + " rows, expected " +
                     std::to_string(objects.size()));
  std::vector<BitSet> rows;
  rows.reserve(objects.size());
  for (std::size_t g = 0; g < incidence.size(); ++g) {
    if (incidence[g].size() != attributes.size())
      throw InputError("incidence row " + std::to_string(g) + " has " + std::to_string(incidence[g].size()) +
                       " columns, expected " + std::to_string(attributes.size()));
    BitSet row(attributes.size());
    for (std::size_t m = 0; m < attributes.size(); ++m)
      if (incidence[g][m]) row.set(m);
    rows.push_back(std::move(row));
  }
  *this = from_rows(std::move(objects), std::move(attributes), std::move(rows), std::move(object_paths));
}

FormalContext FormalContext::from_rows(std::vector<ObjectId> objects, std::vector<AttributeId> attributes,
                                       std::vector<BitSet> rows, std::vector<std::string> object_paths) {
  if (rows.size() != objects.size())
    throw InputError("incidence has " + std::to_string(rows.size()) + " rows, expected " +
                     std::to_string(objects.size()));
  if (!object_paths.empty() && object_paths.size() != objects.size())
    throw InputError("object_paths has " + std::to_string(object_paths.size()) + " entries, expected " +
                     std::to_string(objects.size()));
  FormalContext ctx;
  ctx.objects_ = std::move(objects);
  ctx.attributes_ = std::move(attributes);
  ctx.object_paths_ = std::move(object_paths);
  ctx.index_names();

  const std::size_t n_attr = ctx.attributes_.size();
  ctx.columns_.assign(n_attr, BitSet(ctx.objects_.size()));
  for (std::size_t g = 0; g < rows.size(); ++g) {
    if (rows[g].size() != n_attr)
      throw InputError("incidence row " + std::to_string(g) + " has width " + std::to_string(rows[g].size()) +
                       ", expected " + std::to_string(n_attr));
    for (std::size_t m : rows[g].indices()) ctx.columns_[m].set(g);
  }
  ctx.rows_ = std::move(rows);
  return ctx;
}

void FormalContext::index_names() {
  object_lookup_.clear();
  attribute_lookup_.clear();
  for (std::size_t i = 0; i < objects_.size(); ++i)
    if (!object_lookup_.emplace(objects_[i], i).second)
      throw InputError("duplicate object id '" + objects_[i] + "'");
  for (std::size_t i = 0; i < attributes_.size(); ++i)
    if (!attribute_lookup_.emplace(attributes_[i], i).second)
      throw InputError("duplicate attribute id '" + attributes_[i] + "'");
}

std::size_t FormalContext::object_index(std::string_view id) const {
  auto it = object_lookup_.find(std::string(id));
  if (it == object_lookup_.end()) throw InputError("unknown object id '" + std::string(id) + "'");
  return it->second;
}

std::size_t FormalContext::attribute_index(std::string_view id) const {
  auto it = attribute_lookup_.find(std::string(id));
  if (it == attribute_lookup_.end()) throw InputError("unknown attribute id '" + std::string(id) + "'");
  return it->second;
}

BitSet FormalContext::object_set(const std::vector<ObjectId>& ids) const {
  BitSet out(objects_.size());
  for (const auto& id : ids) out.set(object_index(id));
  return out;
}

BitSet FormalContext::attribute_set(const std::vector<AttributeId>& ids) const {
  BitSet out(attributes_.size());
  for (const auto& id : ids) out.set(attribute_index(id));
  return out;
}

std::vector<ObjectId> FormalContext::object_names(const BitSet& extent) const {
  std::vector<ObjectId> out;
  for (std::size_t g : extent.indices()) out.push_back(objects_[g]);
  return out;
}

std::vector<AttributeId> FormalContext::attribute_names(const BitSet& intent) const {
  std::vector<AttributeId> out;
  for (std::size_t m : intent.indices()) out.push_back(attributes_[m]);
  return out;
}

BitSet FormalContext::intent_of(const BitSet& objects) const {
  BitSet out = BitSet::full(attributes_.size());
  for (std::size_t g : objects.indices()) {
    out &= rows_[g];
    if (out.none()) break;
  }
  return out;
}

BitSet FormalContext::extent_of(const BitSet& attributes) const {
  BitSet out = BitSet::full(objects_.size());
  for (std::size_t m : attributes.indices()) {
    out &= columns_[m];
    if (out.none()) break;
  }
  return out;
}

std::size_t FormalContext::incidence_count() const noexcept {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.count();
  return n;
}

double FormalContext::density() const noexcept {
  const std::size_t cells = objects_.size() * attributes_.size();
  return cells == 0 ? 0.0 : static_cast<double>(incidence_count()) / static_cast<double>(cells);
}

std::vector<AttributeId> derive_intent(const FormalContext& context, const std::vector<ObjectId>& objects) {
  return context.attribute_names(context.intent_of(context.object_set(objects)));
}

std::vector<ObjectId> derive_extent(const FormalContext& context, const std::vector<AttributeId>& attributes) {
  return context.object_names(context.extent_of(context.attribute_set(attributes)));
}

std::vector<AttributeId> closure(const FormalContext& context, const std::vector<AttributeId>& attributes) {
  return context.attribute_names(context.closure_of(context.attribute_set(attributes)));
}

double support(const FormalContext& context, const std::vector<AttributeId>& attributes) {
  BitSet b = context.attribute_set(attributes);
  if (context.object_count() == 0) throw DomainError("support is undefined on a context without objects");
  return static_cast<double>(context.extent_of(b).count()) / static_cast<double>(context.object_count());
}

} // namespace fatcat
