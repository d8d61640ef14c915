#pragma once

// Brute-force reference for concept lattices. Reads the context only
// through `incident(g, m)` and works on 64-bit masks, so it shares no code
// path with the bitset derivations, NextClosure or the level-wise search.

#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fatcat/context.hpp"

namespace fatcat::oracle {

using Mask = std::uint64_t;

inline Mask extent_of(const FormalContext& ctx, Mask attrs) {
  Mask out = 0;
  for (std::size_t g = 0; g < ctx.object_count(); ++g) {
    bool all = true;
    for (std::size_t m = 0; m < ctx.attribute_count() && all; ++m)
      if ((attrs >> m & 1) && !ctx.incident(g, m)) all = false;
    if (all) out |= Mask{1} << g;
  }
  return out;
}

inline Mask intent_of(const FormalContext& ctx, Mask objs) {
  Mask out = 0;
  for (std::size_t m = 0; m < ctx.attribute_count(); ++m) {
    bool all = true;
    for (std::size_t g = 0; g < ctx.object_count() && all; ++g)
      if ((objs >> g & 1) && !ctx.incident(g, m)) all = false;
    if (all) out |= Mask{1} << m;
  }
  return out;
}

struct Concept {
  Mask extent;
  Mask intent;
  friend auto operator<=>(const Concept&, const Concept&) = default;
};

/// Closes all 2^|M| attribute subsets.
inline std::set<Concept> concepts(const FormalContext& ctx) {
  if (ctx.attribute_count() > 20 || ctx.object_count() > 63) throw std::logic_error("oracle context too large");
  std::set<Concept> out;
  for (Mask s = 0; s < (Mask{1} << ctx.attribute_count()); ++s) {
    Mask ext = extent_of(ctx, s);
    out.insert({ext, intent_of(ctx, ext)});
  }
  return out;
}

/// Concepts with |extent| / n_obj >= num / den.
inline std::set<Concept> frequent(const std::set<Concept>& all, std::size_t n_obj, std::uint64_t num,
                                  std::uint64_t den) {
  std::set<Concept> out;
  for (const auto& c : all)
    if (static_cast<std::uint64_t>(std::popcount(c.extent)) * den >= num * n_obj) out.insert(c);
  return out;
}

/// Cover pairs as (parent extent, child extent), by cubic transitive reduction.
inline std::set<std::pair<Mask, Mask>> covers(const std::set<Concept>& cs) {
  auto strict = [](Mask a, Mask b) { return a != b && (a & ~b) == 0; };
  std::set<std::pair<Mask, Mask>> out;
  for (const auto& p : cs)
    for (const auto& c : cs) {
      if (!strict(c.extent, p.extent)) continue;
      bool between = false;
      for (const auto& q : cs)
        if (strict(c.extent, q.extent) && strict(q.extent, p.extent)) {
          between = true;
          break;
        }
      if (!between) out.insert({p.extent, c.extent});
    }
  return out;
}

inline Mask to_mask(const BitSet& s) {
  Mask m = 0;
  for (std::size_t i : s.indices()) m |= Mask{1} << i;
  return m;
}

inline std::set<Concept> as_set(const ConceptSet& cs) {
  std::set<Concept> out;
  for (const auto& c : cs.concepts) out.insert({to_mask(c.extent), to_mask(c.intent)});
  return out;
}

inline std::set<std::pair<Mask, Mask>> covers_of(const ConceptSet& cs) {
  std::set<std::pair<Mask, Mask>> out;
  for (const auto& c : cs.covers)
    out.insert({to_mask(cs.concepts[c.parent].extent), to_mask(cs.concepts[c.child].extent)});
  return out;
}

} // namespace fatcat::oracle
