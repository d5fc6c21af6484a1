#pragma once

#include <memory>

#include "marksmith/lattice.hpp"
#include "marksmith/sections.hpp"

namespace marksmith {

// Bundles a group with its subgroup lattice and section data. Addresses of
// the members are handed out freely, so the context is pinned in place.
struct GroupCtx {
  GroupPtr group;
  Lattice lat;
  SectionData sec;

  explicit GroupCtx(GroupPtr g, int max_order = kDefaultMaxOrder)
      : group(std::move(g)), lat(build_lattice(*group, max_order)), sec(build_sections(lat)) {}

  GroupCtx(const GroupCtx&) = delete;
  GroupCtx& operator=(const GroupCtx&) = delete;
};

using CtxPtr = std::shared_ptr<GroupCtx>;

inline CtxPtr make_ctx(GroupPtr g, int max_order = kDefaultMaxOrder) {
  return std::make_shared<GroupCtx>(std::move(g), max_order);
}

}  // namespace marksmith
