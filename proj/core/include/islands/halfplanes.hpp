#pragma once

#include <bitset>
#include <cstdint>
#include <span>
#include <vector>

#include "islands/cut.hpp"
#include "islands/point_set.hpp"

namespace islands::planar {

inline constexpr std::size_t kMaxPlanarPoints = 128;
using PointMask = std::bitset<kMaxPlanarPoints>;

// Planar point set with a lazily filled orientation cache over point ids.
class PlanarContext {
 public:
  explicit PlanarContext(const ColoredPointSet& set);

  const ColoredPointSet& set() const noexcept { return *set_; }
  int orient(PointId a, PointId b, PointId c) const;

 private:
  const ColoredPointSet* set_;
  std::size_t n_;
  mutable std::vector<std::int8_t> cache_;
};

// One combinatorially distinct open halfplane of a subset: the points left
// (or right) of the line through p and q, with p and q each pushed to either
// side by an infinitesimal perturbation.
struct HalfplaneEntry {
  PointMask mask;                 // local indices (positions in HalfplaneFamily::ids())
  std::size_t count[2] = {0, 0};  // points of color 0 / color 1 inside
  PointId p = 0;                  // spanning pair, global ids, p < q
  PointId q = 0;
  bool left = true;
  bool take_p = false;
  bool take_q = false;
};

// Every nonempty proper subset of `ids` cut off by an open halfplane, once
// each, in deterministic order: spanning pairs lexicographically, left side
// before right side, then the four perturbations (none, p, q, both). The
// first occurrence of a subset keeps its witness.
class HalfplaneFamily {
 public:
  HalfplaneFamily(const PlanarContext& ctx, IdList ids);

  const PlanarContext& context() const noexcept { return *ctx_; }
  const IdList& ids() const noexcept { return ids_; }
  const std::vector<HalfplaneEntry>& entries() const noexcept { return entries_; }
  const PointMask& full() const noexcept { return full_; }
  const PointMask& color_mask(int color) const { return color_masks_[color]; }

  std::size_t count(const PointMask& mask, int color) const { return (mask & color_masks_[color]).count(); }
  IdList to_ids(const PointMask& mask) const;
  OrientedCut witness(const HalfplaneEntry& entry) const;

 private:
  const PlanarContext* ctx_;
  IdList ids_;
  std::vector<HalfplaneEntry> entries_;
  PointMask full_;
  PointMask color_masks_[2];
};

}  // namespace islands::planar
