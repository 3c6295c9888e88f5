#pragma once

#include <array>
#include <span>
#include <vector>

#include "islands/point_set.hpp"

namespace islands {

// Exact convex hull of a subset of a point set. In the plane the vertices
// are stored counterclockwise; in R^3 (full-dimensional case) as outward
// triangular facets; otherwise membership falls back to exact LP.
class ConvexHull {
 public:
  ConvexHull(const ColoredPointSet& set, std::span<const PointId> ids);

  // Extreme points of the hull, as ids of the owning set.
  const IdList& vertices() const noexcept { return vertices_; }
  // Outward facets for the d=3 full-dimensional case (empty otherwise).
  const std::vector<std::array<PointId, 3>>& facets() const noexcept { return facets_; }

  // Closed-hull membership (boundary counts as inside).
  bool contains(const Coords& x) const;

 private:
  enum class Kind { kPolygon, kFacets, kLp };

  const ColoredPointSet* set_;
  IdList ids_;
  IdList vertices_;
  std::vector<std::array<PointId, 3>> facets_;
  Kind kind_ = Kind::kLp;
};

// Y is an island of S: no point of S outside Y lies in conv Y.
bool is_island(const ColoredPointSet& set, std::span<const PointId> ids);

// conv(P) and conv(Q) are disjoint (exact separating-hyperplane LP).
bool hulls_disjoint(const ColoredPointSet& set, std::span<const PointId> p, std::span<const PointId> q);

}  // namespace islands
