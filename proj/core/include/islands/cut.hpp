#pragma once

#include <map>
#include <span>
#include <vector>

#include "islands/point_set.hpp"
#include "islands/rational.hpp"

namespace islands {

enum class Side { kAbove, kBelow };

// Hyperplane {x : normal·x = offset}; "above" is normal·x > offset.
// A canonical cut is spanned by points of the owning set and assigns each of
// them to a side, modelling an infinitesimal perturbation of the plane.
struct OrientedCut {
  int dim = 0;
  IdList spanning_ids;
  Coords normal;
  Rational offset;
  std::map<PointId, Side> side_assignment;

  // Hyperplane through the given points (|ids| = d, affinely independent).
  // `flip` reverses the orientation of the normal.
  static OrientedCut through(const ColoredPointSet& set, IdList ids, bool flip = false);
  static OrientedCut from_equation(Coords normal, Rational offset);

  // Strict side: +1 above, -1 below, 0 on the hyperplane.
  int side_of(const Coords& x) const;

  // Side after applying side_assignment (points off the plane keep their
  // strict side). Throws PreconditionError for an unassigned on-plane point.
  Side realized_side(const ColoredPointSet& set, PointId id) const;

  // Checks the cut invariants against `set`: every non-spanning point is
  // strictly off the plane and side_assignment covers exactly spanning_ids.
  bool is_valid_for(const ColoredPointSet& set) const;
};

struct SideCounts {
  std::size_t above = 0;
  std::size_t on = 0;
  std::size_t below = 0;
};

struct HalfspaceCounts {
  std::vector<SideCounts> strict;    // per color, by strict sign
  std::vector<std::size_t> realized_above;  // per color, after side_assignment
  std::vector<std::size_t> realized_below;
};

HalfspaceCounts halfspace_counts(const OrientedCut& cut, const ColoredPointSet& set);
HalfspaceCounts halfspace_counts(const OrientedCut& cut, const ColoredPointSet& set,
                                 std::span<const PointId> ids);

// Ids whose realized side is `side`, restricted to `ids`.
IdList realized_part(const OrientedCut& cut, const ColoredPointSet& set, std::span<const PointId> ids,
                     Side side);

}  // namespace islands
