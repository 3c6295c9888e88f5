#pragma once

#include <vector>

#include "islands/rational.hpp"

namespace islands {

// Exact feasibility of { x : A x = b, x >= 0 } by phase-one simplex over
// rationals with Bland's rule (terminates on every input).
bool lp_feasible(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b);

// x in conv(points), closed hull.
bool in_convex_hull_lp(const Coords& x, const std::vector<Coords>& points);

// conv(p) and conv(q) share a point. Equivalent to the absence of a
// separating hyperplane.
bool hulls_intersect_lp(const std::vector<Coords>& p, const std::vector<Coords>& q);

}  // namespace islands
