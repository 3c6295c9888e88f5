#pragma once

#include <optional>
#include <span>
#include <vector>

#include "islands/point_set.hpp"
#include "islands/rational.hpp"

namespace islands {

// Sign of det of the matrix whose rows are `rows` (square).
int determinant_sign(std::vector<std::vector<Rational>> rows);
Rational determinant(std::vector<std::vector<Rational>> rows);

// Sign of the affine frame spanned by d+1 points in R^d: the determinant of
// the rows p_1 - p_0, ..., p_d - p_0. Zero iff the points are affinely
// dependent. Throws PreconditionError on a dimension mismatch.
int orientation(std::span<const Coords> simplex);
int orientation(const ColoredPointSet& set, std::span<const PointId> ids);

// Planar special case, no allocation.
int orient2d(const Coords& a, const Coords& b, const Coords& c);

// Dimension of the affine hull of `points` (−1 for the empty list).
int affine_rank(std::span<const Coords> points);

// First affinely dependent subset of size <= d+1 in lexicographic order, if any.
std::optional<IdList> find_affine_dependency(const ColoredPointSet& set);

bool is_general_position(const ColoredPointSet& set);

// Throws DegenerateInputError naming the dependent subset.
void require_general_position(const ColoredPointSet& set);

}  // namespace islands
