#include "islands/predicates.hpp"

#include <algorithm>
#include <string>

#include "islands/errors.hpp"

namespace islands {

namespace {

// Row-echelon reduction in place; returns the rank and accumulates the
// determinant sign/value when the matrix is square.
int eliminate(std::vector<std::vector<Rational>>& m, Rational* det) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m.front().size();
  if (det) *det = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && sgn(m[pivot][c]) == 0) ++pivot;
    if (pivot == rows) {
      if (det) *det = 0;
      continue;
    }
    if (pivot != rank) {
      std::swap(m[pivot], m[rank]);
      if (det) *det = -*det;
    }
    const Rational p = m[rank][c];
    if (det) *det *= p;
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (sgn(m[r][c]) == 0) continue;
      const Rational f = m[r][c] / p;
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  if (det && rank < rows) *det = 0;
  return static_cast<int>(rank);
}

void check_square(const std::vector<std::vector<Rational>>& rows) {
  for (const auto& r : rows) {
    if (r.size() != rows.size()) throw PreconditionError("determinant of a non-square matrix");
  }
}

}  // namespace

Rational determinant(std::vector<std::vector<Rational>> rows) {
  check_square(rows);
  Rational det;
  eliminate(rows, &det);
  return det;
}

int determinant_sign(std::vector<std::vector<Rational>> rows) { return sgn(determinant(std::move(rows))); }

int orient2d(const Coords& a, const Coords& b, const Coords& c) {
  const Rational lhs = (b[0] - a[0]) * (c[1] - a[1]);
  const Rational rhs = (b[1] - a[1]) * (c[0] - a[0]);
  return cmp(lhs, rhs) > 0 ? 1 : (cmp(lhs, rhs) < 0 ? -1 : 0);
}

int orientation(std::span<const Coords> simplex) {
  if (simplex.empty()) throw PreconditionError("orientation of an empty simplex");
  const std::size_t d = simplex.front().size();
  if (simplex.size() != d + 1) {
    throw PreconditionError("orientation needs d+1 = " + std::to_string(d + 1) + " points, got " +
                            std::to_string(simplex.size()));
  }
  for (const auto& p : simplex) {
    if (p.size() != d) throw PreconditionError("orientation: dimension mismatch");
  }
  if (d == 2) return orient2d(simplex[0], simplex[1], simplex[2]);
  std::vector<std::vector<Rational>> rows(d, std::vector<Rational>(d));
  for (std::size_t i = 1; i <= d; ++i) {
    for (std::size_t k = 0; k < d; ++k) rows[i - 1][k] = simplex[i][k] - simplex[0][k];
  }
  return determinant_sign(std::move(rows));
}

int orientation(const ColoredPointSet& set, std::span<const PointId> ids) {
  std::vector<Coords> pts;
  pts.reserve(ids.size());
  for (PointId id : ids) pts.push_back(set.point(id));
  return orientation(pts);
}

int affine_rank(std::span<const Coords> points) {
  if (points.empty()) return -1;
  std::vector<std::vector<Rational>> rows;
  rows.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) {
    std::vector<Rational> r(points[i].size());
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = points[i][k] - points[0][k];
    rows.push_back(std::move(r));
  }
  if (rows.empty()) return 0;
  return eliminate(rows, nullptr);
}

std::optional<IdList> find_affine_dependency(const ColoredPointSet& set) {
  const std::size_t n = set.size();
  const std::size_t d = static_cast<std::size_t>(set.dim());
  const std::size_t r = std::min(n, d + 1);
  if (r == 0) return std::nullopt;
  // Every subset of size <= d+1 sits inside some subset of size min(n, d+1),
  // so checking those suffices.
  IdList combo(r);
  for (std::size_t i = 0; i < r; ++i) combo[i] = i;
  std::vector<Coords> pts(r);
  while (true) {
    for (std::size_t i = 0; i < r; ++i) pts[i] = set.point(combo[i]);
    bool independent;
    if (r == 3 && d == 2) {
      independent = orient2d(pts[0], pts[1], pts[2]) != 0;
    } else {
      independent = affine_rank(pts) == static_cast<int>(r) - 1;
    }
    if (!independent) return combo;
    std::size_t i = r;
    while (i > 0 && combo[i - 1] == n - r + i - 1) --i;
    if (i == 0) break;
    ++combo[i - 1];
    for (std::size_t j = i; j < r; ++j) combo[j] = combo[j - 1] + 1;
  }
  return std::nullopt;
}

bool is_general_position(const ColoredPointSet& set) { return !find_affine_dependency(set).has_value(); }

void require_general_position(const ColoredPointSet& set) {
  if (auto witness = find_affine_dependency(set)) {
    std::string ids;
    for (PointId id : *witness) ids += (ids.empty() ? "" : ",") + std::to_string(id);
    throw DegenerateInputError("point set is not in general position: points {" + ids +
                                   "} are affinely dependent",
                               *witness);
  }
}

}  // namespace islands
