#include "islands/cut.hpp"

#include <algorithm>
#include <string>

#include "islands/errors.hpp"
#include "islands/predicates.hpp"

namespace islands {

OrientedCut OrientedCut::through(const ColoredPointSet& set, IdList ids, bool flip) {
  const int d = set.dim();
  if (ids.size() != static_cast<std::size_t>(d)) {
    throw PreconditionError("a canonical cut needs exactly d = " + std::to_string(d) + " spanning points");
  }
  std::sort(ids.begin(), ids.end());
  // normal_j = (-1)^j * det(difference matrix with column j removed).
  std::vector<Coords> diffs(d - 1, Coords(d));
  const Coords& base = set.point(ids[0]);
  for (int i = 1; i < d; ++i) {
    for (int k = 0; k < d; ++k) diffs[i - 1][k] = set.point(ids[i])[k] - base[k];
  }
  Coords normal(d);
  for (int j = 0; j < d; ++j) {
    std::vector<std::vector<Rational>> minor(d - 1, std::vector<Rational>(d - 1));
    for (int r = 0; r < d - 1; ++r) {
      for (int c = 0, cc = 0; c < d; ++c) {
        if (c == j) continue;
        minor[r][cc++] = diffs[r][c];
      }
    }
    normal[j] = determinant(std::move(minor));
    if (j % 2 == 1) normal[j] = -normal[j];
  }
  if (std::all_of(normal.begin(), normal.end(), [](const Rational& v) { return sgn(v) == 0; })) {
    throw DegenerateInputError("spanning points of a cut are affinely dependent", ids);
  }
  // For d = 2 this is (-(q-p).y, (q-p).x): above means left of p->q.
  if (d == 2) {
    normal[0] = -(set.point(ids[1])[1] - base[1]);
    normal[1] = set.point(ids[1])[0] - base[0];
  }
  if (flip) {
    for (auto& v : normal) v = -v;
  }
  OrientedCut cut;
  cut.dim = d;
  cut.spanning_ids = std::move(ids);
  cut.offset = 0;
  for (int k = 0; k < d; ++k) cut.offset += normal[k] * base[k];
  cut.normal = std::move(normal);
  return cut;
}

OrientedCut OrientedCut::from_equation(Coords normal, Rational offset) {
  OrientedCut cut;
  cut.dim = static_cast<int>(normal.size());
  cut.normal = std::move(normal);
  cut.offset = std::move(offset);
  return cut;
}

int OrientedCut::side_of(const Coords& x) const {
  if (x.size() != normal.size()) throw PreconditionError("cut dimension does not match point dimension");
  Rational v = -offset;
  for (std::size_t k = 0; k < normal.size(); ++k) v += normal[k] * x[k];
  return sgn(v) > 0 ? 1 : (sgn(v) < 0 ? -1 : 0);
}

Side OrientedCut::realized_side(const ColoredPointSet& set, PointId id) const {
  const int s = side_of(set.point(id));
  if (s > 0) return Side::kAbove;
  if (s < 0) return Side::kBelow;
  auto it = side_assignment.find(id);
  if (it == side_assignment.end()) {
    throw PreconditionError("point " + std::to_string(id) + " lies on the cut but has no side assignment");
  }
  return it->second;
}

bool OrientedCut::is_valid_for(const ColoredPointSet& set) const {
  if (dim != set.dim() || normal.size() != static_cast<std::size_t>(dim)) return false;
  if (side_assignment.size() != spanning_ids.size()) return false;
  for (PointId id : spanning_ids) {
    if (!side_assignment.contains(id) || side_of(set.point(id)) != 0) return false;
  }
  for (PointId id = 0; id < set.size(); ++id) {
    if (std::find(spanning_ids.begin(), spanning_ids.end(), id) != spanning_ids.end()) continue;
    if (side_of(set.point(id)) == 0) return false;
  }
  return true;
}

HalfspaceCounts halfspace_counts(const OrientedCut& cut, const ColoredPointSet& set,
                                 std::span<const PointId> ids) {
  if (cut.dim != set.dim()) throw PreconditionError("cut dimension does not match the point set");
  HalfspaceCounts counts;
  const auto m = static_cast<std::size_t>(set.num_colors());
  counts.strict.assign(m, {});
  counts.realized_above.assign(m, 0);
  counts.realized_below.assign(m, 0);
  for (PointId id : ids) {
    const int c = set.color(id);
    const int s = cut.side_of(set.point(id));
    if (s > 0) {
      ++counts.strict[c].above;
      ++counts.realized_above[c];
    } else if (s < 0) {
      ++counts.strict[c].below;
      ++counts.realized_below[c];
    } else {
      ++counts.strict[c].on;
      auto it = cut.side_assignment.find(id);
      if (it != cut.side_assignment.end()) {
        ++(it->second == Side::kAbove ? counts.realized_above[c] : counts.realized_below[c]);
      }
    }
  }
  return counts;
}

HalfspaceCounts halfspace_counts(const OrientedCut& cut, const ColoredPointSet& set) {
  const IdList ids = set.all_ids();
  return halfspace_counts(cut, set, ids);
}

IdList realized_part(const OrientedCut& cut, const ColoredPointSet& set, std::span<const PointId> ids,
                     Side side) {
  IdList out;
  for (PointId id : ids) {
    if (cut.realized_side(set, id) == side) out.push_back(id);
  }
  return out;
}

}  // namespace islands
