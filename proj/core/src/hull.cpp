#include "islands/hull.hpp"

#include <algorithm>
#include <unordered_set>

#include "islands/errors.hpp"
#include "islands/exact_lp.hpp"
#include "islands/predicates.hpp"

namespace islands {

namespace {

std::vector<Coords> gather(const ColoredPointSet& set, std::span<const PointId> ids) {
  std::vector<Coords> pts;
  pts.reserve(ids.size());
  for (PointId id : ids) pts.push_back(set.point(id));
  return pts;
}

// Andrew's monotone chain, strictly convex output (collinear points dropped).
IdList planar_hull(const ColoredPointSet& set, IdList ids) {
  std::sort(ids.begin(), ids.end(), [&](PointId a, PointId b) {
    const Coords& p = set.point(a);
    const Coords& q = set.point(b);
    return p[0] < q[0] || (p[0] == q[0] && p[1] < q[1]);
  });
  ids.erase(std::unique(ids.begin(), ids.end(),
                        [&](PointId a, PointId b) { return set.point(a) == set.point(b); }),
            ids.end());
  if (ids.size() < 3) return ids;
  IdList hull(2 * ids.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    while (k >= 2 && orient2d(set.point(hull[k - 2]), set.point(hull[k - 1]), set.point(ids[i])) <= 0) --k;
    hull[k++] = ids[i];
  }
  for (std::size_t i = ids.size() - 1, lower = k + 1; i > 0; --i) {
    while (k >= lower && orient2d(set.point(hull[k - 2]), set.point(hull[k - 1]), set.point(ids[i - 1])) <= 0) --k;
    hull[k++] = ids[i - 1];
  }
  hull.resize(k - 1);
  return hull;
}

int side3(const Coords& a, const Coords& b, const Coords& c, const Coords& x) {
  const std::array<Coords, 4> s{a, b, c, x};
  return orientation(s);
}

}  // namespace

ConvexHull::ConvexHull(const ColoredPointSet& set, std::span<const PointId> ids)
    : set_(&set), ids_(ids.begin(), ids.end()) {
  if (ids_.empty()) throw PreconditionError("convex hull of an empty set");
  const int d = set.dim();
  if (d == 2) {
    vertices_ = planar_hull(set, ids_);
    kind_ = vertices_.size() >= 3 ? Kind::kPolygon : Kind::kLp;
    return;
  }
  if (d == 3 && ids_.size() >= 4 && affine_rank(gather(set, ids_)) == 3) {
    // Brute-force facet enumeration; parts are small and in general position
    // every facet is a triangle.
    std::unordered_set<PointId> on_hull;
    const std::size_t n = ids_.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        for (std::size_t k = j + 1; k < n; ++k) {
          const Coords& a = set.point(ids_[i]);
          const Coords& b = set.point(ids_[j]);
          const Coords& c = set.point(ids_[k]);
          int seen = 0;
          bool facet = true;
          for (std::size_t l = 0; l < n && facet; ++l) {
            if (l == i || l == j || l == k) continue;
            const int s = side3(a, b, c, set.point(ids_[l]));
            if (s == 0) {
              facet = false;  // coplanar quadruple: leave to the LP path
            } else if (seen == 0) {
              seen = s;
            } else if (s != seen) {
              facet = false;
            }
          }
          if (!facet) continue;
          // Orient so every other point is on the negative side.
          if (seen > 0) {
            facets_.push_back({ids_[i], ids_[k], ids_[j]});
          } else {
            facets_.push_back({ids_[i], ids_[j], ids_[k]});
          }
          on_hull.insert(ids_[i]);
          on_hull.insert(ids_[j]);
          on_hull.insert(ids_[k]);
        }
      }
    }
    if (facets_.size() >= 4) {
      vertices_.assign(on_hull.begin(), on_hull.end());
      std::sort(vertices_.begin(), vertices_.end());
      kind_ = Kind::kFacets;
      return;
    }
    facets_.clear();
  }
  // General case: extreme points by LP.
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    std::vector<Coords> others;
    for (std::size_t j = 0; j < ids_.size(); ++j) {
      if (j != i) others.push_back(set.point(ids_[j]));
    }
    if (!in_convex_hull_lp(set.point(ids_[i]), others)) vertices_.push_back(ids_[i]);
  }
  kind_ = Kind::kLp;
}

bool ConvexHull::contains(const Coords& x) const {
  const ColoredPointSet& set = *set_;
  switch (kind_) {
    case Kind::kPolygon: {
      const std::size_t h = vertices_.size();
      for (std::size_t i = 0; i < h; ++i) {
        if (orient2d(set.point(vertices_[i]), set.point(vertices_[(i + 1) % h]), x) < 0) return false;
      }
      return true;
    }
    case Kind::kFacets: {
      for (const auto& f : facets_) {
        if (side3(set.point(f[0]), set.point(f[1]), set.point(f[2]), x) > 0) return false;
      }
      return true;
    }
    case Kind::kLp:
      break;
  }
  return in_convex_hull_lp(x, gather(set, vertices_.empty() ? ids_ : vertices_));
}

bool is_island(const ColoredPointSet& set, std::span<const PointId> ids) {
  if (ids.empty()) return true;
  std::vector<char> inside(set.size(), 0);
  for (PointId id : ids) inside.at(id) = 1;
  const ConvexHull hull(set, ids);
  for (PointId other = 0; other < set.size(); ++other) {
    if (!inside[other] && hull.contains(set.point(other))) return false;
  }
  return true;
}

bool hulls_disjoint(const ColoredPointSet& set, std::span<const PointId> p, std::span<const PointId> q) {
  return !hulls_intersect_lp(gather(set, p), gather(set, q));
}

}  // namespace islands
