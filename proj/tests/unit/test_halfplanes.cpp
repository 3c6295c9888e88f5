#include "doctest.h"

#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "islands/errors.hpp"
#include "islands/halfplanes.hpp"
#include "islands/predicates.hpp"

using namespace islands;
using namespace islands::planar;
using islands::testing::halfplane_subsets_by_direction;
using islands::testing::make_set;
using islands::testing::random_instance;

namespace {

void check_family(const ColoredPointSet& set, const IdList& ids) {
  const PlanarContext ctx(set);
  const HalfplaneFamily family(ctx, ids);
  const std::set<IdList> expected = halfplane_subsets_by_direction(set, ids);

  std::set<IdList> got;
  for (const auto& e : family.entries()) {
    const IdList inside = family.to_ids(e.mask);
    CHECK(got.insert(inside).second);
    CHECK(e.count[0] == family.count(e.mask, 0));
    CHECK(e.count[1] == family.count(e.mask, 1));
    CHECK(e.count[0] + e.count[1] == inside.size());

    const OrientedCut cut = family.witness(e);
    CHECK(realized_part(cut, set, ids, Side::kAbove) == inside);
  }
  CHECK(got == expected);
}

}  // namespace

TEST_CASE("square: every open halfplane subset") {
  const auto set = make_set(2, {{0, 0}, {4, 1}, {5, 5}, {1, 4}}, {0, 1, 0, 1}, 2);
  const PlanarContext ctx(set);
  const HalfplaneFamily family(ctx, set.all_ids());
  // Convex position: the 4 singletons, 4 adjacent pairs and 4 triples.
  CHECK(family.entries().size() == 12);
  check_family(set, set.all_ids());
}

TEST_CASE("triangle with an interior point") {
  const auto set = make_set(2, {{0, 0}, {10, 0}, {3, 9}, {4, 3}}, {0, 0, 1, 1}, 2);
  check_family(set, set.all_ids());
  const PlanarContext ctx(set);
  const HalfplaneFamily family(ctx, set.all_ids());
  for (const auto& e : family.entries()) {
    // {interior} alone is never cut off.
    CHECK(family.to_ids(e.mask) != IdList{3});
  }
}

TEST_CASE("family matches the direction sweep on random sets") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const auto set = random_instance(seed, 3 + static_cast<int>(seed % 3), 2 + static_cast<int>(seed % 3));
    check_family(set, set.all_ids());
  }
}

TEST_CASE("family over a subset ignores the other points") {
  const auto set = random_instance(77, 4, 4);
  IdList ids;
  for (PointId id = 0; id < set.size(); id += 2) ids.push_back(id);
  check_family(set, ids);
}

TEST_CASE("orientation cache matches orient2d") {
  const auto set = random_instance(5, 3, 3);
  const PlanarContext ctx(set);
  for (PointId a = 0; a < set.size(); ++a) {
    for (PointId b = 0; b < set.size(); ++b) {
      for (PointId c = 0; c < set.size(); ++c) {
        if (a == b || b == c || a == c) continue;
        CHECK(ctx.orient(a, b, c) == orient2d(set.point(a), set.point(b), set.point(c)));
        CHECK(ctx.orient(a, b, c) == ctx.orient(a, b, c));
      }
    }
  }
}
