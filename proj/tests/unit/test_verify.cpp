#include "doctest.h"

#include "fixtures.hpp"
#include "oracles.hpp"
#include "islands/errors.hpp"
#include "islands/verify.hpp"

using namespace islands;
using islands::testing::make_set;

namespace {

const ClauseResult& clause(const VerificationReport& r, Clause c) {
  for (const auto& x : r.clauses) {
    if (x.clause == c) return x;
  }
  throw std::logic_error("clause missing");
}

ColoredPointSet two_triangles() {
  // Left triangle 0,1,2 and right triangle 3,4,5, far apart.
  return make_set(2, {{0, 0}, {2, 1}, {0, 3}, {10, 0}, {12, 2}, {11, 4}}, {0, 1, 0, 1, 0, 1}, 2);
}

}  // namespace

TEST_CASE("valid partition passes every clause") {
  const auto s = two_triangles();
  const auto r = verify_island_partition({{{0, 1, 2}, {3, 4, 5}}}, s, 3, 2);
  CHECK(r.passed);
  CHECK(r.clauses.size() == 6);
  CHECK(r.first_failure() == nullptr);
}

TEST_CASE("crossing parts report hulls intersect") {
  const auto s = two_triangles();
  const auto r = verify_island_partition({{{0, 4, 5}, {1, 2, 3}}}, s, 3, 2);
  CHECK_FALSE(r.passed);
  const auto& c = clause(r, Clause::kHullsDisjoint);
  CHECK_FALSE(c.passed);
  CHECK(c.detail.find("hulls intersect") != std::string::npos);
  CHECK(c.witness_parts.size() == 2);
}

TEST_CASE("part containing a foreign point is not an island") {
  const auto s = make_set(2, {{0, 0}, {6, 0}, {3, 6}, {3, 2}, {20, 0}, {21, 3}}, {0, 1, 0, 1, 0, 1}, 2);
  const auto r = verify_island_partition({{{0, 1, 2}, {3, 4, 5}}}, s, 3, 2);
  const auto& c = clause(r, Clause::kIslands);
  CHECK_FALSE(c.passed);
  CHECK(c.detail.find("not an island") != std::string::npos);
  CHECK(c.witness_points == IdList{3});
}

TEST_CASE("wrong k fails the part size clause") {
  const auto s = two_triangles();
  const auto r = verify_island_partition({{{0, 1, 2}, {3, 4, 5}}}, s, 2, 2);
  CHECK_FALSE(r.passed);
  CHECK(r.first_failure()->clause == Clause::kPartSize);
  CHECK(r.first_failure()->detail.find("part") != std::string::npos);
}

TEST_CASE("colorfulness and coverage") {
  const auto s = two_triangles();
  CHECK_FALSE(verify_island_partition({{{0, 2, 4}, {1, 3, 5}}}, s, 3, 2).passed);
  const auto r = verify_island_partition({{{0, 1, 2}}}, s, 3, 2);
  CHECK(clause(r, Clause::kCoversSet).witness_points == IdList{3, 4, 5});
}

TEST_CASE("malformed partitions produce reports instead of exceptions") {
  const auto s = two_triangles();
  const auto unknown = verify_island_partition({{{0, 1, 99}, {3, 4, 5}}}, s, 3, 2);
  CHECK_FALSE(unknown.passed);
  CHECK(unknown.first_failure()->clause == Clause::kWellFormed);
  const auto repeated = verify_island_partition({{{0, 1, 1}, {3, 4, 5}}}, s, 3, 2);
  CHECK_FALSE(repeated.passed);
  CHECK_FALSE(verify_island_partition({{{}, {0, 1, 2, 3, 4, 5}}}, s, 3, 2).passed);
  CHECK_FALSE(verify_island_partition({}, s, 3, 2).passed);
}

TEST_CASE("disjoint hulls of a partition imply the island clause") {
  // Exhaustive over all splits of small random sets into two triples or
  // three pairs.
  for (int seed = 0; seed < 12; ++seed) {
    const auto s = islands::testing::random_instance(seed, 3, 2);
    for (const IdList& first : islands::testing::subsets(6, 3)) {
      if (first[0] != 0) continue;
      IdList second;
      for (PointId p = 0; p < 6; ++p) {
        if (std::find(first.begin(), first.end(), p) == first.end()) second.push_back(p);
      }
      const auto r = verify_island_partition({{first, second}}, s, 3, 1);
      if (clause(r, Clause::kHullsDisjoint).passed) CHECK(clause(r, Clause::kIslands).passed);
    }
  }
}
