#include "doctest.h"

#include <cstdlib>

#include "fixtures.hpp"
#include "islands/errors.hpp"
#include "islands/hull.hpp"
#include "islands/oracle.hpp"
#include "islands/planar.hpp"
#include "islands/sandwich.hpp"

using namespace islands;
using namespace islands::oracle;
using islands::testing::make_set;
using islands::testing::random_instance;

TEST_CASE("islands of small configurations") {
  const auto square = make_set(2, {{0, 0}, {4, 1}, {5, 5}, {1, 4}}, {0, 1, 0, 1}, 2);
  CHECK(enumerate_islands(square, 2, 1).size() == 6);
  CHECK(enumerate_islands(square, 2, 2).size() == 4);
  CHECK(enumerate_islands(square, 4, 2) == std::vector<IdList>{{0, 1, 2, 3}});

  const auto tri = make_set(2, {{0, 0}, {10, 0}, {3, 9}, {4, 3}}, {0, 0, 1, 1}, 2);
  CHECK(enumerate_islands(tri, 3, 1) == std::vector<IdList>{{0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

TEST_CASE("enumerated islands are islands, without repeats, and shrink with j") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const auto set = random_instance(seed, 3, 3, 2, 3);
    for (int k = 2; k <= 4; ++k) {
      std::size_t prev = SIZE_MAX;
      for (int j = 1; j <= 3; ++j) {
        const auto islands = enumerate_islands(set, k, j);
        CHECK(islands.size() <= prev);
        prev = islands.size();
        for (std::size_t i = 0; i < islands.size(); ++i) {
          CHECK(is_island(set, islands[i]));
          CHECK(set.colors_present(islands[i]) >= j);
          if (i > 0) CHECK(islands[i - 1] < islands[i]);
        }
      }
    }
  }
}

TEST_CASE("partition search") {
  SUBCASE("n = 1") {
    const auto set = random_instance(1, 4, 1);
    const auto r = brute_force_partition(set, 4, 2, 1);
    CHECK(r.status == SearchStatus::kFound);
    CHECK(r.partition.parts == std::vector<IdList>{set.all_ids()});
  }
  SUBCASE("one color missing") {
    const auto set = make_set(2, {{0, 0}, {9, 1}, {4, 7}, {13, 5}, {2, 12}, {11, 14}}, {0, 0, 0, 0, 0, 0}, 2);
    const auto r = brute_force_partition(set, 3, 2, 2);
    CHECK(r.status == SearchStatus::kNone);
    CHECK(r.confirmed_by_second_pass);
  }
  SUBCASE("planar instances always split") {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
      const int k = 2 + static_cast<int>(seed % 4);
      const int n = 14 / k >= 3 ? 2 + static_cast<int>(seed % 2) : 2;
      const auto set = random_instance(seed, k, n);
      const auto r = brute_force_partition(set, k, 2, n);
      REQUIRE(r.status == SearchStatus::kFound);
      CHECK(brute_force_check(set, r.partition, k, 2));
      const auto solved = planar::partition_plane(planar::PlanarInstance(set, k, n));
      CHECK(brute_force_check(set, solved.partition, k, 2));
    }
  }
  SUBCASE("budget exhaustion is its own outcome") {
    const auto set = random_instance(3, 3, 4);
    SearchBudget tiny;
    tiny.node_limit = 2;
    const auto r = brute_force_partition(set, 3, 2, 4, tiny);
    CHECK(r.status == SearchStatus::kBudgetExceeded);
    CHECK(std::string(status_name(r.status)) != status_name(SearchStatus::kNone));
    tiny.max_points = 4;
    CHECK_THROWS_AS(enumerate_islands(set, 3, 1, tiny), BudgetExceeded);
  }
  SUBCASE("size mismatch") {
    const auto set = random_instance(3, 3, 2);
    CHECK_THROWS_AS(brute_force_partition(set, 4, 2, 2), PreconditionError);
  }
}

TEST_CASE("brute_force_check catches bad partitions") {
  const auto square = make_set(2, {{0, 0}, {4, 1}, {5, 5}, {1, 4}}, {0, 1, 0, 1}, 2);
  CHECK(brute_force_check(square, {{{0, 1}, {2, 3}}}, 2, 2));
  CHECK_FALSE(brute_force_check(square, {{{0, 2}, {1, 3}}}, 2, 2));  // crossing diagonals
  CHECK_FALSE(brute_force_check(square, {{{0, 1}, {2, 3}}}, 3, 2));
  CHECK_FALSE(brute_force_check(square, {{{0, 1}, {2}}}, 2, 1));

  const auto tri = make_set(2, {{0, 0}, {10, 0}, {3, 9}, {4, 3}}, {0, 0, 1, 1}, 2);
  CHECK_FALSE(brute_force_check(tri, {{{0, 1, 2}}}, 3, 1));  // misses point 3
}

TEST_CASE("conjecture scan in the proven regimes") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto planar = random_instance(seed, 4, 3);
    const auto r = conjecture_scan(planar, 4, 2, 2, 3);
    CHECK(r.hall_feasible);
    CHECK(r.island_partition_found);
    CHECK_FALSE(r.counterexample_candidate);
    CHECK(r.dump.empty());

    const auto space = random_instance(seed, 4, 2, 3);
    const auto r3 = conjecture_scan(space, 4, 3, 3, 2);
    CHECK(r3.hall_feasible);
    CHECK(r3.island_partition_found);
  }
}

TEST_CASE("conjecture scan with four colors in space runs") {
  const auto set = random_instance(8, 4, 2, 3, 4);
  const auto r = conjecture_scan(set, 4, 4, 3, 2);
  CHECK(r.search != SearchStatus::kBudgetExceeded);
  CHECK(r.counterexample_candidate == (r.hall_feasible && r.search == SearchStatus::kNone));
}

TEST_CASE("node limit from the environment") {
  SearchBudget base;
  base.node_limit = 17;
  ::setenv("ISLANDS_NODE_LIMIT", "1234", 1);
  CHECK(SearchBudget::from_env(base).node_limit == 1234);
  ::setenv("ISLANDS_NODE_LIMIT", "garbage", 1);
  CHECK(SearchBudget::from_env(base).node_limit == 17);
  ::unsetenv("ISLANDS_NODE_LIMIT");
  CHECK(SearchBudget::from_env(base).node_limit == 17);
}
