#include "doctest.h"

#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "oracles.hpp"
#include "islands/errors.hpp"
#include "islands/hall.hpp"

using namespace islands::hall;
using islands::testing::hall_exhaustive_feasible;
using islands::testing::hall_flow_feasible;

namespace {

void check_tuples(const ColorProfile& p, const std::vector<Tuple>& tuples) {
  REQUIRE(tuples.size() == static_cast<std::size_t>(p.n));
  std::set<std::size_t> seen;
  std::vector<std::size_t> per_color(p.sizes.size(), 0);
  for (const auto& t : tuples) {
    CHECK(t.size() == static_cast<std::size_t>(p.k));
    std::set<int> colors;
    for (const auto& e : t) {
      colors.insert(e.color);
      CHECK(seen.insert(e.id).second);
      ++per_color[e.color];
    }
    CHECK(static_cast<int>(colors.size()) >= p.d);
  }
  CHECK(per_color == p.sizes);
}

std::vector<std::multiset<int>> compositions(const std::vector<Tuple>& tuples) {
  std::vector<std::multiset<int>> out;
  for (const auto& t : tuples) {
    std::multiset<int> c;
    for (const auto& e : t) c.insert(e.color);
    out.push_back(c);
  }
  return out;
}

}  // namespace

TEST_CASE("grid example: sizes 9,8,3,2,2 with k=4, n=6, d=3") {
  const ColorProfile p{{9, 8, 3, 2, 2}, 4, 6, 3};
  const HallReport r = check_hall(p);
  CHECK(r.feasible);
  CHECK(r.slack == std::vector<long long>{3, 1});

  const auto tuples = colorful_tuple_partition(p);
  check_tuples(p, tuples);
  // Rows P1..P6: classes 1 and 2 fill the first two columns, the third
  // column reads 3,3,3,4,4,5 and the leftovers 1,1,1,2,2,5 (1-based).
  const std::vector<std::multiset<int>> expected{{0, 1, 2, 0}, {0, 1, 2, 0}, {0, 1, 2, 0},
                                                 {0, 1, 3, 1}, {0, 1, 3, 1}, {0, 1, 4, 4}};
  CHECK(compositions(tuples) == expected);
}

TEST_CASE("infeasible and tight profiles") {
  const HallReport bad = check_hall({{13, 8, 3}, 4, 6, 3});
  CHECK_FALSE(bad.feasible);
  CHECK(bad.slack[0] == -1);
  CHECK_FALSE(hall_exhaustive_feasible({13, 8, 3}, 4, 6, 3));
  try {
    colorful_tuple_partition({{13, 8, 3}, 4, 6, 3});
    FAIL("expected HallViolation");
  } catch (const HallViolation& v) {
    CHECK(v.t() == 1);
    CHECK(v.classes() == std::vector<int>{0});
  }

  const HallReport tight = check_hall({{6, 6, 6}, 3, 6, 3});
  CHECK(tight.feasible);
  CHECK(tight.slack == std::vector<long long>{0, 0});
  const ColorProfile exact{{4, 4, 4, 4}, 4, 4, 4};
  const auto tuples = colorful_tuple_partition(exact);
  check_tuples(exact, tuples);
}

TEST_CASE("precondition errors") {
  CHECK_THROWS_AS(check_hall({{3, 3}, 2, 3, 3}), islands::PreconditionError);       // k < d
  CHECK_THROWS_AS(check_hall({{4, 5}, 3, 3, 3}), islands::PreconditionError);       // m < d
  CHECK_THROWS_AS(check_hall({{4, 4, 4}, 4, 4, 3}), islands::PreconditionError);    // sum != kn
}

TEST_CASE("check_hall agrees with the flow and exhaustive oracles on small profiles") {
  int checked = 0;
  for (int d = 2; d <= 3; ++d) {
    for (int k = d; k <= 8; ++k) {
      for (int n = 1; k * n <= 12; ++n) {
        for (int m = d; m <= 4; ++m) {
          // All compositions of kn into m nonnegative parts.
          std::vector<std::size_t> sizes(m, 0);
          std::function<void(int, int)> rec = [&](int i, int left) {
            if (i == m - 1) {
              sizes[i] = static_cast<std::size_t>(left);
              const ColorProfile p{sizes, k, n, d};
              const bool expect = hall_exhaustive_feasible(sizes, k, n, d);
              CHECK(hall_flow_feasible(sizes, k, n, d) == expect);
              CHECK(check_hall(p).feasible == expect);
              if (expect) check_tuples(p, colorful_tuple_partition(p));
              ++checked;
              return;
            }
            for (int v = 0; v <= left; ++v) {
              sizes[i] = static_cast<std::size_t>(v);
              rec(i + 1, left - v);
            }
          };
          rec(0, k * n);
        }
      }
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("random feasible profiles produce valid tuples") {
  std::mt19937_64 rng(3);
  int produced = 0;
  while (produced < 100) {
    const int d = 2 + static_cast<int>(rng() % 3);
    const int k = d + static_cast<int>(rng() % (8 - d));
    const int n = 1 + static_cast<int>(rng() % 8);
    const int m = d + static_cast<int>(rng() % 4);
    std::vector<std::size_t> sizes(m, 0);
    for (int e = 0; e < k * n; ++e) ++sizes[rng() % m];
    const ColorProfile p{sizes, k, n, d};
    if (!check_hall(p).feasible) continue;
    CHECK(hall_flow_feasible(sizes, k, n, d));
    check_tuples(p, colorful_tuple_partition(p));
    ++produced;
  }
}

TEST_CASE("merging the two smallest classes") {
  const MergeResult r = merge_colors({{9, 8, 3, 2, 2}, 4, 6, 3});
  CHECK(r.merged == std::pair<int, int>{3, 4});
  CHECK(r.profile.sizes == std::vector<std::size_t>{9, 8, 3, 4});
  CHECK(check_hall(r.profile).feasible);
}

TEST_CASE("tightness families cannot be merged") {
  const ColorProfile equal = tightness_family(3, TightnessVariant::kKEqualsD, 5);
  CHECK(equal.sizes == std::vector<std::size_t>{3, 3, 3, 3, 3});
  CHECK(equal.k == 3);
  CHECK(check_hall(equal).feasible);
  CHECK_THROWS_WITH_AS(merge_colors(equal), doctest::Contains("merge not guaranteed"), islands::PreconditionError);

  const ColorProfile greater = tightness_family(3, TightnessVariant::kKGreaterD, 3, 4);
  CHECK(greater.sizes == std::vector<std::size_t>{6, 2, 2, 2});
  CHECK(check_hall(greater).feasible);
  CHECK_THROWS_AS(merge_colors(greater), islands::PreconditionError);

  const ColorProfile planar = tightness_family(2, TightnessVariant::kKEqualsD, 3);
  CHECK(planar.sizes == std::vector<std::size_t>{2, 2, 2});
  CHECK(planar.k == 2);

  CHECK_THROWS_AS(tightness_family(3, TightnessVariant::kKEqualsD, 4), islands::PreconditionError);
  CHECK_THROWS_AS(tightness_family(3, TightnessVariant::kKGreaterD, 4, 4), islands::PreconditionError);
}

TEST_CASE("every merge of a tightness profile violates the condition") {
  for (const ColorProfile& p : {tightness_family(3, TightnessVariant::kKEqualsD, 5),
                                tightness_family(3, TightnessVariant::kKGreaterD, 3, 4),
                                tightness_family(4, TightnessVariant::kKEqualsD, 7),
                                tightness_family(4, TightnessVariant::kKGreaterD, 5, 6)}) {
    const int m = static_cast<int>(p.sizes.size());
    for (int x = 0; x < m; ++x) {
      for (int y = x + 1; y < m; ++y) {
        ColorProfile merged = p;
        merged.sizes[x] += merged.sizes[y];
        merged.sizes.erase(merged.sizes.begin() + y);
        CHECK_FALSE(check_hall(merged).feasible);
        CHECK_FALSE(hall_flow_feasible(merged.sizes, merged.k, merged.n, merged.d));
      }
    }
  }
}
