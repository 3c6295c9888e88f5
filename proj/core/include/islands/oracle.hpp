#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "islands/point_set.hpp"
#include "islands/verify.hpp"

// Exhaustive ground truth for small instances. Slow on purpose: nothing here
// reuses the constructive solvers.
namespace islands::oracle {

struct SearchBudget {
  int max_points = 16;
  int max_parts = 16;
  std::int64_t node_limit = 5'000'000;

  // node_limit taken from ISLANDS_NODE_LIMIT when set to a positive integer.
  static SearchBudget from_env(SearchBudget base);
  static SearchBudget from_env();
};

// Raised only by enumerate_islands; brute_force_partition reports budget
// exhaustion as a status instead.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Every k-subset meeting at least j colors whose hull holds no other point,
// in lexicographic order.
std::vector<IdList> enumerate_islands(const ColoredPointSet& set, int k, int j, const SearchBudget& budget = {});

enum class SearchStatus { kFound, kNone, kBudgetExceeded };
const char* status_name(SearchStatus status);

struct PartitionSearch {
  SearchStatus status = SearchStatus::kNone;
  IslandPartition partition;
  std::int64_t nodes = 0;
  bool confirmed_by_second_pass = false;  // kNone results on <= 12 points
};

// Exact: a partition into n pairwise hull-disjoint j-colorful k-islands is
// found iff one exists. Requires kn = |S|.
PartitionSearch brute_force_partition(const ColoredPointSet& set, int k, int j, int n,
                                      const SearchBudget& budget = {});

// Checks a claimed partition with LP only (point-in-hull and hull
// intersection), independent of verify_island_partition.
bool brute_force_check(const ColoredPointSet& set, const IslandPartition& partition, int k, int j);

struct ConjectureReport {
  bool hall_feasible = false;
  SearchStatus search = SearchStatus::kNone;
  bool island_partition_found = false;
  bool counterexample_candidate = false;  // Hall feasible, exhaustively no partition
  IslandPartition partition;
  std::string dump;                       // verbatim instance for candidates
};

// Pairs the combinatorial condition with the geometric search, looking for
// d-colorful k-islands among m colors.
ConjectureReport conjecture_scan(const ColoredPointSet& set, int k, int m, int d, int n,
                                 const SearchBudget& budget = {});

}  // namespace islands::oracle
