#include "islands/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <unordered_map>

#include "islands/errors.hpp"
#include "islands/exact_lp.hpp"
#include "islands/hall.hpp"
#include "islands/hull.hpp"

namespace islands::oracle {

SearchBudget SearchBudget::from_env(SearchBudget base) {
  if (const char* env = std::getenv("ISLANDS_NODE_LIMIT")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) base.node_limit = v;
  }
  return base;
}

SearchBudget SearchBudget::from_env() { return from_env(SearchBudget{}); }

const char* status_name(SearchStatus status) {
  switch (status) {
    case SearchStatus::kFound: return "found";
    case SearchStatus::kNone: return "none";
    case SearchStatus::kBudgetExceeded: return "budget_exceeded";
  }
  return "?";
}

std::vector<IdList> enumerate_islands(const ColoredPointSet& set, int k, int j, const SearchBudget& budget) {
  if (k < 1) throw PreconditionError("k must be positive");
  if (static_cast<int>(set.size()) > budget.max_points) {
    throw BudgetExceeded(std::to_string(set.size()) + " points exceed the budget of " +
                         std::to_string(budget.max_points));
  }
  std::vector<IdList> out;
  const std::size_t total = set.size();
  const std::size_t r = static_cast<std::size_t>(k);
  if (r > total) return out;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  std::int64_t nodes = 0;
  while (true) {
    if (++nodes > budget.node_limit) throw BudgetExceeded("island enumeration exceeded the node limit");
    IdList subset(idx.begin(), idx.end());
    if (set.colors_present(subset) >= j && is_island(set, subset)) out.push_back(std::move(subset));
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == total - r + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t t = i; t < r; ++t) idx[t] = idx[t - 1] + 1;
  }
  return out;
}

namespace {

std::vector<Coords> coords_of(const ColoredPointSet& set, const IdList& ids) {
  std::vector<Coords> out;
  out.reserve(ids.size());
  for (PointId id : ids) out.push_back(set.point(id));
  return out;
}

class Backtracker {
 public:
  Backtracker(const ColoredPointSet& set, std::vector<IdList> islands, int n, std::int64_t limit, bool reverse)
      : set_(set), islands_(std::move(islands)), n_(n), limit_(limit), reverse_(reverse) {
    if (reverse_) std::reverse(islands_.begin(), islands_.end());
    by_point_.resize(set.size());
    for (std::size_t i = 0; i < islands_.size(); ++i) {
      for (PointId p : islands_[i]) by_point_[p].push_back(i);
    }
    used_.assign(set.size(), false);
  }

  SearchStatus run() {
    try {
      return step() ? SearchStatus::kFound : SearchStatus::kNone;
    } catch (const BudgetExceeded&) {
      return SearchStatus::kBudgetExceeded;
    }
  }

  std::int64_t nodes() const { return nodes_; }
  IslandPartition partition() const {
    IslandPartition out;
    for (std::size_t i : chosen_) out.parts.push_back(islands_[i]);
    return out;
  }

 private:
  bool disjoint(std::size_t a, std::size_t b) {
    const std::uint64_t key = (static_cast<std::uint64_t>(std::min(a, b)) << 32) | std::max(a, b);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    const bool v = !hulls_intersect_lp(coords_of(set_, islands_[a]), coords_of(set_, islands_[b]));
    memo_.emplace(key, v);
    return v;
  }

  bool step() {
    if (static_cast<int>(chosen_.size()) == n_) return true;
    // Branch on the first (or last, in reverse mode) uncovered point.
    std::size_t pivot = set_.size();
    for (std::size_t s = 0; s < set_.size(); ++s) {
      const std::size_t p = reverse_ ? set_.size() - 1 - s : s;
      if (!used_[p]) {
        pivot = p;
        break;
      }
    }
    if (pivot == set_.size()) return false;
    for (std::size_t i : by_point_[pivot]) {
      if (++nodes_ > limit_) throw BudgetExceeded("node limit");
      const IdList& island = islands_[i];
      if (std::any_of(island.begin(), island.end(), [&](PointId p) { return used_[p]; })) continue;
      if (!std::all_of(chosen_.begin(), chosen_.end(), [&](std::size_t c) { return disjoint(c, i); })) continue;
      for (PointId p : island) used_[p] = true;
      chosen_.push_back(i);
      if (step()) return true;
      chosen_.pop_back();
      for (PointId p : island) used_[p] = false;
    }
    return false;
  }

  const ColoredPointSet& set_;
  std::vector<IdList> islands_;
  int n_;
  std::int64_t limit_;
  bool reverse_;
  std::vector<std::vector<std::size_t>> by_point_;
  std::vector<bool> used_;
  std::vector<std::size_t> chosen_;
  std::unordered_map<std::uint64_t, bool> memo_;
  std::int64_t nodes_ = 0;
};

}  // namespace

PartitionSearch brute_force_partition(const ColoredPointSet& set, int k, int j, int n, const SearchBudget& budget) {
  if (k < 1 || n < 1) throw PreconditionError("k and n must be positive");
  if (static_cast<std::size_t>(k) * static_cast<std::size_t>(n) != set.size()) {
    throw PreconditionError("|S| = " + std::to_string(set.size()) + " but kn = " + std::to_string(k * n));
  }
  PartitionSearch result;
  if (n > budget.max_parts || static_cast<int>(set.size()) > budget.max_points) {
    result.status = SearchStatus::kBudgetExceeded;
    return result;
  }
  std::vector<IdList> islands;
  try {
    islands = enumerate_islands(set, k, j, budget);
  } catch (const BudgetExceeded&) {
    result.status = SearchStatus::kBudgetExceeded;
    return result;
  }

  Backtracker forward(set, islands, n, budget.node_limit, false);
  result.status = forward.run();
  result.nodes = forward.nodes();
  if (result.status == SearchStatus::kFound) {
    result.partition = forward.partition();
    return result;
  }
  if (result.status == SearchStatus::kNone && set.size() <= 12) {
    Backtracker backward(set, std::move(islands), n, budget.node_limit, true);
    const SearchStatus second = backward.run();
    result.nodes += backward.nodes();
    if (second == SearchStatus::kFound) {
      throw InvariantError("island search disagrees with itself under reversed ordering");
    }
    result.confirmed_by_second_pass = second == SearchStatus::kNone;
  }
  return result;
}

bool brute_force_check(const ColoredPointSet& set, const IslandPartition& partition, int k, int j) {
  std::vector<int> owner(set.size(), -1);
  for (std::size_t i = 0; i < partition.parts.size(); ++i) {
    const IdList& part = partition.parts[i];
    if (part.size() != static_cast<std::size_t>(k)) return false;
    for (PointId p : part) {
      if (p >= set.size() || owner[p] != -1) return false;
      owner[p] = static_cast<int>(i);
    }
    if (set.colors_present(part) < j) return false;
  }
  if (std::find(owner.begin(), owner.end(), -1) != owner.end()) return false;
  for (std::size_t i = 0; i < partition.parts.size(); ++i) {
    const std::vector<Coords> hull = coords_of(set, partition.parts[i]);
    for (PointId p = 0; p < set.size(); ++p) {
      if (owner[p] != static_cast<int>(i) && in_convex_hull_lp(set.point(p), hull)) return false;
    }
    for (std::size_t t = i + 1; t < partition.parts.size(); ++t) {
      if (hulls_intersect_lp(hull, coords_of(set, partition.parts[t]))) return false;
    }
  }
  return true;
}

ConjectureReport conjecture_scan(const ColoredPointSet& set, int k, int m, int d, int n, const SearchBudget& budget) {
  if (m != set.num_colors()) {
    throw PreconditionError("m = " + std::to_string(m) + " but the set has " + std::to_string(set.num_colors()) +
                            " colors");
  }
  ConjectureReport report;
  hall::ColorProfile profile{set.class_sizes(), k, n, d};
  report.hall_feasible = hall::check_hall(profile).feasible;
  const PartitionSearch search = brute_force_partition(set, k, d, n, budget);
  report.search = search.status;
  report.island_partition_found = search.status == SearchStatus::kFound;
  report.partition = search.partition;
  report.counterexample_candidate = report.hall_feasible && search.status == SearchStatus::kNone;
  if (report.counterexample_candidate) {
    std::ostringstream out;
    out << "dim " << set.dim() << " colors " << m << " k " << k << " n " << n << "\n";
    for (PointId p = 0; p < set.size(); ++p) {
      out << p << " " << set.color(p);
      for (const auto& x : set.point(p)) out << " " << to_string(x);
      out << "\n";
    }
    report.dump = out.str();
  }
  return report;
}

}  // namespace islands::oracle
