#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "islands/cut.hpp"
#include "islands/halfplanes.hpp"
#include "islands/point_set.hpp"
#include "islands/verify.hpp"

// Partition of a 2-colored planar set of kn points (at least n of each color)
// into n pairwise disjoint 2-colorful k-islands whose color counts differ by
// at most one between islands.
namespace islands::planar {

// Color counts per part: |A| = n*a + s, |B| = n*b + t.
struct SplitParams {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t s = 0;
  std::size_t t = 0;
  bool divisible() const noexcept { return s == 0; }
};

SplitParams split_params(std::size_t size_a, std::size_t size_b, std::size_t n);

class PlanarInstance {
 public:
  // Validates: d = 2, two color classes, |X| = kn, every class >= n, k >= 2,
  // n >= 1, general position. Throws PreconditionError naming the clause.
  PlanarInstance(const ColoredPointSet& set, int k, int n);

  const ColoredPointSet& set() const noexcept { return *set_; }
  int k() const noexcept { return k_; }
  int n() const noexcept { return n_; }
  std::size_t size_of(int color) const { return sizes_.at(color); }
  SplitParams params(int color_a = 0) const;

 private:
  const ColoredPointSet* set_;
  int k_;
  int n_;
  std::vector<std::size_t> sizes_;
};

enum class SigmaSign { kMinus = -1, kEquitable = 0, kPlus = 1 };

struct SigmaEntry {
  std::size_t index = 0;     // i (for sigma_a) or j (for sigma_a1), 1-based
  SigmaSign sign = SigmaSign::kMinus;
  std::size_t a_count = 0;   // prescribed number of A points in the halfplane
  std::size_t b_target = 0;  // i(b+1) or jb
  std::size_t b_min = 0;     // B counts over all halfplanes with a_count A points
  std::size_t b_max = 0;
  OrientedCut witness;       // equitable halfplane, or any halfplane at this level
  IdList inside;             // points of the witness halfplane
};

struct SigmaTable {
  int color_a = 0;
  SplitParams params;
  std::vector<SigmaEntry> sigma_a;   // i = 1..t
  std::vector<SigmaEntry> sigma_a1;  // j = 1..s
};

// Requires the non-divisible case (s, t >= 1).
SigmaTable sigma_scan(const HalfplaneFamily& family, int color_a, std::size_t n);
SigmaTable sigma_scan(const PlanarInstance& instance, int color_a = 0);

// Every open halfplane with exactly a[i] points of A has fewer than b[i]
// points of B, for i = 0, 1, 2.
bool three_cut_hypothesis_holds(const HalfplaneFamily& family, int color_a, const std::array<std::size_t, 3>& a,
                                const std::array<std::size_t, 3>& b);

struct ThreeCutResult {
  std::array<IdList, 3> parts;
  // separators[0] keeps part 0 away from part 2, separators[1] keeps part 0
  // away from part 1, separators[2] splits part 1 from part 2. Each halfplane
  // is oriented so its realized "above" side holds the first part named.
  std::array<OrientedCut, 3> separators;
};

// Splits the family's points into three sets with pairwise disjoint hulls and
// |part_i ∩ A| = a[i], |part_i ∩ B| = b[i]. The search runs over triples of
// halfplanes (H1 ∩ H2 is part 0; H3 splits the rest) and is complete for
// pairwise separable 3-partitions. Throws PreconditionError when counts or the
// halfplane hypothesis fail, InvariantError when the search is exhausted.
ThreeCutResult three_cutting(const HalfplaneFamily& family, int color_a, const std::array<std::size_t, 3>& a,
                             const std::array<std::size_t, 3>& b);
ThreeCutResult three_cutting(const ColoredPointSet& set, std::span<const PointId> ids, int color_a,
                             const std::array<std::size_t, 3>& a, const std::array<std::size_t, 3>& b);

// The search behind three_cutting without the halfplane hypothesis: nullopt
// when no pairwise separable 3-partition with these counts exists.
std::optional<ThreeCutResult> find_three_partition(const HalfplaneFamily& family, int color_a,
                                                   const std::array<std::size_t, 3>& a,
                                                   const std::array<std::size_t, 3>& b);

// One recursion step, for reporting.
struct PartitionStep {
  enum class Kind { kWhole, kLineSplit, kThreeCut };
  Kind kind = Kind::kWhole;
  std::size_t depth = 0;
  std::size_t points = 0;
  std::size_t parts = 0;
  std::vector<OrientedCut> cuts;
  std::string detail;
};

const char* step_kind_name(PartitionStep::Kind kind);

struct PlanarResult {
  IslandPartition partition;
  std::vector<PartitionStep> steps;
};

// n parts with exactly a points of color 0 and b of color 1 each.
// Requires |color 0| = an, |color 1| = bn, general position.
PlanarResult equipartition_divisible(const ColoredPointSet& set, std::size_t a, std::size_t b, std::size_t n);

PlanarResult partition_plane(const PlanarInstance& instance);

}  // namespace islands::planar
