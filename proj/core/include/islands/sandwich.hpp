#pragma once

#include <optional>
#include <span>
#include <vector>

#include "islands/cut.hpp"
#include "islands/point_set.hpp"
#include "islands/verify.hpp"

// n pairwise disjoint d-colorful (d+1)-islands in R^d for d color classes
// that are balanced (every class holds at least a 1/(d+1) fraction).
//
// The cut contract below is stated for exactly m = d classes. With one more
// class (k = m = 4 in R^3, say) a bisecting plane may pass through one
// point of every class and still leave no local modification that balances
// both sides; the finite search here would simply come up empty, so
// BalancedInstance rejects m != d outright.
namespace islands::sandwich {

// Upper bound on d for the O(|X|^d 2^d) canonical-cut search.
inline constexpr int kMaxDim = 4;

class BalancedInstance {
 public:
  // Validates d in [2, kMaxDim], m = d classes, |X| = (d+1)n, every class
  // >= n, general position.
  BalancedInstance(const ColoredPointSet& set, int n);

  const ColoredPointSet& set() const noexcept { return *set_; }
  int n() const noexcept { return n_; }
  int dim() const noexcept { return set_->dim(); }

 private:
  const ColoredPointSet* set_;
  int n_;
};

// Every color's count within `ids` is at least |ids|/(d+1), where d+1 is
// taken as (number of colors of the set) + 1.
bool is_balanced(const ColoredPointSet& set, std::span<const PointId> ids);
bool is_balanced(std::span<const PointId> ids, const BalancedInstance& instance);

struct SpecialCut {
  OrientedCut cut;
  std::size_t above_total = 0;
  std::size_t below_total = 0;
  std::vector<std::size_t> above_per_color;
  std::vector<std::size_t> below_per_color;
  IdList above;
  IdList below;
};

// Computes the realized sides of `cut` over `ids`.
SpecialCut evaluate_cut(const OrientedCut& cut, const ColoredPointSet& set, std::span<const PointId> ids);

// Both totals are positive multiples of d+1 and both sides balanced.
bool is_special(const SpecialCut& cut, int dim);

// First special canonical cut of the points `ids`: spanning d-subsets in
// lexicographic id order, the normal oriented so the lowest-id point off the
// plane is above, then side assignments in binary order (bit i set sends the
// i-th spanning point below). Needs |ids| = (d+1)n' with n' >= 2 and
// balanced colors.
SpecialCut special_cut(const ColoredPointSet& set, std::span<const PointId> ids);
SpecialCut special_cut(const BalancedInstance& instance);

// A discrete bisecting hyperplane: spanned by one point p_i of every class,
// with both open sides holding floor(|X_i|/2) points of X_i once p_i of an
// even class is counted on its assigned side. Odd-class p_i lie on the plane.
// Returns nullopt when no colorful spanning set bisects this way.
std::optional<OrientedCut> find_bisecting_cut(const ColoredPointSet& set, std::span<const PointId> ids);

// Rounds a bisecting cut to a special one by moving on-plane and touching
// points, following the even/odd split on n. Throws PreconditionError when
// h_prime does not bisect, InvariantError if the rounded cut is not special.
SpecialCut round_cut_reference(const OrientedCut& h_prime, const ColoredPointSet& set,
                               std::span<const PointId> ids);

struct RdResult {
  IslandPartition partition;
  std::vector<SpecialCut> cuts;  // every special_cut issued, in recursion order
};

RdResult partition_rd(const BalancedInstance& instance);

}  // namespace islands::sandwich
