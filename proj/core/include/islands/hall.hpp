#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "islands/errors.hpp"

// Combinatorial layer: when can an m-colored set of kn abstract elements be
// split into n disjoint d-colorful k-tuples, and how. Nothing here touches
// coordinates.
namespace islands::hall {

struct ColorProfile {
  std::vector<std::size_t> sizes;  // |X_1|, ..., |X_m|
  int k = 0;
  int n = 0;
  int d = 0;
};

// Abstract element: class c holds ids offset(c) .. offset(c) + |X_c| - 1,
// classes laid out in index order.
struct Element {
  int color = 0;
  std::size_t id = 0;
  friend bool operator==(const Element&, const Element&) = default;
};
using Tuple = std::vector<Element>;

struct HallReport {
  bool feasible = false;
  // slack[t-1] = (k-d+t)n - (sum of the t largest sizes), t = 1..d-1.
  std::vector<long long> slack;
  std::vector<Tuple> tuples;  // filled by solve_hall when feasible
};

// Infeasible profile passed to a constructive routine. Names the first
// violated prefix length t and the classes I achieving it.
class HallViolation : public PreconditionError {
 public:
  HallViolation(const std::string& what, int t, std::vector<int> classes)
      : PreconditionError(what), t_(t), classes_(std::move(classes)) {}
  int t() const noexcept { return t_; }
  const std::vector<int>& classes() const noexcept { return classes_; }

 private:
  int t_;
  std::vector<int> classes_;
};

// Class indices sorted by (size desc, index asc).
std::vector<int> sorted_class_order(const std::vector<std::size_t>& sizes);

// Feasibility and slacks only. Throws PreconditionError when k < d, m < d,
// d < 2 or sum(sizes) != kn.
HallReport check_hall(const ColorProfile& profile);

// The grid construction: truncate large classes to n, lay dn elements into
// an n x d grid column by column, read rows as d-tuples, then hand out the
// remaining elements round-robin. Throws HallViolation when infeasible.
std::vector<Tuple> colorful_tuple_partition(const ColorProfile& profile);

// check_hall plus the tuples when feasible.
HallReport solve_hall(const ColorProfile& profile);

struct MergeResult {
  std::pair<int, int> merged;  // original class indices; the lower one survives
  ColorProfile profile;        // m-1 classes, merged class at merged.first
};

// Merges the two smallest classes. Guaranteed to preserve the condition when
// k >= d+1 and m >= 2d-1, or k = d and m >= 2d; otherwise throws
// PreconditionError("merge not guaranteed ...").
MergeResult merge_colors(const ColorProfile& profile);

enum class TightnessVariant { kKEqualsD, kKGreaterD };

// Profiles on which no pair of classes can be merged:
//   kKEqualsD:  m = 2d-1, k = d, every class dn/(2d-1)         (n % (2d-1) == 0)
//   kKGreaterD: m = 2d-2, sizes (k-d+1)n then (d-1)n/(2d-3)    (n % (2d-3) == 0)
// `k` is only read for kKGreaterD and must be >= d+1 there.
ColorProfile tightness_family(int d, TightnessVariant variant, int n, int k = 0);

}  // namespace islands::hall
