#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "islands/rational.hpp"

namespace islands {

using PointId = std::size_t;
using IdList = std::vector<PointId>;

// A finite m-colored point set in R^d. Point ids are indices into the set.
// Construction checks shape only (dimension, coordinate lengths, color
// range); general position is a separate check because several callers
// need to inspect degenerate sets.
class ColoredPointSet {
 public:
  ColoredPointSet(int dim, std::vector<Coords> points, std::vector<int> colors, int num_colors);

  int dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return points_.size(); }
  int num_colors() const noexcept { return num_colors_; }

  const Coords& point(PointId id) const { return points_.at(id); }
  int color(PointId id) const { return colors_.at(id); }
  const std::vector<Coords>& points() const noexcept { return points_; }
  const std::vector<int>& colors() const noexcept { return colors_; }

  // |X_i| for every color index i (empty classes included).
  std::vector<std::size_t> class_sizes() const;
  std::vector<std::size_t> class_sizes(std::span<const PointId> ids) const;
  // Number of distinct colors among `ids`.
  int colors_present(std::span<const PointId> ids) const;

  IdList all_ids() const;

  // Subset restricted to `ids`, renumbered 0..|ids|-1 in the given order.
  ColoredPointSet subset(std::span<const PointId> ids) const;

 private:
  int dim_;
  std::vector<Coords> points_;
  std::vector<int> colors_;
  int num_colors_;
};

}  // namespace islands
