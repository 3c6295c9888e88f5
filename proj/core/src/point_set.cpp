#include "islands/point_set.hpp"

#include <numeric>
#include <string>

#include "islands/errors.hpp"

namespace islands {

ColoredPointSet::ColoredPointSet(int dim, std::vector<Coords> points, std::vector<int> colors,
                                 int num_colors)
    : dim_(dim), points_(std::move(points)), colors_(std::move(colors)), num_colors_(num_colors) {
  if (dim_ < 2) throw PreconditionError("dimension must be at least 2, got " + std::to_string(dim_));
  if (num_colors_ < 1) throw PreconditionError("number of colors must be positive");
  if (points_.size() != colors_.size()) {
    throw PreconditionError("point count " + std::to_string(points_.size()) +
                            " does not match color count " + std::to_string(colors_.size()));
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].size() != static_cast<std::size_t>(dim_)) {
      throw PreconditionError("point " + std::to_string(i) + " has " +
                              std::to_string(points_[i].size()) + " coordinates, expected " +
                              std::to_string(dim_));
    }
    if (colors_[i] < 0 || colors_[i] >= num_colors_) {
      throw PreconditionError("point " + std::to_string(i) + " has color " +
                              std::to_string(colors_[i]) + " outside [0, " +
                              std::to_string(num_colors_) + ")");
    }
  }
}

std::vector<std::size_t> ColoredPointSet::class_sizes() const {
  std::vector<std::size_t> sizes(num_colors_, 0);
  for (int c : colors_) ++sizes[c];
  return sizes;
}

std::vector<std::size_t> ColoredPointSet::class_sizes(std::span<const PointId> ids) const {
  std::vector<std::size_t> sizes(num_colors_, 0);
  for (PointId id : ids) ++sizes[colors_.at(id)];
  return sizes;
}

int ColoredPointSet::colors_present(std::span<const PointId> ids) const {
  int present = 0;
  for (std::size_t s : class_sizes(ids)) present += s > 0 ? 1 : 0;
  return present;
}

IdList ColoredPointSet::all_ids() const {
  IdList ids(points_.size());
  std::iota(ids.begin(), ids.end(), PointId{0});
  return ids;
}

ColoredPointSet ColoredPointSet::subset(std::span<const PointId> ids) const {
  std::vector<Coords> pts;
  std::vector<int> cols;
  pts.reserve(ids.size());
  cols.reserve(ids.size());
  for (PointId id : ids) {
    pts.push_back(points_.at(id));
    cols.push_back(colors_.at(id));
  }
  return ColoredPointSet(dim_, std::move(pts), std::move(cols), num_colors_);
}

}  // namespace islands
