#pragma once

#include <string>

#include "islands/point_set.hpp"
#include "islands/verify.hpp"

namespace islands::render {

struct SvgOptions {
  int panel_size = 480;
  int margin = 24;
};

// Points colored by class and every part of `partition` as a shaded convex
// polygon. Planar sets give one panel; sets in R^3 give the xy, xz and yz
// projections side by side. Output is byte-for-byte deterministic.
// Throws PreconditionError for dim > 3 or dim < 2.
std::string render_svg(const ColoredPointSet& set, const IslandPartition& partition, const SvgOptions& options = {});

}  // namespace islands::render
