#pragma once

#include <cstdint>
#include <vector>

#include "islands/generate.hpp"
#include "islands/point_set.hpp"

namespace islands::testing {

ColoredPointSet make_set(int dim, const std::vector<std::vector<long>>& coords, const std::vector<int>& colors,
                         int num_colors);

// Random general-position instance through the generator.
ColoredPointSet random_instance(std::uint64_t seed, int k, int n, int dim = 2, int colors = 0,
                                std::vector<std::size_t> sizes = {});

// `inner` points of color 0 in a tiny cluster and `outer` points of color 1
// evenly spaced on a large circle. With outer >= 4 * inner no line through
// the cluster is equitable, which forces the 3-cut branch.
ColoredPointSet cluster_instance(int inner, int outer);

// Seeded variant: the cluster jittered in [-8, 8]^2, the circle points at
// jittered angles. Retries until general position.
ColoredPointSet jittered_cluster_instance(std::uint64_t seed, int inner, int outer);

// 8 red points (color 0) on inner rings and 11 blue points (color 1) on an
// outer ring, mirroring the 3-cutting illustration.
ColoredPointSet three_fan_instance();

}  // namespace islands::testing
