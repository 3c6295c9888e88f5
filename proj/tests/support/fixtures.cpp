#include "fixtures.hpp"

#include <cmath>
#include <random>

#include "islands/predicates.hpp"

namespace islands::testing {

ColoredPointSet make_set(int dim, const std::vector<std::vector<long>>& coords, const std::vector<int>& colors,
                         int num_colors) {
  std::vector<Coords> pts;
  for (const auto& c : coords) {
    Coords x;
    for (long v : c) x.emplace_back(v);
    pts.push_back(std::move(x));
  }
  return ColoredPointSet(dim, std::move(pts), colors, num_colors);
}

ColoredPointSet random_instance(std::uint64_t seed, int k, int n, int dim, int colors, std::vector<std::size_t> sizes) {
  gen::GenParams p;
  p.seed = seed;
  p.k = k;
  p.n = n;
  p.dim = dim;
  p.colors = colors;
  p.sizes = std::move(sizes);
  return gen::generate(p).set;
}

namespace {

std::vector<long> polar(double radius, double degrees) {
  const double t = degrees * M_PI / 180.0;
  return {std::lround(radius * std::cos(t)), std::lround(radius * std::sin(t))};
}

}  // namespace

ColoredPointSet cluster_instance(int inner, int outer) {
  static const long kCluster[][2] = {{2, -1}, {5, 2}, {1, 4}, {-3, 1}, {-2, -4}, {4, -3}, {0, 6}, {-5, -1}};
  std::vector<std::vector<long>> coords;
  std::vector<int> colors;
  for (int i = 0; i < inner; ++i) {
    coords.push_back({kCluster[i][0], kCluster[i][1]});
    colors.push_back(0);
  }
  for (int i = 0; i < outer; ++i) {
    auto p = polar(10000.0, 360.0 * i / outer + 5.7);
    p[1] += i;
    coords.push_back(p);
    colors.push_back(1);
  }
  return make_set(2, coords, colors, 2);
}

ColoredPointSet jittered_cluster_instance(std::uint64_t seed, int inner, int outer) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> small(-8, 8);
  std::uniform_real_distribution<double> shift(0.0, 0.4);
  while (true) {
    std::vector<std::vector<long>> coords;
    std::vector<int> colors;
    for (int i = 0; i < inner; ++i) {
      coords.push_back({small(rng), small(rng)});
      colors.push_back(0);
    }
    for (int i = 0; i < outer; ++i) {
      coords.push_back(polar(10000.0, 360.0 * (i + shift(rng)) / outer));
      colors.push_back(1);
    }
    ColoredPointSet set = make_set(2, coords, colors, 2);
    if (is_general_position(set)) return set;
  }
}

ColoredPointSet three_fan_instance() {
  std::vector<std::vector<long>> coords;
  std::vector<int> colors;
  const double s = 1000.0;
  const std::pair<double, double> red[] = {{7, 1.42}, {11, 1.42}, {16, 1.61}, {21, 1.42},
                                           {9, 0.25}, {14, 0.25}, {20, 0.25}, {3, 0.25}};
  for (const auto& [step, r] : red) {
    coords.push_back(polar(r * s, 360.0 * step / 22));
    colors.push_back(0);
  }
  for (int i = 1; i <= 11; ++i) {
    coords.push_back(polar(2.75 * s, 360.0 * i / 11));
    colors.push_back(1);
  }
  return make_set(2, coords, colors, 2);
}

}  // namespace islands::testing
