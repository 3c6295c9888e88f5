#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "islands/instance_io.hpp"

// Deterministic instance families. Same parameters, same instance.
namespace islands::gen {

struct GenParams {
  std::string family = "random_general_position";
  std::uint64_t seed = 0;
  int k = 0;
  int n = 0;
  int dim = 2;
  int colors = 0;                  // 0: 2 in the plane, d otherwise
  std::vector<std::size_t> sizes;  // explicit class sizes, overrides the random split
  std::int64_t coord_range = 10000;
};

// Families: random_general_position, rings, tightness, convex_position.
// Throws PreconditionError for bad parameters or when general position is
// not reached within the retry budget.
io::Instance generate(const GenParams& params);

const std::vector<std::string>& family_names();

// Uniform random class sizes summing to total with every class >= floor.
std::vector<std::size_t> random_sizes(std::uint64_t seed, std::size_t total, int colors, std::size_t floor);

}  // namespace islands::gen
