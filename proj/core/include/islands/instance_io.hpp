#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "islands/cut.hpp"
#include "islands/point_set.hpp"
#include "islands/verify.hpp"

// JSON files for instances and solutions. Coordinates are always exact
// rational strings ("p/q" or "p"); a bare JSON number is rejected.
namespace islands::io {

struct InstanceMeta {
  int k = 0;
  int n = 0;
  std::uint64_t seed = 0;
  std::string family;
};

struct Instance {
  ColoredPointSet set;
  InstanceMeta meta;
};

Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& instance);

struct Solution {
  std::string mode;
  IslandPartition partition;
  std::vector<OrientedCut> cuts;
  bool verified = false;
  std::string report;                       // verification summary
  std::vector<std::string> steps;           // human-readable recursion log
  std::vector<std::vector<int>> compositions;  // hall mode: colors per tuple
  std::optional<std::string> status;        // oracle mode: found / none / budget_exceeded
  double elapsed_ms = 0.0;
};

// Reads "parts" (required) and "verified" / "mode" when present.
Solution parse_solution(const std::string& text);
std::string serialize_solution(const Solution& solution);

std::string cut_to_json(const OrientedCut& cut);

// Whole-file helpers; throw PreconditionError on I/O failure.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& text);

}  // namespace islands::io
