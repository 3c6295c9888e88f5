#pragma once

#include <string>
#include <vector>

#include "islands/point_set.hpp"

namespace islands {

// An ordered list of point-id sets claimed to be pairwise disjoint islands.
struct IslandPartition {
  std::vector<IdList> parts;
};

enum class Clause {
  kWellFormed,   // ids in range, no id repeated
  kCoversSet,    // union of parts is the whole set
  kPartSize,     // every part has k points
  kColorful,     // every part meets at least j colors
  kHullsDisjoint,
  kIslands,
};

const char* clause_name(Clause clause);

struct ClauseResult {
  Clause clause;
  bool passed = true;
  bool checked = false;
  std::string detail;
  // Part indices and point ids witnessing a failure.
  std::vector<std::size_t> witness_parts;
  IdList witness_points;
};

struct VerificationReport {
  bool passed = false;
  std::vector<ClauseResult> clauses;

  // First failed clause, if any.
  const ClauseResult* first_failure() const;
  std::string summary() const;
};

// Never throws on malformed partitions; they produce a failed report.
// Clauses after the first failure are still evaluated when meaningful so the
// report lists every clause.
VerificationReport verify_island_partition(const IslandPartition& partition, const ColoredPointSet& set,
                                           std::size_t k, int j);

}  // namespace islands
