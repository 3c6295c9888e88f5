#include "islands/verify.hpp"

#include <sstream>

#include "islands/hull.hpp"

namespace islands {

const char* clause_name(Clause clause) {
  switch (clause) {
    case Clause::kWellFormed: return "well-formed";
    case Clause::kCoversSet: return "partition covers set";
    case Clause::kPartSize: return "part size";
    case Clause::kColorful: return "colorful";
    case Clause::kHullsDisjoint: return "hulls disjoint";
    case Clause::kIslands: return "islands";
  }
  return "?";
}

const ClauseResult* VerificationReport::first_failure() const {
  for (const auto& c : clauses) {
    if (c.checked && !c.passed) return &c;
  }
  return nullptr;
}

std::string VerificationReport::summary() const {
  std::ostringstream out;
  for (const auto& c : clauses) {
    out << (c.checked ? (c.passed ? "PASS" : "FAIL") : "SKIP") << "  " << clause_name(c.clause);
    if (!c.detail.empty()) out << ": " << c.detail;
    out << '\n';
  }
  return out.str();
}

namespace {

std::string join(const IdList& ids) {
  std::string s;
  for (PointId id : ids) s += (s.empty() ? "" : ",") + std::to_string(id);
  return s;
}

}  // namespace

VerificationReport verify_island_partition(const IslandPartition& partition, const ColoredPointSet& set,
                                           std::size_t k, int j) {
  VerificationReport report;
  report.clauses.reserve(6);
  auto add = [&](Clause c) -> ClauseResult& {
    ClauseResult r;
    r.clause = c;
    return report.clauses.emplace_back(std::move(r));
  };
  add(Clause::kWellFormed);

  const auto& parts = partition.parts;
  std::vector<long> owner(set.size(), -1);
  {
    ClauseResult& c = report.clauses[0];
    c.checked = true;
    for (std::size_t p = 0; p < parts.size() && c.passed; ++p) {
      for (PointId id : parts[p]) {
        if (id >= set.size()) {
          c.passed = false;
          c.detail = "part " + std::to_string(p) + " names unknown point " + std::to_string(id);
          c.witness_parts = {p};
          c.witness_points = {id};
          break;
        }
        if (owner[id] != -1) {
          c.passed = false;
          c.detail = "point " + std::to_string(id) + " appears in parts " + std::to_string(owner[id]) +
                     " and " + std::to_string(p);
          c.witness_parts = {static_cast<std::size_t>(owner[id]), p};
          c.witness_points = {id};
          break;
        }
        owner[id] = static_cast<long>(p);
      }
    }
  }
  const bool well_formed = report.clauses[0].passed;

  {
    ClauseResult& c = add(Clause::kCoversSet);
    if (well_formed) {
      c.checked = true;
      for (PointId id = 0; id < set.size(); ++id) {
        if (owner[id] == -1) c.witness_points.push_back(id);
      }
      if (!c.witness_points.empty()) {
        c.passed = false;
        c.detail = "points not covered: " + join(c.witness_points);
      }
    }
  }
  {
    ClauseResult& c = add(Clause::kPartSize);
    if (well_formed) {
      c.checked = true;
      for (std::size_t p = 0; p < parts.size(); ++p) {
        if (parts[p].size() != k) {
          c.passed = false;
          c.detail = "part " + std::to_string(p) + " has " + std::to_string(parts[p].size()) +
                     " points, expected k = " + std::to_string(k);
          c.witness_parts = {p};
          break;
        }
      }
    }
  }
  {
    ClauseResult& c = add(Clause::kColorful);
    if (well_formed) {
      c.checked = true;
      for (std::size_t p = 0; p < parts.size(); ++p) {
        const int present = set.colors_present(parts[p]);
        if (present < j) {
          c.passed = false;
          c.detail = "part " + std::to_string(p) + " meets " + std::to_string(present) +
                     " colors, expected at least " + std::to_string(j);
          c.witness_parts = {p};
          break;
        }
      }
    }
  }
  {
    ClauseResult& c = add(Clause::kHullsDisjoint);
    if (well_formed) {
      c.checked = true;
      for (std::size_t p = 0; p < parts.size() && c.passed; ++p) {
        for (std::size_t q = p + 1; q < parts.size(); ++q) {
          if (parts[p].empty() || parts[q].empty()) continue;
          if (!hulls_disjoint(set, parts[p], parts[q])) {
            c.passed = false;
            c.detail = "hulls intersect: parts " + std::to_string(p) + " and " + std::to_string(q);
            c.witness_parts = {p, q};
            break;
          }
        }
      }
    }
  }
  {
    ClauseResult& c = add(Clause::kIslands);
    if (well_formed) {
      c.checked = true;
      for (std::size_t p = 0; p < parts.size() && c.passed; ++p) {
        if (parts[p].empty()) continue;
        const ConvexHull hull(set, parts[p]);
        for (PointId id = 0; id < set.size(); ++id) {
          if (owner[id] == static_cast<long>(p)) continue;
          if (hull.contains(set.point(id))) {
            c.passed = false;
            c.detail = "not an island: part " + std::to_string(p) + " contains point " + std::to_string(id);
            c.witness_parts = {p};
            c.witness_points = {id};
            break;
          }
        }
      }
    }
  }

  report.passed = true;
  for (const auto& c : report.clauses) report.passed = report.passed && c.checked && c.passed;
  return report;
}

}  // namespace islands
