#include "islands/sandwich.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "islands/errors.hpp"
#include "islands/predicates.hpp"

namespace islands::sandwich {

BalancedInstance::BalancedInstance(const ColoredPointSet& set, int n) : set_(&set), n_(n) {
  const int d = set.dim();
  if (d < 2) throw PreconditionError("dimension must be at least 2, got " + std::to_string(d));
  if (d > kMaxDim) {
    throw CapacityError("dimension " + std::to_string(d) + " exceeds the supported maximum " +
                        std::to_string(kMaxDim));
  }
  if (set.num_colors() != d) {
    throw PreconditionError("need exactly d = " + std::to_string(d) + " color classes, got " +
                            std::to_string(set.num_colors()));
  }
  if (n < 1) throw PreconditionError("n must be at least 1, got " + std::to_string(n));
  const std::size_t expected = static_cast<std::size_t>(d + 1) * static_cast<std::size_t>(n);
  if (set.size() != expected) {
    throw PreconditionError("|X| = " + std::to_string(set.size()) + " but (d+1)n = " + std::to_string(expected));
  }
  const auto sizes = set.class_sizes();
  for (int c = 0; c < d; ++c) {
    if (sizes[c] < static_cast<std::size_t>(n)) {
      throw PreconditionError("color class " + std::to_string(c) + " has " + std::to_string(sizes[c]) +
                              " < n=" + std::to_string(n) + " points");
    }
  }
  require_general_position(set);
}

bool is_balanced(const ColoredPointSet& set, std::span<const PointId> ids) {
  const std::size_t parts = static_cast<std::size_t>(set.num_colors()) + 1;
  const auto sizes = set.class_sizes(ids);
  return std::all_of(sizes.begin(), sizes.end(), [&](std::size_t s) { return s * parts >= ids.size(); });
}

bool is_balanced(std::span<const PointId> ids, const BalancedInstance& instance) {
  return is_balanced(instance.set(), ids);
}

SpecialCut evaluate_cut(const OrientedCut& cut, const ColoredPointSet& set, std::span<const PointId> ids) {
  SpecialCut out;
  out.cut = cut;
  out.above_per_color.assign(set.num_colors(), 0);
  out.below_per_color.assign(set.num_colors(), 0);
  for (PointId id : ids) {
    if (cut.realized_side(set, id) == Side::kAbove) {
      out.above.push_back(id);
      ++out.above_per_color[set.color(id)];
    } else {
      out.below.push_back(id);
      ++out.below_per_color[set.color(id)];
    }
  }
  out.above_total = out.above.size();
  out.below_total = out.below.size();
  return out;
}

namespace {

bool side_ok(std::size_t total, const std::vector<std::size_t>& per_color, std::size_t parts) {
  if (total == 0 || total % parts != 0) return false;
  return std::all_of(per_color.begin(), per_color.end(), [&](std::size_t c) { return c * parts >= total; });
}

std::string dump(const ColoredPointSet& set, std::span<const PointId> ids) {
  std::ostringstream out;
  for (PointId id : ids) {
    out << "\n  " << id << " color " << set.color(id) << " (";
    const Coords& x = set.point(id);
    for (std::size_t k = 0; k < x.size(); ++k) out << (k ? ", " : "") << to_string(x[k]);
    out << ")";
  }
  return out.str();
}

void check_region(const ColoredPointSet& set, std::span<const PointId> ids) {
  const int d = set.dim();
  if (d < 2 || d > kMaxDim) throw CapacityError("special cuts need 2 <= d <= " + std::to_string(kMaxDim));
  if (set.num_colors() != d) throw PreconditionError("special cuts need exactly d color classes");
  const std::size_t parts = static_cast<std::size_t>(d) + 1;
  if (ids.size() % parts != 0 || ids.size() / parts < 2) {
    throw PreconditionError("special cut needs (d+1)n points with n >= 2, got " + std::to_string(ids.size()));
  }
  if (!is_balanced(set, ids)) throw PreconditionError("special cut needs balanced color classes");
}

// Calls f(subset) for every size-r subset of `ids` in lexicographic order;
// stops early when f returns true.
template <typename F>
bool for_each_subset(std::span<const PointId> ids, std::size_t r, F&& f) {
  if (r > ids.size()) return false;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  IdList subset(r);
  while (true) {
    for (std::size_t i = 0; i < r; ++i) subset[i] = ids[idx[i]];
    if (f(subset)) return true;
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == ids.size() - r + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Canonical cut through `subset`, oriented so the lowest-id other point of
// `ids` is strictly above.
OrientedCut canonical_cut(const ColoredPointSet& set, std::span<const PointId> ids, const IdList& subset) {
  OrientedCut cut = OrientedCut::through(set, subset);
  for (PointId id : ids) {
    if (std::binary_search(subset.begin(), subset.end(), id)) continue;
    if (cut.side_of(set.point(id)) < 0) cut = OrientedCut::through(set, subset, true);
    break;
  }
  return cut;
}

}  // namespace

bool is_special(const SpecialCut& cut, int dim) {
  const std::size_t parts = static_cast<std::size_t>(dim) + 1;
  return side_ok(cut.above_total, cut.above_per_color, parts) && side_ok(cut.below_total, cut.below_per_color, parts);
}

SpecialCut special_cut(const ColoredPointSet& set, std::span<const PointId> ids_in) {
  IdList ids(ids_in.begin(), ids_in.end());
  std::sort(ids.begin(), ids.end());
  check_region(set, ids);
  const int d = set.dim();
  const std::size_t parts = static_cast<std::size_t>(d) + 1;
  const int m = set.num_colors();

  std::optional<SpecialCut> found;
  for_each_subset(ids, static_cast<std::size_t>(d), [&](const IdList& subset) {
    OrientedCut cut = canonical_cut(set, ids, subset);
    // Strict counts of the points off the plane.
    std::vector<std::size_t> above(m, 0);
    std::vector<std::size_t> below(m, 0);
    for (PointId id : ids) {
      if (std::binary_search(subset.begin(), subset.end(), id)) continue;
      const int s = cut.side_of(set.point(id));
      if (s == 0) throw DegenerateInputError("point on a canonical cut besides its spanning points", subset);
      ++(s > 0 ? above : below)[set.color(id)];
    }
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
      std::vector<std::size_t> up = above;
      std::vector<std::size_t> down = below;
      for (int i = 0; i < d; ++i) ++((mask >> i) & 1u ? down : up)[set.color(subset[i])];
      std::size_t up_total = 0;
      for (auto c : up) up_total += c;
      const std::size_t down_total = ids.size() - up_total;
      if (!side_ok(up_total, up, parts) || !side_ok(down_total, down, parts)) continue;
      for (int i = 0; i < d; ++i) cut.side_assignment[subset[i]] = (mask >> i) & 1u ? Side::kBelow : Side::kAbove;
      found = evaluate_cut(cut, set, ids);
      return true;
    }
    return false;
  });
  if (!found) {
    throw InvariantError("no special cut among the canonical cuts of " + std::to_string(ids.size()) + " points:" +
                         dump(set, ids));
  }
  if (!is_special(*found, d)) throw InvariantError("special cut failed its own postcondition");
  return std::move(*found);
}

SpecialCut special_cut(const BalancedInstance& instance) {
  if (instance.n() < 2) throw PreconditionError("special_cut needs n >= 2");
  const IdList ids = instance.set().all_ids();
  return special_cut(instance.set(), ids);
}

namespace {

// Open-side counts per color of a cut spanned by one point of each color,
// excluding the spanning points.
struct BisectionShape {
  std::vector<std::size_t> above;
  std::vector<std::size_t> below;
  std::vector<std::size_t> sizes;
};

BisectionShape bisection_shape(const OrientedCut& cut, const ColoredPointSet& set, std::span<const PointId> ids) {
  const int m = set.num_colors();
  BisectionShape shape{std::vector<std::size_t>(m, 0), std::vector<std::size_t>(m, 0), set.class_sizes(ids)};
  for (PointId id : ids) {
    if (std::find(cut.spanning_ids.begin(), cut.spanning_ids.end(), id) != cut.spanning_ids.end()) continue;
    const int s = cut.side_of(set.point(id));
    if (s > 0) ++shape.above[set.color(id)];
    if (s < 0) ++shape.below[set.color(id)];
  }
  return shape;
}

// Fills side assignments for a bisecting cut, or returns false.
bool assign_bisection(OrientedCut& cut, const ColoredPointSet& set, std::span<const PointId> ids) {
  const BisectionShape shape = bisection_shape(cut, set, ids);
  for (PointId p : cut.spanning_ids) {
    const int c = set.color(p);
    const std::size_t half = shape.sizes[c] / 2;
    if (shape.sizes[c] % 2 == 1) {
      if (shape.above[c] != half || shape.below[c] != half) return false;
      cut.side_assignment[p] = Side::kAbove;
    } else if (shape.above[c] + 1 == half && shape.below[c] == half) {
      cut.side_assignment[p] = Side::kAbove;
    } else if (shape.below[c] + 1 == half && shape.above[c] == half) {
      cut.side_assignment[p] = Side::kBelow;
    } else {
      return false;
    }
  }
  return true;
}

}  // namespace

std::optional<OrientedCut> find_bisecting_cut(const ColoredPointSet& set, std::span<const PointId> ids_in) {
  IdList ids(ids_in.begin(), ids_in.end());
  std::sort(ids.begin(), ids.end());
  check_region(set, ids);
  const int d = set.dim();
  std::optional<OrientedCut> found;
  for_each_subset(ids, static_cast<std::size_t>(d), [&](const IdList& subset) {
    if (set.colors_present(subset) != d) return false;
    OrientedCut cut = canonical_cut(set, ids, subset);
    if (!assign_bisection(cut, set, ids)) return false;
    found = std::move(cut);
    return true;
  });
  return found;
}

SpecialCut round_cut_reference(const OrientedCut& h_prime, const ColoredPointSet& set,
                               std::span<const PointId> ids_in) {
  IdList ids(ids_in.begin(), ids_in.end());
  std::sort(ids.begin(), ids.end());
  check_region(set, ids);
  const int d = set.dim();
  if (h_prime.spanning_ids.size() != static_cast<std::size_t>(d) || set.colors_present(h_prime.spanning_ids) != d) {
    throw PreconditionError("h' must be spanned by one point of every color class");
  }
  OrientedCut h = h_prime;
  h.side_assignment.clear();
  if (!assign_bisection(h, set, ids)) throw PreconditionError("h' does not bisect every color class");

  const auto sizes = set.class_sizes(ids);
  IdList on_plane;  // odd classes: p_i lies on h'
  for (PointId p : h.spanning_ids) {
    if (sizes[set.color(p)] % 2 == 1) on_plane.push_back(p);
  }
  const std::size_t c = on_plane.size();
  const std::size_t n = ids.size() / (d + 1);

  if (n % 2 == 0) {
    // Half of the on-plane points to each side; touching points stay.
    for (std::size_t i = 0; i < c; ++i) h.side_assignment[on_plane[i]] = i < c / 2 ? Side::kAbove : Side::kBelow;
  } else {
    auto touching = [&](Side side) {
      IdList out;
      for (PointId p : h.spanning_ids) {
        if (sizes[set.color(p)] % 2 == 0 && h.side_assignment.at(p) == side) out.push_back(p);
      }
      return out;
    };
    if (touching(Side::kAbove).size() < touching(Side::kBelow).size()) {
      // Normalize so that at least as many touching points are above.
      for (auto& v : h.normal) v = -v;
      h.offset = -h.offset;
      for (auto& [id, side] : h.side_assignment) side = side == Side::kAbove ? Side::kBelow : Side::kAbove;
    }
    const IdList above = touching(Side::kAbove);
    const std::size_t move = (static_cast<std::size_t>(d) + 1 - c) / 2;
    if ((static_cast<std::size_t>(d) + 1 - c) % 2 != 0 || move > above.size()) {
      throw InvariantError("rounding: parity of on-plane points or touching count contradicts the bisection");
    }
    for (PointId p : on_plane) h.side_assignment[p] = Side::kBelow;
    for (std::size_t i = 0; i < move; ++i) h.side_assignment[above[i]] = Side::kBelow;
  }

  SpecialCut out = evaluate_cut(h, set, ids);
  if (!is_special(out, d)) throw InvariantError("rounded bisection is not a special cut");
  return out;
}

namespace {

void recurse_rd(const ColoredPointSet& set, IdList ids, RdResult& result) {
  const std::size_t parts = static_cast<std::size_t>(set.dim()) + 1;
  if (ids.size() == parts) {
    result.partition.parts.push_back(std::move(ids));
    return;
  }
  SpecialCut cut = special_cut(set, ids);
  IdList above = cut.above;
  IdList below = cut.below;
  result.cuts.push_back(std::move(cut));
  recurse_rd(set, std::move(above), result);
  recurse_rd(set, std::move(below), result);
}

}  // namespace

RdResult partition_rd(const BalancedInstance& instance) {
  RdResult result;
  recurse_rd(instance.set(), instance.set().all_ids(), result);
  return result;
}

}  // namespace islands::sandwich
