#include "islands/planar.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>

#include "islands/errors.hpp"
#include "islands/predicates.hpp"

namespace islands::planar {

SplitParams split_params(std::size_t size_a, std::size_t size_b, std::size_t n) {
  if (n == 0) throw PreconditionError("n must be positive");
  return SplitParams{size_a / n, size_b / n, size_a % n, size_b % n};
}

PlanarInstance::PlanarInstance(const ColoredPointSet& set, int k, int n) : set_(&set), k_(k), n_(n) {
  if (set.dim() != 2) throw PreconditionError("planar instance needs dimension 2, got " + std::to_string(set.dim()));
  if (set.num_colors() != 2) {
    throw PreconditionError("planar instance needs exactly 2 colors, got " + std::to_string(set.num_colors()));
  }
  if (k < 2) throw PreconditionError("k must be at least 2, got " + std::to_string(k));
  if (n < 1) throw PreconditionError("n must be at least 1, got " + std::to_string(n));
  if (set.size() != static_cast<std::size_t>(k) * static_cast<std::size_t>(n)) {
    throw PreconditionError("|X| = " + std::to_string(set.size()) + " but kn = " + std::to_string(k * n));
  }
  sizes_ = set.class_sizes();
  for (int c = 0; c < 2; ++c) {
    if (sizes_[c] < static_cast<std::size_t>(n)) {
      throw PreconditionError("color class " + std::to_string(c) + " has " + std::to_string(sizes_[c]) +
                              " < n=" + std::to_string(n) + " points");
    }
  }
  require_general_position(set);
}

SplitParams PlanarInstance::params(int color_a) const {
  return split_params(sizes_.at(color_a), sizes_.at(1 - color_a), static_cast<std::size_t>(n_));
}

const char* step_kind_name(PartitionStep::Kind kind) {
  switch (kind) {
    case PartitionStep::Kind::kWhole: return "whole";
    case PartitionStep::Kind::kLineSplit: return "line_split";
    case PartitionStep::Kind::kThreeCut: return "three_cut";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Sigma scan

namespace {

SigmaEntry scan_level(const HalfplaneFamily& family, int color_a, std::size_t index, std::size_t a_count,
                      std::size_t b_target) {
  const int color_b = 1 - color_a;
  SigmaEntry entry;
  entry.index = index;
  entry.a_count = a_count;
  entry.b_target = b_target;
  const HalfplaneEntry* first = nullptr;
  const HalfplaneEntry* equal = nullptr;
  bool below = false;
  bool above = false;
  for (const auto& h : family.entries()) {
    if (h.count[color_a] != a_count) continue;
    const std::size_t bc = h.count[color_b];
    if (!first) {
      first = &h;
      entry.b_min = entry.b_max = bc;
    }
    entry.b_min = std::min(entry.b_min, bc);
    entry.b_max = std::max(entry.b_max, bc);
    if (bc == b_target && !equal) equal = &h;
    below = below || bc < b_target;
    above = above || bc > b_target;
  }
  if (!first) {
    throw InvariantError("no halfplane contains exactly " + std::to_string(a_count) + " points of color " +
                         std::to_string(color_a));
  }
  if (equal) {
    entry.sign = SigmaSign::kEquitable;
    entry.witness = family.witness(*equal);
    entry.inside = family.to_ids(equal->mask);
    return entry;
  }
  if (below && above) {
    // Intermediate values: some halfplane at this level must hit the target.
    throw InvariantError("halfplanes with " + std::to_string(a_count) + " A-points have B-counts on both sides of " +
                         std::to_string(b_target) + " but none equal to it");
  }
  entry.sign = below ? SigmaSign::kMinus : SigmaSign::kPlus;
  entry.witness = family.witness(*first);
  entry.inside = family.to_ids(first->mask);
  return entry;
}

}  // namespace

SigmaTable sigma_scan(const HalfplaneFamily& family, int color_a, std::size_t n) {
  const IdList& ids = family.ids();
  const std::size_t size_a = family.count(family.full(), color_a);
  const std::size_t size_b = ids.size() - size_a;
  SigmaTable table;
  table.color_a = color_a;
  table.params = split_params(size_a, size_b, n);
  const SplitParams& p = table.params;
  if (p.s == 0 || p.t == 0 || p.s + p.t != n) {
    throw PreconditionError("sigma_scan needs the non-divisible case (s, t >= 1, s + t = n)");
  }
  for (std::size_t i = 1; i <= p.t; ++i) table.sigma_a.push_back(scan_level(family, color_a, i, i * p.a, i * (p.b + 1)));
  for (std::size_t j = 1; j <= p.s; ++j) table.sigma_a1.push_back(scan_level(family, color_a, j, j * (p.a + 1), j * p.b));
  return table;
}

SigmaTable sigma_scan(const PlanarInstance& instance, int color_a) {
  const PlanarContext ctx(instance.set());
  const HalfplaneFamily family(ctx, instance.set().all_ids());
  return sigma_scan(family, color_a, static_cast<std::size_t>(instance.n()));
}

// ---------------------------------------------------------------------------
// 3-cutting

bool three_cut_hypothesis_holds(const HalfplaneFamily& family, int color_a, const std::array<std::size_t, 3>& a,
                                const std::array<std::size_t, 3>& b) {
  const int color_b = 1 - color_a;
  for (const auto& h : family.entries()) {
    for (int i = 0; i < 3; ++i) {
      if (h.count[color_a] == a[i] && h.count[color_b] >= b[i]) return false;
    }
  }
  return true;
}

std::optional<ThreeCutResult> find_three_partition(const HalfplaneFamily& family, int color_a,
                                                   const std::array<std::size_t, 3>& a,
                                                   const std::array<std::size_t, 3>& b) {
  const int color_b = 1 - color_a;
  const PointMask& mask_a = family.color_mask(color_a);
  const PointMask& mask_b = family.color_mask(color_b);
  if (a[0] + a[1] + a[2] != mask_a.count() || b[0] + b[1] + b[2] != mask_b.count()) {
    throw PreconditionError("three_cutting: prescribed counts do not add up to the color class sizes");
  }

  // H1 contains part 0 and avoids part 2, H2 contains part 0 and avoids
  // part 1, H3 separates part 1 from part 2 inside the rest. Any pairwise
  // separable partition has such a triple among the canonical halfplanes.
  const auto& entries = family.entries();
  std::vector<const HalfplaneEntry*> first_side;
  std::vector<const HalfplaneEntry*> second_side;
  for (const auto& h : entries) {
    const std::size_t ca = h.count[color_a];
    const std::size_t cb = h.count[color_b];
    if (ca < a[0] || cb < b[0]) continue;
    if (ca <= a[0] + a[1] && cb <= b[0] + b[1]) first_side.push_back(&h);
    if (ca <= a[0] + a[2] && cb <= b[0] + b[2]) second_side.push_back(&h);
  }

  const PointMask& full = family.full();
  for (const HalfplaneEntry* h1 : first_side) {
    for (const HalfplaneEntry* h2 : second_side) {
      const PointMask core = h1->mask & h2->mask;
      if ((core & mask_a).count() != a[0] || (core & mask_b).count() != b[0]) continue;
      const PointMask to_second = h1->mask & ~h2->mask;
      const PointMask to_third = h2->mask & ~h1->mask;
      const std::size_t sa = (to_second & mask_a).count();
      const std::size_t sb = (to_second & mask_b).count();
      if (sa > a[1] || sb > b[1]) continue;
      if ((to_third & mask_a).count() > a[2] || (to_third & mask_b).count() > b[2]) continue;
      const PointMask rest = full & ~(h1->mask | h2->mask);
      const std::size_t need_a = a[1] - sa;
      const std::size_t need_b = b[1] - sb;
      for (const auto& h3 : entries) {
        if ((h3.mask & to_second) != to_second) continue;
        if ((h3.mask & to_third).any()) continue;
        const PointMask taken = h3.mask & rest;
        if ((taken & mask_a).count() != need_a || (taken & mask_b).count() != need_b) continue;
        ThreeCutResult result;
        result.parts[0] = family.to_ids(core);
        result.parts[1] = family.to_ids(to_second | taken);
        result.parts[2] = family.to_ids(to_third | (rest & ~h3.mask));
        result.separators = {family.witness(*h1), family.witness(*h2), family.witness(h3)};
        return result;
      }
    }
  }
  return std::nullopt;
}

ThreeCutResult three_cutting(const HalfplaneFamily& family, int color_a, const std::array<std::size_t, 3>& a,
                             const std::array<std::size_t, 3>& b) {
  for (int i = 0; i < 3; ++i) {
    if (a[i] == 0 || b[i] == 0) throw PreconditionError("three_cutting: all prescribed counts must be positive");
  }
  if (!three_cut_hypothesis_holds(family, color_a, a, b)) {
    throw PreconditionError(
        "three_cutting: some open halfplane with a_i points of A holds at least b_i points of B; split by a line "
        "instead");
  }
  auto found = find_three_partition(family, color_a, a, b);
  if (!found) throw InvariantError("three_cutting: no pairwise separable 3-partition with the prescribed counts exists");
  return std::move(*found);
}

ThreeCutResult three_cutting(const ColoredPointSet& set, std::span<const PointId> ids, int color_a,
                             const std::array<std::size_t, 3>& a, const std::array<std::size_t, 3>& b) {
  const PlanarContext ctx(set);
  const HalfplaneFamily family(ctx, IdList(ids.begin(), ids.end()));
  return three_cutting(family, color_a, a, b);
}

// ---------------------------------------------------------------------------
// Recursive partition

namespace {

std::string counts_str(std::size_t a, std::size_t b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

class Solver {
 public:
  Solver(const PlanarContext& ctx, std::size_t k) : ctx_(ctx), k_(k) {}

  std::vector<PartitionStep> steps;

  std::vector<IdList> equipartition(IdList ids, std::size_t per0, std::size_t per1, std::size_t n,
                                    std::size_t depth);
  std::vector<IdList> plane(IdList ids, std::size_t n, std::size_t depth);

 private:
  void whole(const IdList& ids, std::size_t depth) {
    steps.push_back({PartitionStep::Kind::kWhole, depth, ids.size(), 1, {}, "single island"});
  }

  std::vector<IdList> three_cut_and_recurse(const HalfplaneFamily& family, int color_a,
                                            const std::array<std::size_t, 3>& a, const std::array<std::size_t, 3>& b,
                                            const std::array<std::size_t, 3>& parts, bool divisible, std::size_t depth);

  const PlanarContext& ctx_;
  std::size_t k_;
};

void append(std::vector<IdList>& out, std::vector<IdList> more) {
  for (auto& p : more) out.push_back(std::move(p));
}

std::vector<IdList> Solver::three_cut_and_recurse(const HalfplaneFamily& family, int color_a,
                                                  const std::array<std::size_t, 3>& a,
                                                  const std::array<std::size_t, 3>& b,
                                                  const std::array<std::size_t, 3>& parts, bool divisible,
                                                  std::size_t depth) {
  if (!three_cut_hypothesis_holds(family, color_a, a, b)) {
    throw InvariantError("3-cutting hypothesis inferred from the sign sequences does not hold for A-counts " +
                         counts_str(a[0], a[1]) + "," + std::to_string(a[2]));
  }
  ThreeCutResult cut = three_cutting(family, color_a, a, b);
  PartitionStep step{PartitionStep::Kind::kThreeCut, depth, family.ids().size(), parts[0] + parts[1] + parts[2],
                     {cut.separators.begin(), cut.separators.end()}, ""};
  std::ostringstream detail;
  detail << "color " << color_a << " as A; parts " << parts[0] << "+" << parts[1] << "+" << parts[2] << "; counts "
         << counts_str(a[0], b[0]) << " " << counts_str(a[1], b[1]) << " " << counts_str(a[2], b[2]);
  step.detail = detail.str();
  steps.push_back(std::move(step));

  std::vector<IdList> out;
  for (int i = 0; i < 3; ++i) {
    if (divisible) {
      const std::size_t per_a = a[i] / parts[i];
      const std::size_t per_b = b[i] / parts[i];
      const std::size_t per0 = color_a == 0 ? per_a : per_b;
      const std::size_t per1 = color_a == 0 ? per_b : per_a;
      append(out, equipartition(std::move(cut.parts[i]), per0, per1, parts[i], depth + 1));
    } else {
      append(out, plane(std::move(cut.parts[i]), parts[i], depth + 1));
    }
  }
  return out;
}

std::vector<IdList> Solver::equipartition(IdList ids, std::size_t per0, std::size_t per1, std::size_t n,
                                          std::size_t depth) {
  if (n == 1) {
    whole(ids, depth);
    return {std::move(ids)};
  }
  const HalfplaneFamily family(ctx_, std::move(ids));

  // Line cuts, most balanced first.
  std::vector<std::size_t> order(n - 1);
  std::iota(order.begin(), order.end(), std::size_t{1});
  std::stable_sort(order.begin(), order.end(), [n](std::size_t x, std::size_t y) {
    const auto dx = static_cast<long>(2 * x) - static_cast<long>(n);
    const auto dy = static_cast<long>(2 * y) - static_cast<long>(n);
    return std::labs(dx) < std::labs(dy);
  });
  for (std::size_t i : order) {
    for (const auto& h : family.entries()) {
      if (h.count[0] != per0 * i || h.count[1] != per1 * i) continue;
      steps.push_back({PartitionStep::Kind::kLineSplit, depth, family.ids().size(), n, {family.witness(h)},
                       "divisible split " + std::to_string(i) + "+" + std::to_string(n - i)});
      std::vector<IdList> out = equipartition(family.to_ids(h.mask), per0, per1, i, depth + 1);
      append(out, equipartition(family.to_ids(family.full() & ~h.mask), per0, per1, n - i, depth + 1));
      return out;
    }
  }

  // No line cut: every level i has a well-defined sign sigma(i), and
  // sigma(n-i) = -sigma(i) by complementation.
  std::vector<int> sigma(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    bool below = false;
    bool above = false;
    for (const auto& h : family.entries()) {
      if (h.count[0] != per0 * i) continue;
      below = below || h.count[1] < per1 * i;
      above = above || h.count[1] > per1 * i;
    }
    if (below == above) {
      throw InvariantError("divisible split: sign at level " + std::to_string(i) + " is not well defined");
    }
    sigma[i] = below ? -1 : 1;
  }
  // With color 0 as A the hypothesis needs sigma = -1 on all three levels;
  // with color 1 as A the signs flip.
  const int color_a = sigma[1] < 0 ? 0 : 1;
  const int want = sigma[1];
  std::size_t change = 0;
  for (std::size_t i = 2; i < n; ++i) {
    if (sigma[i] != want) {
      change = i;
      break;
    }
  }
  if (change == 0) throw InvariantError("divisible split: sign sequence never changes");
  const std::array<std::size_t, 3> parts{1, change - 1, n - change};
  const std::size_t per_a = color_a == 0 ? per0 : per1;
  const std::size_t per_b = color_a == 0 ? per1 : per0;
  const std::array<std::size_t, 3> a{per_a * parts[0], per_a * parts[1], per_a * parts[2]};
  const std::array<std::size_t, 3> b{per_b * parts[0], per_b * parts[1], per_b * parts[2]};
  return three_cut_and_recurse(family, color_a, a, b, parts, true, depth);
}

std::vector<IdList> Solver::plane(IdList ids, std::size_t n, std::size_t depth) {
  if (n == 1) {
    whole(ids, depth);
    return {std::move(ids)};
  }
  const auto sizes = ctx_.set().class_sizes(ids);
  if (sizes[0] % n == 0) return equipartition(std::move(ids), sizes[0] / n, sizes[1] / n, n, depth);

  const HalfplaneFamily family(ctx_, std::move(ids));
  std::array<std::optional<SigmaTable>, 2> tables;
  for (int color_a = 0; color_a < 2; ++color_a) {
    tables[color_a] = sigma_scan(family, color_a, n);
    const SigmaTable& table = *tables[color_a];
    const SplitParams& p = table.params;
    if (p.a == 0 || p.b == 0 || p.a + p.b + 1 != k_) {
      throw InvariantError("planar recursion reached counts with a = 0 or b = 0 or k != a+b+1");
    }
    for (const auto* seq : {&table.sigma_a, &table.sigma_a1}) {
      for (const SigmaEntry& e : *seq) {
        if (e.sign != SigmaSign::kEquitable) continue;
        steps.push_back({PartitionStep::Kind::kLineSplit, depth, family.ids().size(), n, {e.witness},
                         "equitable halfplane " + std::string(seq == &table.sigma_a ? "sigma_a(" : "sigma_a+1(") +
                             std::to_string(e.index) + ") with color " + std::to_string(color_a) + " as A"});
        std::vector<IdList> out = plane(e.inside, e.index, depth + 1);
        IdList outside;
        std::set_difference(family.ids().begin(), family.ids().end(), e.inside.begin(), e.inside.end(),
                            std::back_inserter(outside));
        append(out, plane(std::move(outside), n - e.index, depth + 1));
        return out;
      }
    }
  }

  for (int color_a = 0; color_a < 2; ++color_a) {
    const SigmaTable& table = *tables[color_a];
    const SplitParams& p = table.params;
    if (table.sigma_a.front().sign != table.sigma_a1.front().sign) {
      throw InvariantError("sigma_a(1) differs from sigma_a+1(1) without an equitable halfplane");
    }
    if (table.sigma_a.front().sign != SigmaSign::kMinus) continue;

    for (const SigmaEntry& e : table.sigma_a) {
      if (e.sign != SigmaSign::kPlus) continue;
      const std::size_t i = e.index;
      const std::array<std::size_t, 3> a{p.a, (i - 1) * p.a, (n - i) * p.a + p.s};
      const std::array<std::size_t, 3> b{p.b + 1, (i - 1) * (p.b + 1), (n - i) * p.b + (p.t - i)};
      return three_cut_and_recurse(family, color_a, a, b, {1, i - 1, n - i}, false, depth);
    }
    for (const SigmaEntry& e : table.sigma_a1) {
      if (e.sign != SigmaSign::kPlus) continue;
      const std::size_t j = e.index;
      const std::array<std::size_t, 3> a{p.a + 1, (j - 1) * (p.a + 1), (n - j) * p.a + p.s - j};
      const std::array<std::size_t, 3> b{p.b, (j - 1) * p.b, (n - j) * p.b + p.t};
      return three_cut_and_recurse(family, color_a, a, b, {1, j - 1, n - j}, false, depth);
    }
    throw InvariantError("sigma_a and sigma_a+1 are constant -1 although sigma_a+1(s) and sigma_a(t) are complementary");
  }
  throw InvariantError("sigma_a(1) = +1 with either color playing A");
}

}  // namespace

PlanarResult equipartition_divisible(const ColoredPointSet& set, std::size_t a, std::size_t b, std::size_t n) {
  if (n == 0) throw PreconditionError("n must be positive");
  if (set.num_colors() != 2) throw PreconditionError("equipartition needs exactly 2 colors");
  const auto sizes = set.class_sizes();
  if (sizes[0] != a * n || sizes[1] != b * n) {
    throw PreconditionError("equipartition needs |A| = an and |B| = bn");
  }
  if (a + b == 0) throw PreconditionError("equipartition needs a + b >= 1");
  require_general_position(set);
  const PlanarContext ctx(set);
  Solver solver(ctx, a + b);
  PlanarResult result;
  result.partition.parts = solver.equipartition(set.all_ids(), a, b, n, 0);
  result.steps = std::move(solver.steps);
  return result;
}

PlanarResult partition_plane(const PlanarInstance& instance) {
  const PlanarContext ctx(instance.set());
  Solver solver(ctx, static_cast<std::size_t>(instance.k()));
  PlanarResult result;
  result.partition.parts = solver.plane(instance.set().all_ids(), static_cast<std::size_t>(instance.n()), 0);
  result.steps = std::move(solver.steps);
  for (auto& part : result.partition.parts) std::sort(part.begin(), part.end());
  return result;
}

}  // namespace islands::planar
