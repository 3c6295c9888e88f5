#include "islands/halfplanes.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "islands/errors.hpp"
#include "islands/predicates.hpp"

namespace islands::planar {

PlanarContext::PlanarContext(const ColoredPointSet& set) : set_(&set), n_(set.size()) {
  if (set.dim() != 2) throw PreconditionError("planar routines need a point set in R^2");
  if (set.num_colors() > 2) throw PreconditionError("planar routines need at most two colors");
  if (n_ > kMaxPlanarPoints) {
    throw CapacityError("planar routines support at most " + std::to_string(kMaxPlanarPoints) + " points, got " +
                        std::to_string(n_));
  }
  cache_.assign(n_ * n_ * n_, 2);
}

int PlanarContext::orient(PointId a, PointId b, PointId c) const {
  std::int8_t& slot = cache_[(a * n_ + b) * n_ + c];
  if (slot == 2) {
    const int o = orient2d(set_->point(a), set_->point(b), set_->point(c));
    const auto s = static_cast<std::int8_t>(o);
    slot = s;
    cache_[(b * n_ + c) * n_ + a] = s;
    cache_[(c * n_ + a) * n_ + b] = s;
    cache_[(b * n_ + a) * n_ + c] = static_cast<std::int8_t>(-s);
    cache_[(a * n_ + c) * n_ + b] = static_cast<std::int8_t>(-s);
    cache_[(c * n_ + b) * n_ + a] = static_cast<std::int8_t>(-s);
  }
  return slot;
}

HalfplaneFamily::HalfplaneFamily(const PlanarContext& ctx, IdList ids) : ctx_(&ctx), ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  const std::size_t n = ids_.size();
  if (n > kMaxPlanarPoints) {
    throw CapacityError("planar halfplane family supports at most " + std::to_string(kMaxPlanarPoints) +
                        " points, got " + std::to_string(n));
  }
  const ColoredPointSet& set = ctx.set();
  for (std::size_t i = 0; i < n; ++i) {
    full_.set(i);
    color_masks_[set.color(ids_[i]) == 0 ? 0 : 1].set(i);
  }

  std::unordered_set<PointMask> seen;
  auto add = [&](const PointMask& mask, std::size_t i, std::size_t j, bool left, bool tp, bool tq) {
    if (mask.none() || mask == full_) return;
    if (!seen.insert(mask).second) return;
    HalfplaneEntry e;
    e.mask = mask;
    e.count[0] = (mask & color_masks_[0]).count();
    e.count[1] = (mask & color_masks_[1]).count();
    e.p = ids_[i];
    e.q = ids_[j];
    e.left = left;
    e.take_p = tp;
    e.take_q = tq;
    entries_.push_back(e);
  };

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      PointMask left_side;
      PointMask right_side;
      for (std::size_t l = 0; l < n; ++l) {
        if (l == i || l == j) continue;
        const int o = ctx.orient(ids_[i], ids_[j], ids_[l]);
        if (o > 0) {
          left_side.set(l);
        } else if (o < 0) {
          right_side.set(l);
        } else {
          throw DegenerateInputError("collinear triple in planar input", {ids_[i], ids_[j], ids_[l]});
        }
      }
      for (const bool left : {true, false}) {
        const PointMask& base = left ? left_side : right_side;
        for (int variant = 0; variant < 4; ++variant) {
          PointMask m = base;
          const bool tp = (variant & 1) != 0;
          const bool tq = (variant & 2) != 0;
          if (tp) m.set(i);
          if (tq) m.set(j);
          add(m, i, j, left, tp, tq);
        }
      }
    }
  }
}

IdList HalfplaneFamily::to_ids(const PointMask& mask) const {
  IdList out;
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (mask.test(i)) out.push_back(ids_[i]);
  }
  return out;
}

OrientedCut HalfplaneFamily::witness(const HalfplaneEntry& entry) const {
  OrientedCut cut = OrientedCut::through(ctx_->set(), {entry.p, entry.q}, !entry.left);
  cut.side_assignment[entry.p] = entry.take_p ? Side::kAbove : Side::kBelow;
  cut.side_assignment[entry.q] = entry.take_q ? Side::kAbove : Side::kBelow;
  return cut;
}

}  // namespace islands::planar
