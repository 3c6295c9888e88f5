#include "islands/generate.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>

#include "islands/errors.hpp"
#include "islands/hall.hpp"
#include "islands/predicates.hpp"

namespace islands::gen {

namespace {

using IntPoint = std::vector<std::int64_t>;

// Rank of an integer matrix by fraction-free elimination. Entries stay
// below 2^100 for the coordinate ranges used here.
int int_rank(std::vector<std::vector<__int128>> m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  std::size_t rank = 0;
  __int128 prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) m[r][k] = (m[rank][c] * m[r][k] - m[r][c] * m[rank][k]) / prev;
      m[r][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return static_cast<int>(rank);
}

// Would adding `p` create an affinely dependent subset of size <= d+1?
bool breaks_general_position(const std::vector<IntPoint>& pts, const IntPoint& p, int d) {
  std::vector<std::size_t> chosen;
  std::function<bool(std::size_t)> rec = [&](std::size_t start) -> bool {
    if (!chosen.empty()) {
      std::vector<std::vector<__int128>> m;
      for (std::size_t i : chosen) {
        std::vector<__int128> row(d);
        for (int k = 0; k < d; ++k) row[k] = static_cast<__int128>(pts[i][k]) - p[k];
        m.push_back(std::move(row));
      }
      if (int_rank(m) < static_cast<int>(chosen.size())) return true;
    }
    if (chosen.size() == static_cast<std::size_t>(d)) return false;
    for (std::size_t i = start; i < pts.size(); ++i) {
      chosen.push_back(i);
      if (rec(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return rec(0);
}

ColoredPointSet to_set(int dim, const std::vector<IntPoint>& pts, const std::vector<int>& colors, int num_colors) {
  std::vector<Coords> coords;
  for (const auto& p : pts) {
    Coords x;
    for (auto v : p) x.emplace_back(static_cast<long>(v));
    coords.push_back(std::move(x));
  }
  return ColoredPointSet(dim, std::move(coords), colors, num_colors);
}

std::vector<IntPoint> random_points(std::mt19937_64& rng, std::size_t count, int dim, std::int64_t range) {
  std::uniform_int_distribution<std::int64_t> coord(-range, range);
  std::vector<IntPoint> pts;
  constexpr int kRetries = 1000;
  while (pts.size() < count) {
    int tries = 0;
    IntPoint p(dim);
    do {
      if (++tries > kRetries) throw PreconditionError("could not reach general position within the retry budget");
      for (auto& v : p) v = coord(rng);
    } while (breaks_general_position(pts, p, dim));
    pts.push_back(p);
  }
  return pts;
}

std::vector<int> colors_from_sizes(const std::vector<std::size_t>& sizes) {
  std::vector<int> out;
  for (std::size_t c = 0; c < sizes.size(); ++c) out.insert(out.end(), sizes[c], static_cast<int>(c));
  return out;
}

void check_basic(const GenParams& p) {
  if (p.dim < 2) throw PreconditionError("dim must be at least 2");
  if (p.n < 1) throw PreconditionError("n must be at least 1");
  if (p.k < 1) throw PreconditionError("k must be at least 1");
  if (p.coord_range < 16 || p.coord_range > (std::int64_t{1} << 24)) {
    throw PreconditionError("coordinate range must lie in [16, 2^24]");
  }
}

int color_count(const GenParams& p) {
  if (!p.sizes.empty()) return static_cast<int>(p.sizes.size());
  if (p.colors > 0) return p.colors;
  return p.dim == 2 ? 2 : p.dim;
}

std::vector<std::size_t> class_sizes_for(const GenParams& p, std::uint64_t seed) {
  const std::size_t total = static_cast<std::size_t>(p.k) * static_cast<std::size_t>(p.n);
  if (!p.sizes.empty()) {
    if (std::accumulate(p.sizes.begin(), p.sizes.end(), std::size_t{0}) != total) {
      throw PreconditionError("explicit class sizes must sum to kn = " + std::to_string(total));
    }
    return p.sizes;
  }
  const int m = color_count(p);
  const std::size_t floor = std::min<std::size_t>(static_cast<std::size_t>(p.n), total / m);
  return random_sizes(seed, total, m, floor);
}

io::Instance finish(const GenParams& p, std::vector<IntPoint> pts, std::vector<int> colors, int m) {
  ColoredPointSet set = to_set(p.dim, pts, colors, m);
  require_general_position(set);
  return io::Instance{std::move(set), io::InstanceMeta{p.k, p.n, p.seed, p.family}};
}

io::Instance random_family(const GenParams& p) {
  std::mt19937_64 rng(p.seed);
  const auto sizes = class_sizes_for(p, rng());
  std::vector<int> colors = colors_from_sizes(sizes);
  std::shuffle(colors.begin(), colors.end(), rng);
  auto pts = random_points(rng, colors.size(), p.dim, p.coord_range);
  return finish(p, std::move(pts), std::move(colors), static_cast<int>(sizes.size()));
}

IntPoint polar(double radius, double degrees, double scale) {
  const double t = degrees * M_PI / 180.0;
  return {std::llround(radius * std::cos(t) * scale), std::llround(radius * std::sin(t) * scale)};
}

io::Instance rings_family(const GenParams& p) {
  if (p.dim != 2) throw PreconditionError("rings family is planar (dim = 2)");
  const std::size_t total = static_cast<std::size_t>(p.k) * static_cast<std::size_t>(p.n);
  std::mt19937_64 rng(p.seed);
  std::vector<IntPoint> pts;
  std::vector<int> colors;
  const double scale = 10000.0;

  if (p.k == 5 && p.n == 10 && p.sizes.empty()) {
    // 8 inner points of color 0, 27 outer of color 1, 15 on the middle ring
    // (positions 2, 4, 7, 10, 13, 15 of color 1, the rest color 0).
    for (int i = 1; i <= 8; ++i) {
      pts.push_back(polar(0.75, 360.0 * i / 8 + 4, scale));
      colors.push_back(0);
    }
    for (int i = 1; i <= 15; ++i) {
      pts.push_back(polar(1.75, 360.0 * i / 15, scale));
      const bool outer_color = i == 2 || i == 4 || i == 7 || i == 10 || i == 13 || i == 15;
      colors.push_back(outer_color ? 1 : 0);
    }
    for (int i = 1; i <= 27; ++i) {
      pts.push_back(polar(2.75, 360.0 * i / 27, scale));
      colors.push_back(1);
    }
  } else {
    // Same three rings, sizes in the proportion 8 : 15 : 27, middle ring
    // colored at random; then topped up so both classes reach n.
    const std::size_t inner = std::max<std::size_t>(1, total * 8 / 50);
    const std::size_t middle = std::max<std::size_t>(total >= 2 ? 1 : 0, total * 15 / 50);
    const std::size_t outer = total - std::min(total, inner + middle);
    std::uniform_real_distribution<double> jitter(-0.3, 0.3);
    std::bernoulli_distribution coin(0.5);
    auto ring = [&](std::size_t count, double radius, int color) {
      const double phase = jitter(rng) * 30;
      for (std::size_t i = 0; i < count && pts.size() < total; ++i) {
        pts.push_back(polar(radius, 360.0 * (i + 1 + jitter(rng)) / count + phase, scale));
        colors.push_back(color < 0 ? (coin(rng) ? 1 : 0) : color);
      }
    };
    ring(inner, 0.75, 0);
    ring(middle, 1.75, -1);
    ring(outer, 2.75, 1);
    for (int c = 0; c < 2; ++c) {
      auto have = static_cast<std::size_t>(std::count(colors.begin(), colors.end(), c));
      for (std::size_t i = 0; i < colors.size() && have < static_cast<std::size_t>(p.n); ++i) {
        const std::size_t j = c == 0 ? i : colors.size() - 1 - i;
        const auto other = static_cast<std::size_t>(std::count(colors.begin(), colors.end(), 1 - c));
        if (colors[j] != c && other > static_cast<std::size_t>(p.n)) {
          colors[j] = c;
          ++have;
        }
      }
    }
  }
  // Rounding to integers can line points up; nudge until general position.
  std::vector<IntPoint> accepted;
  std::uniform_int_distribution<int> nudge(-3, 3);
  for (auto& q : pts) {
    int tries = 0;
    while (breaks_general_position(accepted, q, 2)) {
      if (++tries > 1000) throw PreconditionError("could not reach general position within the retry budget");
      q[0] += nudge(rng);
      q[1] += nudge(rng);
    }
    accepted.push_back(q);
  }
  return finish(p, std::move(accepted), std::move(colors), 2);
}

io::Instance tightness_family(const GenParams& p) {
  const int d = p.dim;
  const auto variant = p.k == d ? hall::TightnessVariant::kKEqualsD : hall::TightnessVariant::kKGreaterD;
  const hall::ColorProfile profile = hall::tightness_family(d, variant, p.n, p.k);
  std::mt19937_64 rng(p.seed);
  std::vector<int> colors = colors_from_sizes(profile.sizes);
  std::shuffle(colors.begin(), colors.end(), rng);
  auto pts = random_points(rng, colors.size(), p.dim, p.coord_range);
  return finish(p, std::move(pts), std::move(colors), static_cast<int>(profile.sizes.size()));
}

io::Instance convex_family(const GenParams& p) {
  std::mt19937_64 rng(p.seed);
  const auto sizes = class_sizes_for(p, rng());
  std::vector<int> colors = colors_from_sizes(sizes);
  std::shuffle(colors.begin(), colors.end(), rng);
  // Moment curve (t, t^2, ..., t^d): convex position, general position.
  std::vector<IntPoint> pts;
  const auto count = static_cast<std::int64_t>(colors.size());
  for (std::int64_t i = 0; i < count; ++i) {
    const std::int64_t t = i - count / 2;
    IntPoint q(p.dim);
    std::int64_t power = 1;
    for (int k = 0; k < p.dim; ++k) {
      power *= t;
      q[k] = power;
    }
    pts.push_back(std::move(q));
  }
  return finish(p, std::move(pts), std::move(colors), static_cast<int>(sizes.size()));
}

}  // namespace

std::vector<std::size_t> random_sizes(std::uint64_t seed, std::size_t total, int colors, std::size_t floor) {
  if (colors < 1) throw PreconditionError("need at least one color");
  if (floor * static_cast<std::size_t>(colors) > total) throw PreconditionError("class size floor too large");
  // Stars and bars: uniform over compositions of the surplus.
  const std::size_t extra = total - floor * colors;
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> slots(extra + colors - 1);
  std::iota(slots.begin(), slots.end(), std::size_t{0});
  std::shuffle(slots.begin(), slots.end(), rng);
  std::vector<std::size_t> bars(slots.begin(), slots.begin() + (colors - 1));
  std::sort(bars.begin(), bars.end());
  std::vector<std::size_t> sizes;
  std::size_t prev = 0;
  for (std::size_t b : bars) {
    sizes.push_back(floor + (b - prev));
    prev = b + 1;
  }
  sizes.push_back(floor + (extra + colors - 1 - prev));
  return sizes;
}

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names{"random_general_position", "rings", "tightness", "convex_position"};
  return names;
}

io::Instance generate(const GenParams& params) {
  check_basic(params);
  if (params.family == "random_general_position") return random_family(params);
  if (params.family == "rings") return rings_family(params);
  if (params.family == "tightness") return tightness_family(params);
  if (params.family == "convex_position") return convex_family(params);
  throw PreconditionError("unknown family \"" + params.family + "\"");
}

}  // namespace islands::gen
