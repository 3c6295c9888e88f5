#include "islands/hall.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace islands::hall {

namespace {

void check_profile(const ColorProfile& p) {
  const auto m = static_cast<int>(p.sizes.size());
  if (p.d < 2) throw PreconditionError("d must be at least 2");
  if (p.k < p.d) throw PreconditionError("k = " + std::to_string(p.k) + " is smaller than d = " + std::to_string(p.d));
  if (m < p.d) throw PreconditionError("m = " + std::to_string(m) + " is smaller than d = " + std::to_string(p.d));
  if (p.n < 1) throw PreconditionError("n must be positive");
  const std::size_t total = std::accumulate(p.sizes.begin(), p.sizes.end(), std::size_t{0});
  if (total != static_cast<std::size_t>(p.k) * static_cast<std::size_t>(p.n)) {
    throw PreconditionError("class sizes sum to " + std::to_string(total) + ", expected kn = " +
                            std::to_string(p.k * p.n));
  }
}

std::vector<std::size_t> class_offsets(const std::vector<std::size_t>& sizes) {
  std::vector<std::size_t> offsets(sizes.size(), 0);
  for (std::size_t i = 1; i < sizes.size(); ++i) offsets[i] = offsets[i - 1] + sizes[i - 1];
  return offsets;
}

}  // namespace

std::vector<int> sorted_class_order(const std::vector<std::size_t>& sizes) {
  std::vector<int> order(sizes.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return sizes[a] > sizes[b]; });
  return order;
}

HallReport check_hall(const ColorProfile& profile) {
  check_profile(profile);
  const auto order = sorted_class_order(profile.sizes);
  HallReport report;
  report.feasible = true;
  long long prefix = 0;
  for (int t = 1; t <= profile.d - 1; ++t) {
    prefix += static_cast<long long>(profile.sizes[order[t - 1]]);
    const long long bound = static_cast<long long>(profile.k - profile.d + t) * profile.n;
    report.slack.push_back(bound - prefix);
    if (prefix > bound) report.feasible = false;
  }
  return report;
}

std::vector<Tuple> colorful_tuple_partition(const ColorProfile& profile) {
  const HallReport report = check_hall(profile);
  const auto order = sorted_class_order(profile.sizes);
  if (!report.feasible) {
    int t = 1;
    while (report.slack[t - 1] >= 0) ++t;
    std::vector<int> classes(order.begin(), order.begin() + t);
    throw HallViolation("Hall condition fails at t = " + std::to_string(t) + ": the " + std::to_string(t) +
                            " largest classes exceed (k-d+t)n = " +
                            std::to_string((profile.k - profile.d + t) * profile.n),
                        t, std::move(classes));
  }

  const auto n = static_cast<std::size_t>(profile.n);
  const auto d = static_cast<std::size_t>(profile.d);
  const auto offsets = class_offsets(profile.sizes);

  // Y_i: the first min(|X_i|, n) elements of each class, in sorted class order.
  std::vector<Element> y_prime;
  std::vector<Element> leftover;
  for (int c : order) {
    const std::size_t size = profile.sizes[c];
    const std::size_t take = std::min(size, n);
    for (std::size_t e = 0; e < size; ++e) {
      Element el{c, offsets[c] + e};
      if (e < take && y_prime.size() < d * n) {
        y_prime.push_back(el);
      } else {
        leftover.push_back(el);
      }
    }
  }
  // |Y| >= dn follows from the condition.
  if (y_prime.size() != d * n) throw InvariantError("grid construction: |Y| < dn on a feasible profile");

  std::vector<Tuple> tuples(n);
  for (std::size_t pos = 0; pos < y_prime.size(); ++pos) tuples[pos % n].push_back(y_prime[pos]);
  for (std::size_t q = 0; q < leftover.size(); ++q) tuples[q % n].push_back(leftover[q]);

  for (const auto& tuple : tuples) {
    if (tuple.size() != static_cast<std::size_t>(profile.k)) {
      throw InvariantError("grid construction produced a tuple of the wrong size");
    }
  }
  return tuples;
}

HallReport solve_hall(const ColorProfile& profile) {
  HallReport report = check_hall(profile);
  if (report.feasible) report.tuples = colorful_tuple_partition(profile);
  return report;
}

MergeResult merge_colors(const ColorProfile& profile) {
  const HallReport before = check_hall(profile);
  if (!before.feasible) throw PreconditionError("merge_colors: profile does not satisfy the Hall condition");
  const int m = static_cast<int>(profile.sizes.size());
  const int d = profile.d;
  const int k = profile.k;
  const bool merge_case = k >= d + 1 && m >= 2 * d - 1;
  const bool small_case = k == d && m >= 2 * d;
  if (!merge_case && !small_case) {
    throw PreconditionError("merge not guaranteed for k = " + std::to_string(k) + ", m = " + std::to_string(m) +
                            ", d = " + std::to_string(d) +
                            " (needs k >= d+1 and m >= 2d-1, or k = d and m >= 2d)");
  }
  const auto order = sorted_class_order(profile.sizes);
  const int x = order[m - 2];
  const int y = order[m - 1];
  const int keep = std::min(x, y);
  const int drop = std::max(x, y);

  MergeResult result;
  result.merged = {keep, drop};
  result.profile = profile;
  result.profile.sizes[keep] = profile.sizes[x] + profile.sizes[y];
  result.profile.sizes.erase(result.profile.sizes.begin() + drop);
  if (!check_hall(result.profile).feasible) {
    throw InvariantError("merging the two smallest classes broke the Hall condition");
  }
  return result;
}

ColorProfile tightness_family(int d, TightnessVariant variant, int n, int k) {
  if (d < 2) throw PreconditionError("d must be at least 2");
  if (n < 1) throw PreconditionError("n must be positive");
  ColorProfile p;
  p.d = d;
  p.n = n;
  if (variant == TightnessVariant::kKEqualsD) {
    const int m = 2 * d - 1;
    if (n % m != 0) throw PreconditionError("n must be a multiple of 2d-1 = " + std::to_string(m));
    p.k = d;
    p.sizes.assign(m, static_cast<std::size_t>(d * n / m));
  } else {
    const int q = 2 * d - 3;
    if (n % q != 0) throw PreconditionError("n must be a multiple of 2d-3 = " + std::to_string(q));
    if (k < d + 1) throw PreconditionError("variant k > d needs k >= d+1");
    p.k = k;
    p.sizes.push_back(static_cast<std::size_t>((k - d + 1) * n));
    p.sizes.insert(p.sizes.end(), q, static_cast<std::size_t>((d - 1) * n / q));
  }
  return p;
}

}  // namespace islands::hall
