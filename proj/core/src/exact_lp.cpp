#include "islands/exact_lp.hpp"

#include "islands/errors.hpp"

namespace islands {

bool lp_feasible(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b) {
  const std::size_t m = a.size();
  if (b.size() != m) throw PreconditionError("lp_feasible: row count mismatch");
  const std::size_t n = m == 0 ? 0 : a.front().size();
  for (const auto& row : a) {
    if (row.size() != n) throw PreconditionError("lp_feasible: ragged constraint matrix");
  }
  if (m == 0) return true;

  // Tableau columns: n structural, m artificial, then rhs.
  const std::size_t cols = n + m + 1;
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(cols));
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) {
    const bool flip = sgn(b[r]) < 0;
    for (std::size_t c = 0; c < n; ++c) t[r][c] = flip ? Rational(-a[r][c]) : a[r][c];
    t[r][n + r] = 1;
    t[r][cols - 1] = flip ? Rational(-b[r]) : b[r];
    basis[r] = n + r;
  }
  // Reduced costs of "minimise sum of artificials".
  std::vector<Rational> cost(cols);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) cost[c] -= t[r][c];
    cost[cols - 1] -= t[r][cols - 1];
  }

  while (true) {
    std::size_t enter = cols;
    for (std::size_t c = 0; c + 1 < cols; ++c) {
      if (sgn(cost[c]) < 0) {
        enter = c;
        break;
      }
    }
    if (enter == cols) break;

    std::size_t leave = m;
    Rational best;
    for (std::size_t r = 0; r < m; ++r) {
      if (sgn(t[r][enter]) <= 0) continue;
      Rational ratio = t[r][cols - 1] / t[r][enter];
      if (leave == m || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = std::move(ratio);
      }
    }
    // Phase one is bounded below by zero, so an entering column always has a
    // positive entry somewhere.
    if (leave == m) throw InvariantError("lp_feasible: unbounded phase-one problem");

    const Rational pivot = t[leave][enter];
    for (auto& v : t[leave]) v /= pivot;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == leave || sgn(t[r][enter]) == 0) continue;
      const Rational f = t[r][enter];
      for (std::size_t c = 0; c < cols; ++c) t[r][c] -= f * t[leave][c];
    }
    if (sgn(cost[enter]) != 0) {
      const Rational f = cost[enter];
      for (std::size_t c = 0; c < cols; ++c) cost[c] -= f * t[leave][c];
    }
    basis[leave] = enter;
  }
  return sgn(cost[cols - 1]) == 0;
}

bool in_convex_hull_lp(const Coords& x, const std::vector<Coords>& points) {
  if (points.empty()) return false;
  const std::size_t d = x.size();
  std::vector<std::vector<Rational>> a(d + 1, std::vector<Rational>(points.size()));
  std::vector<Rational> b(d + 1);
  for (std::size_t j = 0; j < points.size(); ++j) {
    for (std::size_t k = 0; k < d; ++k) a[k][j] = points[j][k];
    a[d][j] = 1;
  }
  for (std::size_t k = 0; k < d; ++k) b[k] = x[k];
  b[d] = 1;
  return lp_feasible(a, b);
}

bool hulls_intersect_lp(const std::vector<Coords>& p, const std::vector<Coords>& q) {
  if (p.empty() || q.empty()) return false;
  const std::size_t d = p.front().size();
  // sum(l_i p_i) - sum(m_j q_j) = 0, sum l = 1, sum m = 1, l, m >= 0.
  const std::size_t n = p.size() + q.size();
  std::vector<std::vector<Rational>> a(d + 2, std::vector<Rational>(n));
  std::vector<Rational> b(d + 2);
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t k = 0; k < d; ++k) a[k][i] = p[i][k];
    a[d][i] = 1;
  }
  for (std::size_t j = 0; j < q.size(); ++j) {
    for (std::size_t k = 0; k < d; ++k) a[k][p.size() + j] = -q[j][k];
    a[d + 1][p.size() + j] = 1;
  }
  b[d] = 1;
  b[d + 1] = 1;
  return lp_feasible(a, b);
}

}  // namespace islands
