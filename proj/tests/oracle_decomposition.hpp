#pragma once

// Float brute-force decomposition of the unit sphere under Z^n translations,
// independent of the exact boundary module.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace cfrac::oracle {

using Vec = std::vector<double>;

struct Piece {
  Vec center;
  double radius = 0;      // 0 for a point
  std::vector<Vec> dirs;  // orthonormal hull directions
  int dimension() const { return radius == 0 ? 0 : static_cast<int>(dirs.size()) - 1; }
};

inline double dot(const Vec& a, const Vec& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

constexpr double kTol = 1e-9;

inline std::string rounded(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.7f", std::fabs(x) < 5e-8 ? 0.0 : x);
  return buf;
}

// Center, radius and hull projector rounded to 1e-7.
inline std::string key(const Piece& p) {
  std::string k = rounded(p.radius) + "|";
  for (double c : p.center) k += rounded(c) + ",";
  const std::size_t n = p.center.size();
  for (std::size_t i = 0; i < n && p.radius > 0; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0;
      for (const auto& d : p.dirs) s += d[i] * d[j];
      k += rounded(s) + ",";
    }
  return k;
}

// A ∩ B, or nullopt when empty.  `same` reports B = A.
inline std::optional<Piece> intersect(const Piece& A, const Piece& B, bool& same) {
  same = key(A) == key(B);
  if (same) return std::nullopt;
  const std::size_t n = A.center.size(), k = A.dirs.size();
  Vec d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = A.center[i] - B.center[i];
  // Constraints on t with x = cA + VA t, |t| = rA.
  std::vector<Vec> rows;
  Vec rhs;
  // x in the hull of B: (I - P_B)(x - cB) = 0.
  for (std::size_t e = 0; e < n; ++e) {
    Vec unit(n, 0.0);
    unit[e] = 1;
    for (const auto& b : B.dirs) {
      double c = dot(unit, b);
      for (std::size_t i = 0; i < n; ++i) unit[i] -= c * b[i];
    }
    Vec row(k);
    for (std::size_t j = 0; j < k; ++j) row[j] = dot(unit, A.dirs[j]);
    rows.push_back(row);
    rhs.push_back(-dot(unit, d));
  }
  // |x - cB|^2 = rB^2 with |t|^2 = rA^2.
  {
    Vec row(k);
    for (std::size_t j = 0; j < k; ++j) row[j] = 2 * dot(d, A.dirs[j]);
    rows.push_back(row);
    rhs.push_back(B.radius * B.radius - A.radius * A.radius - dot(d, d));
  }
  std::vector<Vec> q;
  Vec qb;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    Vec m = rows[r];
    double b = rhs[r];
    for (std::size_t s = 0; s < q.size(); ++s) {
      double c = dot(m, q[s]);
      for (std::size_t j = 0; j < k; ++j) m[j] -= c * q[s][j];
      b -= c * qb[s];
    }
    double len = std::sqrt(dot(m, m));
    if (len < 1e-10) {
      if (std::fabs(b) > 1e-9) return std::nullopt;
      continue;
    }
    for (auto& x : m) x /= len;
    q.push_back(m);
    qb.push_back(b / len);
  }
  Vec t0(k, 0.0);
  for (std::size_t s = 0; s < q.size(); ++s)
    for (std::size_t j = 0; j < k; ++j) t0[j] += qb[s] * q[s][j];
  std::vector<Vec> null;
  for (std::size_t e = 0; e < k; ++e) {
    Vec v(k, 0.0);
    v[e] = 1;
    for (const auto& w : q) {
      double c = dot(v, w);
      for (std::size_t j = 0; j < k; ++j) v[j] -= c * w[j];
    }
    for (const auto& w : null) {
      double c = dot(v, w);
      for (std::size_t j = 0; j < k; ++j) v[j] -= c * w[j];
    }
    double len = std::sqrt(dot(v, v));
    if (len < 1e-8) continue;
    for (auto& x : v) x /= len;
    null.push_back(v);
  }
  const double rho2 = A.radius * A.radius - dot(t0, t0);
  if (rho2 < -kTol) return std::nullopt;
  Piece out;
  out.center = A.center;
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < n; ++i) out.center[i] += t0[j] * A.dirs[j][i];
  if (rho2 <= kTol) return out;
  if (null.empty()) return std::nullopt;
  out.radius = std::sqrt(rho2);
  for (const auto& v : null) {
    Vec w(n, 0.0);
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < n; ++i) w[i] += v[j] * A.dirs[j][i];
    out.dirs.push_back(w);
  }
  return out;
}

inline std::vector<Vec> gammas(std::size_t n, double radius) {
  std::vector<Vec> out;
  const long b = static_cast<long>(std::ceil(radius));
  std::vector<long> c(n, -b);
  while (true) {
    Vec g(c.begin(), c.end());
    if (dot(g, g) <= radius * radius + 1e-9) out.push_back(g);
    std::size_t i = 0;
    while (i < n && c[i] == b) c[i++] = -b;
    if (i == n) break;
    ++c[i];
  }
  return out;
}

// levels[0] = unit sphere, levels[j] = nontrivial S_{j-1}^k ∩ gamma S_{j-1}^{k'}.
inline std::vector<std::vector<Piece>> decomposition(std::size_t n, std::size_t max_level) {
  Piece unit;
  unit.center = Vec(n, 0.0);
  unit.radius = 1;
  for (std::size_t e = 0; e < n; ++e) {
    Vec v(n, 0.0);
    v[e] = 1;
    unit.dirs.push_back(v);
  }
  std::vector<std::vector<Piece>> levels{{unit}};
  const auto gs = gammas(n, 2.0);
  for (std::size_t j = 1; j <= max_level; ++j) {
    std::map<std::string, Piece> next;
    for (const auto& A : levels.back())
      for (const auto& B : levels.back())
        for (const auto& g : gs) {
          Piece Bg = B;
          for (std::size_t i = 0; i < n; ++i) Bg.center[i] += g[i];
          Vec d(n);
          for (std::size_t i = 0; i < n; ++i) d[i] = A.center[i] - Bg.center[i];
          if (std::sqrt(dot(d, d)) > A.radius + B.radius + 1e-9) continue;
          bool same = false;
          auto r = intersect(A, Bg, same);
          if (r) next.emplace(key(*r), *r);
        }
    std::vector<Piece> level;
    for (auto& [k, p] : next) level.push_back(p);
    levels.push_back(level);
    if (level.empty()) break;
  }
  return levels;
}

inline std::vector<Vec> points(const std::vector<Piece>& level) {
  std::map<std::string, Vec> pts;
  auto add = [&](const Vec& x) {
    std::string k;
    for (double c : x) k += rounded(c) + ",";
    pts.emplace(k, x);
  };
  for (const auto& p : level) {
    if (p.radius == 0) {
      add(p.center);
    } else if (p.dimension() == 0) {
      Vec a = p.center, b = p.center;
      for (std::size_t i = 0; i < a.size(); ++i) a[i] += p.radius * p.dirs[0][i], b[i] -= p.radius * p.dirs[0][i];
      add(a);
      add(b);
    }
  }
  std::vector<Vec> out;
  for (auto& [k, v] : pts) out.push_back(v);
  return out;
}

struct OracleCensus {
  std::size_t points = 0;
  std::map<int, std::size_t> spheres_by_dim;
  std::map<std::string, std::size_t> radius_sq;  // rounded radius^2
  std::size_t distinct_points = 0;
};

inline OracleCensus census(const std::vector<Piece>& level) {
  OracleCensus c;
  for (const auto& p : level) {
    if (p.radius == 0) {
      ++c.points;
      continue;
    }
    ++c.spheres_by_dim[p.dimension()];
    ++c.radius_sq[rounded(p.radius * p.radius)];
  }
  c.distinct_points = points(level).size();
  return c;
}

}  // namespace cfrac::oracle
