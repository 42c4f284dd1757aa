#pragma once

// Random inputs and brute-force reference solutions shared by the tests.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "noregret/linalg.hpp"
#include "noregret/rng.hpp"

namespace support {

using noregret::SplitMix64;
using noregret::Vector;

inline Vector random_vector(SplitMix64& rng, std::size_t d, double lo, double hi) {
  Vector v(d);
  for (double& x : v) x = rng.uniform(lo, hi);
  return v;
}

/// Uniform point of the simplex via normalised exponential spacings.
inline Vector random_simplex_point(SplitMix64& rng, std::size_t d) {
  Vector v(d);
  double total = 0.0;
  for (double& x : v) {
    x = -std::log(1.0 - rng.uniform());
    total += x;
  }
  for (double& x : v) x /= total;
  return v;
}

/// Uniform point of the l2 ball by rejection from the cube.
inline Vector random_ball_point(SplitMix64& rng, std::size_t d, double radius) {
  for (;;) {
    Vector v = random_vector(rng, d, -radius, radius);
    if (noregret::squared_l2(v) <= radius * radius) return v;
  }
}

/// Calls fn(x) for every point of the simplex grid with spacing 1/steps
/// (d = 2 or 3).
template <class Fn>
void for_simplex_grid(std::size_t d, int steps, Fn&& fn) {
  const double h = 1.0 / steps;
  if (d == 2) {
    for (int i = 0; i <= steps; ++i) fn(Vector{i * h, 1.0 - i * h});
  } else {
    for (int i = 0; i <= steps; ++i) {
      for (int j = 0; i + j <= steps; ++j) fn(Vector{i * h, j * h, 1.0 - (i + j) * h});
    }
  }
}

/// Nearest simplex grid point to y in l2.
inline Vector grid_project_simplex(const Vector& y, int steps) {
  Vector best;
  double best_dist = std::numeric_limits<double>::infinity();
  for_simplex_grid(y.size(), steps, [&](const Vector& x) {
    const double dist = noregret::distance_l2(x, y);
    if (dist < best_dist) {
      best_dist = dist;
      best = x;
    }
  });
  return best;
}

/// Exact smallest enclosing circle of a small planar point set: the optimum
/// is fixed by two or three of the points, so try every such circle.
inline double brute_force_min_circle(const std::vector<Vector>& pts) {
  auto covers = [&](double cx, double cy, double r) {
    for (const auto& p : pts) {
      if (std::hypot(p[0] - cx, p[1] - cy) > r * (1.0 + 1e-12) + 1e-12) return false;
    }
    return true;
  };
  double best = std::numeric_limits<double>::infinity();
  const std::size_t n = pts.size();
  if (n == 1) return 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double cx = 0.5 * (pts[i][0] + pts[j][0]);
      const double cy = 0.5 * (pts[i][1] + pts[j][1]);
      const double r = 0.5 * std::hypot(pts[i][0] - pts[j][0], pts[i][1] - pts[j][1]);
      if (r < best && covers(cx, cy, r)) best = r;
      for (std::size_t k = j + 1; k < n; ++k) {
        const double ax = pts[i][0], ay = pts[i][1];
        const double bx = pts[j][0], by = pts[j][1];
        const double qx = pts[k][0], qy = pts[k][1];
        const double den = 2.0 * (ax * (by - qy) + bx * (qy - ay) + qx * (ay - by));
        if (std::abs(den) < 1e-14) continue;
        const double a2 = ax * ax + ay * ay, b2 = bx * bx + by * by, q2 = qx * qx + qy * qy;
        const double ux = (a2 * (by - qy) + b2 * (qy - ay) + q2 * (ay - by)) / den;
        const double uy = (a2 * (qx - bx) + b2 * (ax - qx) + q2 * (bx - ax)) / den;
        const double rr = std::hypot(ax - ux, ay - uy);
        if (rr < best && covers(ux, uy, rr)) best = rr;
      }
    }
  }
  return best;
}

/// Simpson-free reference for an integral: composite midpoint rule with
/// many panels.
template <class Fn>
double midpoint_integral(Fn&& f, double a, double b, int panels) {
  const double h = (b - a) / panels;
  double s = 0.0;
  for (int i = 0; i < panels; ++i) s += f(a + (i + 0.5) * h);
  return s * h;
}

}  // namespace support
