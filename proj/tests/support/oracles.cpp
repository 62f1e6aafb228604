#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lober/intersect.hpp"

namespace lober::testing {

std::optional<BruteHit> parametric_solve(const Segment& s1, const Segment& s2) {
  using ld = long double;
  const ld ax = s1.a.x, ay = s1.a.y, bx = s1.b.x, by = s1.b.y;
  const ld cx = s2.a.x, cy = s2.a.y, dx = s2.b.x, dy = s2.b.y;
  const ld ux = bx - ax, uy = by - ay, vx = dx - cx, vy = dy - cy;
  const ld det = ux * (-vy) - uy * (-vx);
  if (det == 0) return std::nullopt;
  const ld rx = cx - ax, ry = cy - ay;
  const ld t1 = (rx * (-vy) - ry * (-vx)) / det;
  const ld t2 = (ux * ry - uy * rx) / det;
  if (t1 < 0 || t1 > 1 || t2 < 0 || t2 > 1) return std::nullopt;
  BruteHit hit;
  hit.t1 = static_cast<double>(t1);
  hit.t2 = static_cast<double>(t2);
  hit.point = {static_cast<double>(ax + t1 * ux), static_cast<double>(ay + t1 * uy)};
  return hit;
}

std::vector<BruteHit> brute_force_intersections(const ClosedCurve& c1, const ClosedCurve& c2) {
  std::vector<BruteHit> hits;
  for (std::size_t i = 0; i < c1.size(); ++i) {
    for (std::size_t j = 0; j < c2.size(); ++j) {
      if (auto h = parametric_solve(c1.segment(i), c2.segment(j))) {
        if (h->t1 >= 1.0 || h->t2 >= 1.0) continue;
        h->seg1 = i;
        h->seg2 = j;
        hits.push_back(*h);
      }
    }
  }
  return hits;
}

double two_atan_increment(Point2 a, Point2 b, Point2 p0) {
  const Point2 u = a - p0;
  const Point2 v = b - a;
  const double c = cross(u, v);
  if (c == 0.0) return 0.0;
  return std::atan((dot(v, v) + dot(u, v)) / c) - std::atan(dot(u, v) / c);
}

double two_atan_winding(const ClosedCurve& curve, Point2 p0) {
  double j = 0.0;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const Segment s = curve.segment(i);
    j += two_atan_increment(s.a, s.b, p0);
  }
  return j;
}

bool ray_parity_inside(const ClosedCurve& curve, Point2 p) {
  bool in = false;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const Segment s = curve.segment(i);
    if ((s.a.y > p.y) != (s.b.y > p.y)) {
      const double x = s.a.x + (p.y - s.a.y) / (s.b.y - s.a.y) * (s.b.x - s.a.x);
      if (x > p.x) in = !in;
    }
  }
  return in;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

ClosedCurve random_star(std::mt19937_64& rng, Point2 center, double r, std::size_t n,
                        double roughness) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  std::vector<double> angles(n);
  for (std::size_t k = 0; k < n; ++k) {
    angles[k] = two_pi * (static_cast<double>(k) + uniform(rng, 0.1, 0.9)) / static_cast<double>(n);
  }
  const int harmonics = 4;
  std::vector<double> amp(harmonics), phase(harmonics);
  for (int h = 0; h < harmonics; ++h) {
    amp[h] = uniform(rng, -1.0, 1.0) * roughness / (h + 1);
    phase[h] = uniform(rng, 0.0, two_pi);
  }
  std::vector<Point2> pts(n);
  for (std::size_t k = 0; k < n; ++k) {
    double rad = 1.0;
    for (int h = 0; h < harmonics; ++h) rad += amp[h] * std::cos((h + 2) * angles[k] + phase[h]);
    rad = r * std::max(rad, 0.3);
    pts[k] = {center.x + rad * std::cos(angles[k]), center.y + rad * std::sin(angles[k])};
  }
  return ClosedCurve(std::move(pts));
}

std::pair<ClosedCurve, ClosedCurve> random_transverse_pair(std::uint64_t seed, std::size_t n) {
  std::mt19937_64 rng(seed);
  for (;;) {
    const double r1 = uniform(rng, 0.6, 1.4);
    const double r2 = uniform(rng, 0.6, 1.4);
    const double ang = uniform(rng, 0.0, 2.0 * std::numbers::pi);
    const double d = uniform(rng, 0.3, 0.9) * (r1 + r2) * 0.6;
    ClosedCurve a = random_star(rng, {0.0, 0.0}, r1, n);
    ClosedCurve b = random_star(rng, {d * std::cos(ang), d * std::sin(ang)}, r2, n);
    if (uniform(rng, 0.0, 1.0) < 0.5) b = reverse(b);
    if (find_intersections(a, b, DetectionMode::tolerant).size() >= 2) return {a, b};
  }
}

ClosedCurve random_polygon(std::mt19937_64& rng, std::size_t n) {
  const Point2 c{uniform(rng, -100.0, 100.0), uniform(rng, -100.0, 100.0)};
  ClosedCurve star = random_star(rng, c, uniform(rng, 1e-3, 1e3), n, 0.5);
  return uniform(rng, 0.0, 1.0) < 0.5 ? reverse(star) : star;
}

}  // namespace lober::testing
