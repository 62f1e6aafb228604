#include "lober/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "lober/errors.hpp"
#include "lober/parallel.hpp"

namespace lober::fixtures {
namespace {

constexpr double kPi = std::numbers::pi;

void require_polygon(std::size_t n) {
  if (n < 3) throw InvalidCurveError("a fixture polygon needs n >= 3");
}

template <typename Fn>
void for_each_index(std::size_t n, Fn&& fn) {
  parallel::for_each_chunk(parallel::chunk_count(n), [&](std::size_t c) {
    const std::size_t end = std::min(n, (c + 1) * parallel::kChunk);
    for (std::size_t i = c * parallel::kChunk; i < end; ++i) fn(i);
  });
}

State4 axpy(const State4& s, double h, const State4& k) {
  return {s[0] + h * k[0], s[1] + h * k[1], s[2] + h * k[2], s[3] + h * k[3]};
}

}  // namespace

ClosedCurve circle(Point2 center, double r, std::size_t n) {
  return ellipse(center, r, r, 0.0, n);
}

ClosedCurve ellipse(Point2 center, double a, double b, double phase, std::size_t n) {
  require_polygon(n);
  if (!(a > 0.0) || !(b > 0.0)) throw InvalidCurveError("ellipse axes must be positive");
  const double c = std::cos(phase);
  const double s = std::sin(phase);
  std::vector<Point2> pts(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double th = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n);
    const double u = a * std::cos(th);
    const double v = b * std::sin(th);
    pts[k] = {center.x + c * u - s * v, center.y + s * u + c * v};
  }
  return ClosedCurve(std::move(pts));
}

ClosedCurve rectangle(double xmin, double ymin, double xmax, double ymax) {
  return ClosedCurve({{xmin, ymin}, {xmax, ymin}, {xmax, ymax}, {xmin, ymax}});
}

Point2 ovp_velocity(double x, double y, double t, double gamma, double epsilon) {
  const double im = x * x + (y - 1.0) * (y - 1.0);
  const double ip = x * x + (y + 1.0) * (y + 1.0);
  constexpr double core2 = kVortexCoreRadius * kVortexCoreRadius;
  if (im < core2 || ip < core2) {
    throw SingularityError("vortex pair field evaluated at a vortex centre (" +
                           std::to_string(x) + ", " + std::to_string(y) + ")");
  }
  const double im2 = im * im;
  const double ip2 = ip * ip;
  const double f1 = -(y - 1.0) / im + (y + 1.0) / ip - 0.5;
  const double f2 = x / im - x / ip;
  if (epsilon == 0.0) return {f1, f2};

  const double c = std::cos(t / gamma) - 1.0;
  const double s = std::sin(t / gamma);
  const double g2sq = gamma * gamma;
  const double g1 =
      c * (1.0 / im + 1.0 / ip - 2.0 * (y - 1.0) * (y - 1.0) / im2 -
           2.0 * (y + 1.0) * (y + 1.0) / ip2) +
      (x / gamma) * s * (g2sq * ((y - 1.0) / im2 - (y + 1.0) / ip2) + 1.0) - 0.5;
  const double g2 =
      2.0 * x * c * ((y - 1.0) / im2 + (y + 1.0) / ip2) +
      (1.0 / gamma) * s *
          (0.5 * g2sq * (1.0 / im - 1.0 / ip) - x * x * g2sq * (1.0 / im2 - 1.0 / ip2) - y);
  return {f1 + epsilon * g1, f2 - epsilon * g2};
}

PlanarField ovp_field(double gamma, double epsilon) {
  return [gamma, epsilon](Point2 p, double t) { return ovp_velocity(p.x, p.y, t, gamma, epsilon); };
}

double ovp_period(double gamma) { return 2.0 * kPi * gamma; }

State4 capsize_field(const State4& s, double r) {
  const auto [x, y, vx, vy] = s;
  return {vx, vy, -x + 2.0 * x * y, -r * r * y + 0.5 * r * r * x * x};
}

double capsize_energy(const State4& s, double r) {
  const auto [x, y, vx, vy] = s;
  return 0.5 * vx * vx + vy * vy / (r * r) + 0.5 * x * x + y * y - x * x * y;
}

State4 integrate_capsize(State4 s, double r, double dt, std::size_t steps) {
  for (std::size_t k = 0; k < steps; ++k) {
    const State4 k1 = capsize_field(s, r);
    const State4 k2 = capsize_field(axpy(s, 0.5 * dt, k1), r);
    const State4 k3 = capsize_field(axpy(s, 0.5 * dt, k2), r);
    const State4 k4 = capsize_field(axpy(s, dt, k3), r);
    for (int i = 0; i < 4; ++i) s[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }
  return s;
}

std::vector<Point2> advect_points(std::vector<Point2> points, const PlanarField& field,
                                  double t0, double t1, std::size_t steps) {
  if (steps == 0) return points;
  const double dt = (t1 - t0) / static_cast<double>(steps);
  for_each_index(points.size(), [&](std::size_t i) {
    Point2 p = points[i];
    for (std::size_t k = 0; k < steps; ++k) {
      const double t = t0 + static_cast<double>(k) * dt;
      const Point2 k1 = field(p, t);
      const Point2 k2 = field(p + 0.5 * dt * k1, t + 0.5 * dt);
      const Point2 k3 = field(p + 0.5 * dt * k2, t + 0.5 * dt);
      const Point2 k4 = field(p + dt * k3, t + dt);
      p = p + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    points[i] = p;
  });
  return points;
}

ClosedCurve advect_curve(const ClosedCurve& curve, const PlanarField& field, double t0,
                         double t1, std::size_t steps) {
  std::vector<Point2> pts(curve.vertices().begin(), curve.vertices().end());
  return ClosedCurve(advect_points(std::move(pts), field, t0, t1, steps));
}

ClosedCurve ovp_advected_circle(Point2 center, double r, std::size_t n, double gamma,
                                double epsilon, double periods, std::size_t steps_per_period) {
  const double t1 = periods * ovp_period(gamma);
  const auto steps =
      static_cast<std::size_t>(std::llround(periods * static_cast<double>(steps_per_period)));
  return advect_curve(circle(center, r, n), ovp_field(gamma, epsilon), 0.0, t1, steps);
}

ClosedCurve capsize_section_curve(Point2 center, double r, std::size_t n, double x0, double ratio,
                                  double t, double dt) {
  const ClosedCurve start = circle(center, r, n);
  const auto steps = static_cast<std::size_t>(std::llround(t / dt));
  std::vector<Point2> pts(n);
  for_each_index(n, [&](std::size_t i) {
    const State4 s = integrate_capsize({x0, start[i].x, 0.0, start[i].y}, ratio, dt, steps);
    pts[i] = {s[1], s[3]};
  });
  return ClosedCurve(std::move(pts));
}

RayCaster::RayCaster(const ClosedCurve& curve)
    : vertices_(curve.vertices().begin(), curve.vertices().end()) {
  const BoundingBox& box = curve.bbox();
  const std::size_t n = vertices_.size();
  const std::size_t count = std::max<std::size_t>(1, n / 4);
  ymin_ = box.ymin;
  slab_height_ = (box.ymax - box.ymin) / static_cast<double>(count);
  if (!(slab_height_ > 0.0)) slab_height_ = 1.0;
  slabs_.resize(count);
  auto slab_of = [&](double y) {
    const double f = std::floor((y - ymin_) / slab_height_);
    return static_cast<std::size_t>(std::clamp(f, 0.0, static_cast<double>(count - 1)));
  };
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = vertices_[i];
    const Point2 b = vertices_[(i + 1) % n];
    const std::size_t lo = slab_of(std::min(a.y, b.y));
    const std::size_t hi = slab_of(std::max(a.y, b.y));
    for (std::size_t s = lo; s <= hi; ++s) slabs_[s].push_back(static_cast<std::uint32_t>(i));
  }
}

bool RayCaster::inside(Point2 p) const {
  const double f = std::floor((p.y - ymin_) / slab_height_);
  if (f < 0.0 || f >= static_cast<double>(slabs_.size())) return false;
  const std::size_t n = vertices_.size();
  bool in = false;
  for (std::uint32_t i : slabs_[static_cast<std::size_t>(f)]) {
    const Point2 a = vertices_[i];
    const Point2 b = vertices_[(i + 1) % n];
    if ((a.y > p.y) == (b.y > p.y)) continue;
    const double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
    if (x > p.x) in = !in;
  }
  return in;
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + (stream + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double unit_interval(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

OracleEstimate montecarlo_diff_area(const ClosedCurve& c1, const ClosedCurve& c2,
                                    std::size_t n_samples, std::uint64_t seed) {
  BoundingBox box = c1.bbox();
  box.expand(c2.bbox());
  const RayCaster in1(c1);
  const RayCaster in2(c2);
  const std::size_t chunks = parallel::chunk_count(n_samples);
  std::vector<std::size_t> hits(chunks, 0);
  parallel::for_each_chunk(chunks, [&](std::size_t c) {
    std::mt19937_64 rng(stream_seed(seed, c));
    const std::size_t count = std::min(parallel::kChunk, n_samples - c * parallel::kChunk);
    std::size_t h = 0;
    for (std::size_t k = 0; k < count; ++k) {
      const double u = unit_interval(rng());
      const double v = unit_interval(rng());
      const Point2 p{box.xmin + u * (box.xmax - box.xmin), box.ymin + v * (box.ymax - box.ymin)};
      if (in1.inside(p) && !in2.inside(p)) ++h;
    }
    hits[c] = h;
  });
  std::size_t total = 0;
  for (std::size_t h : hits) total += h;
  const double n = static_cast<double>(n_samples);
  const double frac = static_cast<double>(total) / n;
  return {box.area() * frac, box.area() * std::sqrt(frac * (1.0 - frac) / n), n_samples, seed};
}

double lens_area(double r1, double r2, double d) {
  if (!(r1 > 0.0) || !(r2 > 0.0)) throw DegenerateError("lens radii must be positive");
  if (d > r1 + r2) throw DegenerateError("discs do not overlap");
  if (d < std::abs(r1 - r2)) throw DegenerateError("one disc contains the other");
  if (d == 0.0) return kPi * std::min(r1, r2) * std::min(r1, r2);
  const double c1 = std::clamp((d * d + r1 * r1 - r2 * r2) / (2.0 * d * r1), -1.0, 1.0);
  const double c2 = std::clamp((d * d + r2 * r2 - r1 * r1) / (2.0 * d * r2), -1.0, 1.0);
  const double k = std::max(0.0, (-d + r1 + r2) * (d + r1 - r2) * (d - r1 + r2) * (d + r1 + r2));
  return r1 * r1 * std::acos(c1) + r2 * r2 * std::acos(c2) - 0.5 * std::sqrt(k);
}

}  // namespace lober::fixtures
