#include "lober/densify.hpp"

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "lober/errors.hpp"
#include "lober/intersect.hpp"

namespace lober {
namespace {

/// Segments shorter than this times n_dens times the bounding-box diagonal
/// are left alone, so inserted vertices never collapse under deduplication.
constexpr double kMinSubsegmentRel = 1e-10;

struct Working {
  std::vector<Point2> points;
  /// origin[i]: input segment that current segment i descends from.
  std::vector<std::uint32_t> origin;
  std::size_t input_segments = 0;
};

Working start(const ClosedCurve& c) {
  Working w;
  w.points.assign(c.vertices().begin(), c.vertices().end());
  w.origin.resize(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) w.origin[i] = static_cast<std::uint32_t>(i);
  w.input_segments = c.size();
  return w;
}

void mark_window(std::vector<bool>& marks, std::size_t centre, int window) {
  const auto n = static_cast<std::int64_t>(marks.size());
  for (std::int64_t k = -window; k <= window; ++k) {
    marks[static_cast<std::size_t>(((static_cast<std::int64_t>(centre) + k) % n + n) % n)] = true;
  }
}

Point2 interpolate(const Working& w, std::size_t i, double p, Interpolation scheme) {
  const std::size_t n = w.points.size();
  const Point2 a = w.points[i];
  const Point2 b = w.points[(i + 1) % n];
  if (scheme == Interpolation::linear) return lerp(a, b, p);

  const Point2 before = w.points[(i + n - 1) % n];
  const Point2 after = w.points[(i + 2) % n];
  const double k0 = circumcircle_curvature(before, a, b);
  const double k1 = circumcircle_curvature(a, b, after);
  const Point2 chord = b - a;
  const double d = norm(chord);
  // eta(0) = eta(1) = 0 and eta''(0), eta''(1) reproduce the end curvatures.
  const double alpha = -d * (k0 / 3.0 + k1 / 6.0);
  const double beta = 0.5 * d * k0;
  const double gamma = d * (k1 - k0) / 6.0;
  const double eta = p * (alpha + p * (beta + p * gamma));
  const Point2 left{-chord.y, chord.x};
  return a + p * chord + eta * left;
}

Working refine(const Working& w, const std::vector<bool>& marks, const DensifyConfig& cfg,
               double min_length, int pass, const char* name) {
  const std::size_t n = w.points.size();
  const auto n_dens = static_cast<std::size_t>(cfg.n_dens);
  std::vector<bool> split(n, false);
  std::size_t total = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (!marks[w.origin[i]]) continue;
    if (distance(w.points[i], w.points[(i + 1) % n]) < min_length) continue;
    split[i] = true;
    total += n_dens - 1;
  }
  if (total > cfg.max_vertices) {
    throw ResourceError(std::string("densifier: ") + name + " would reach " +
                        std::to_string(total) + " vertices in pass " + std::to_string(pass) +
                        " (cap " + std::to_string(cfg.max_vertices) + ")");
  }

  Working out;
  out.input_segments = w.input_segments;
  out.points.reserve(total);
  out.origin.reserve(total);
  for (std::size_t i = 0; i < n; ++i) {
    out.points.push_back(w.points[i]);
    out.origin.push_back(w.origin[i]);
    if (!split[i]) continue;
    for (std::size_t k = 1; k < n_dens; ++k) {
      out.points.push_back(interpolate(w, i, static_cast<double>(k) / n_dens, cfg.interpolation));
      out.origin.push_back(w.origin[i]);
    }
  }
  return out;
}

}  // namespace

double circumcircle_curvature(Point2 prev, Point2 at, Point2 next) {
  const Point2 a1 = at - prev;
  const Point2 a2 = next - at;
  const double denom = norm(a1) * norm(a2) * norm(next - prev);
  if (denom == 0.0) return 0.0;
  return 2.0 * cross(a1, a2) / denom;
}

double precision_factor(const DensifyConfig& cfg) {
  return std::pow(static_cast<double>(cfg.n_dens), cfg.n_pass);
}

std::pair<ClosedCurve, ClosedCurve> densify(const ClosedCurve& c1, const ClosedCurve& c2,
                                            const DensifyConfig& cfg) {
  if (cfg.n_pass < 0 || cfg.n_dens < 1 || cfg.window < 0) {
    throw InvalidCurveError("densifier needs n_pass >= 0, n_dens >= 1, window >= 0");
  }
  if (cfg.n_pass == 0 || cfg.n_dens == 1) return {c1, c2};

  Working w1 = start(c1);
  Working w2 = start(c2);
  ClosedCurve cur1 = c1;
  ClosedCurve cur2 = c2;
  const double min1 = kMinSubsegmentRel * cfg.n_dens * c1.bbox().diagonal();
  const double min2 = kMinSubsegmentRel * cfg.n_dens * c2.bbox().diagonal();

  for (int pass = 1; pass <= cfg.n_pass; ++pass) {
    const IntersectionSet crossings = find_intersections(cur1, cur2, DetectionMode::tolerant);
    if (crossings.empty()) break;
    std::vector<bool> marks1(w1.input_segments, false);
    std::vector<bool> marks2(w2.input_segments, false);
    for (const IntersectionPoint& ip : crossings.points) {
      mark_window(marks1, w1.origin[ip.on_c1.segment], cfg.window);
      mark_window(marks2, w2.origin[ip.on_c2.segment], cfg.window);
    }
    w1 = refine(w1, marks1, cfg, min1, pass, "C1");
    w2 = refine(w2, marks2, cfg, min2, pass, "C2");
    cur1 = ClosedCurve(w1.points);
    cur2 = ClosedCurve(w2.points);
    if (cur1.size() != w1.points.size() || cur2.size() != w2.points.size()) {
      throw ResourceError("densifier produced coincident vertices in pass " +
                          std::to_string(pass));
    }
  }
  return {std::move(cur1), std::move(cur2)};
}

}  // namespace lober
