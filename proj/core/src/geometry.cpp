#include "lober/geometry.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "lober/errors.hpp"
#include "lober/summation.hpp"

namespace lober {

void BoundingBox::expand(Point2 p) {
  xmin = std::min(xmin, p.x);
  ymin = std::min(ymin, p.y);
  xmax = std::max(xmax, p.x);
  ymax = std::max(ymax, p.y);
}

void BoundingBox::expand(const BoundingBox& o) {
  xmin = std::min(xmin, o.xmin);
  ymin = std::min(ymin, o.ymin);
  xmax = std::max(xmax, o.xmax);
  ymax = std::max(ymax, o.ymax);
}

BoundingBox BoundingBox::empty() {
  constexpr double inf = std::numeric_limits<double>::infinity();
  return {inf, inf, -inf, -inf};
}

BoundingBox BoundingBox::of(std::span<const Point2> pts) {
  BoundingBox box = empty();
  for (const Point2& p : pts) box.expand(p);
  return box;
}

double contour_integral(std::span<const Point2> v) {
  const std::size_t n = v.size();
  return pairwise_sum(n, [&](std::size_t i) {
    const Point2 a = v[i];
    const Point2 b = v[i + 1 == n ? 0 : i + 1];
    return contour_term(a, b);
  });
}

ClosedCurve::ClosedCurve(std::vector<Point2> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!std::isfinite(vertices[i].x) || !std::isfinite(vertices[i].y)) {
      throw InvalidCurveError("vertex " + std::to_string(i) + " has a non-finite coordinate");
    }
  }
  if (vertices.size() < 3) {
    throw InvalidCurveError("a closed curve needs at least 3 vertices, got " +
                            std::to_string(vertices.size()));
  }

  const double tol = kDedupRelTol * BoundingBox::of(vertices).diagonal();
  vertices_.reserve(vertices.size());
  for (const Point2& p : vertices) {
    if (!vertices_.empty() && distance(vertices_.back(), p) <= tol) continue;
    vertices_.push_back(p);
  }
  while (vertices_.size() > 1 && distance(vertices_.back(), vertices_.front()) <= tol) {
    vertices_.pop_back();
  }
  if (vertices_.size() < 3) {
    throw InvalidCurveError("a closed curve needs at least 3 distinct vertices, got " +
                            std::to_string(vertices_.size()));
  }

  bbox_ = BoundingBox::of(vertices_);
  contour_integral_ = lober::contour_integral(std::span<const Point2>(vertices_));
  if (contour_integral_ == 0.0) throw DegenerateError("curve encloses zero signed area");
  // y dx - x dy is negative for counter-clockwise traversal.
  orientation_ = contour_integral_ < 0.0 ? Orientation::ccw : Orientation::cw;
}

double contour_integral(const ClosedCurve& curve) { return curve.contour_integral(); }

double enclosed_area(const ClosedCurve& curve) { return std::abs(curve.contour_integral()); }

Orientation orientation(const ClosedCurve& curve) { return curve.orientation(); }

ClosedCurve reverse(const ClosedCurve& curve) {
  std::vector<Point2> v(curve.vertices().rbegin(), curve.vertices().rend());
  return ClosedCurve(std::move(v));
}

ClosedCurve with_orientation(const ClosedCurve& curve, Orientation o) {
  return curve.orientation() == o ? curve : reverse(curve);
}

Point2 tangent_at(const ClosedCurve& curve, std::size_t segment_index) {
  if (segment_index >= curve.size()) {
    throw InvalidCurveError("segment index " + std::to_string(segment_index) + " out of range");
  }
  const Point2 d = curve.segment(segment_index).direction();
  const double len = norm(d);
  if (len == 0.0) throw DegenerateError("zero-length segment " + std::to_string(segment_index));
  return {d.x / len, d.y / len};
}

double point_segment_distance(Point2 p, const Segment& s) {
  const Point2 d = s.direction();
  const double len2 = dot(d, d);
  double t = len2 > 0.0 ? dot(p - s.a, d) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return distance(p, s.at(t));
}

}  // namespace lober
