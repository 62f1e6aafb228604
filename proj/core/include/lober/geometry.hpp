#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace lober {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
  friend constexpr bool operator==(Point2 a, Point2 b) = default;
};

constexpr double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }

/// z-component of the 3-D cross product of (a, 0) and (b, 0).
constexpr double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }

inline double norm(Point2 a) { return std::hypot(a.x, a.y); }

inline double distance(Point2 a, Point2 b) { return norm(b - a); }

/// Point at parameter t of the segment a -> b.
constexpr Point2 lerp(Point2 a, Point2 b, double t) {
  return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}

struct Segment {
  Point2 a;
  Point2 b;

  Point2 direction() const { return b - a; }
  double length() const { return distance(a, b); }
  Point2 at(double t) const { return lerp(a, b, t); }
};

struct BoundingBox {
  double xmin = 0.0;
  double ymin = 0.0;
  double xmax = 0.0;
  double ymax = 0.0;

  double diagonal() const { return std::hypot(xmax - xmin, ymax - ymin); }
  double area() const { return (xmax - xmin) * (ymax - ymin); }
  bool contains(Point2 p, double pad = 0.0) const {
    return p.x >= xmin - pad && p.x <= xmax + pad && p.y >= ymin - pad && p.y <= ymax + pad;
  }
  void expand(Point2 p);
  void expand(const BoundingBox& o);

  static BoundingBox of(std::span<const Point2> pts);
  static BoundingBox empty();
};

enum class Orientation { ccw, cw };

inline Orientation opposite(Orientation o) {
  return o == Orientation::ccw ? Orientation::cw : Orientation::ccw;
}

/// Implicitly closed polyline: the last vertex connects back to the first.
/// Immutable once built; the constructor drops a repeated closing vertex and
/// consecutive duplicates, then rejects curves with fewer than three vertices,
/// non-finite coordinates or zero signed area.
class ClosedCurve {
 public:
  explicit ClosedCurve(std::vector<Point2> vertices);

  std::span<const Point2> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Point2& operator[](std::size_t i) const { return vertices_[i]; }

  /// Vertex index following i, wrapping N-1 -> 0.
  std::size_t next(std::size_t i) const { return i + 1 == vertices_.size() ? 0 : i + 1; }
  std::size_t prev(std::size_t i) const { return i == 0 ? vertices_.size() - 1 : i - 1; }

  /// Segment i runs from vertex i to vertex i+1 (mod N).
  Segment segment(std::size_t i) const { return {vertices_[i], vertices_[next(i)]}; }

  Orientation orientation() const { return orientation_; }
  bool is_ccw() const { return orientation_ == Orientation::ccw; }

  /// Cached value of contour_integral(*this).
  double contour_integral() const { return contour_integral_; }
  const BoundingBox& bbox() const { return bbox_; }

 private:
  std::vector<Point2> vertices_;
  double contour_integral_ = 0.0;
  Orientation orientation_ = Orientation::ccw;
  BoundingBox bbox_;
};

/// Relative tolerance used to drop duplicate consecutive vertices.
inline constexpr double kDedupRelTol = 1e-12;

/// 1/2 * sum_i (y_i x_{i+1} - x_i y_{i+1}): the y dx - x dy form, which is
/// negative for counter-clockwise curves.
double contour_integral(const ClosedCurve& curve);

/// Same sum over a raw vertex list (wrapping), without validation.
double contour_integral(std::span<const Point2> vertices);

/// |contour_integral|, strictly positive.
double enclosed_area(const ClosedCurve& curve);

Orientation orientation(const ClosedCurve& curve);

ClosedCurve reverse(const ClosedCurve& curve);

/// Returns the curve unchanged if it already has orientation `o`, else reversed.
ClosedCurve with_orientation(const ClosedCurve& curve, Orientation o);

/// Unit tangent of segment `segment_index` in stored traversal direction.
Point2 tangent_at(const ClosedCurve& curve, std::size_t segment_index);

/// Contour term 1/2 (y_a x_b - x_a y_b) of the straight piece a -> b.
constexpr double contour_term(Point2 a, Point2 b) { return 0.5 * (a.y * b.x - a.x * b.y); }

/// Distance from p to the segment.
double point_segment_distance(Point2 p, const Segment& s);

}  // namespace lober
