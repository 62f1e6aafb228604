#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lober/classes.hpp"
#include "lober/geometry.hpp"

namespace lober {

/// Points closer than this times the curve's bounding-box diagonal count as
/// on the boundary, where the interior indicator is undefined.
inline constexpr double kBoundaryRelTol = 1e-9;

/// Maximum number of bisections applied to a sub-segment whose midpoint sits
/// on the other curve before it is assigned the boundary indicator 0.
inline constexpr int kMaxBoundaryBisections = 8;

/// Exact angle subtended at p0 by the segment a -> b, in (-pi, pi).
///
/// The closed form is atan((|v|^2 + u.v) / (u x v)) - atan(u.v / (u x v)) with
/// u = a - p0, v = b - a. Combining the two arctangents into one two-argument
/// arctangent gives atan2(u x w, u . w) with w = b - p0, which has no branch
/// jump where u x v changes sign and returns 0 for collinear off-segment p0.
double segment_winding_increment(Point2 a, Point2 b, Point2 p0);

/// Total angle J subtended by the curve at p0 (+-2 pi inside, 0 outside),
/// summed over every segment. Throws OnBoundaryError when p0 is within the
/// boundary tolerance of the curve.
double winding_integral(const ClosedCurve& curve, Point2 p0);

/// -1 when |J| >= pi (inside), +1 otherwise. Orientation independent.
int interior_indicator(const ClosedCurve& curve, Point2 p0);

/// Hierarchy of contiguous vertex chains with bounding boxes. A chain whose
/// box does not contain the query point lies inside an angular sector of less
/// than pi, so its contribution to J is exactly the angle between its two end
/// vertices; only chains near the point are expanded down to segments.
class WindingIndex {
 public:
  explicit WindingIndex(const ClosedCurve& curve, double boundary_rel_tol = kBoundaryRelTol);

  /// J at p, or nullopt when p is on the boundary.
  std::optional<double> winding(Point2 p) const;

  /// Interior indicator at p, or nullopt when p is on the boundary. Throws
  /// TopologyError when |J| exceeds a single turn.
  std::optional<int> indicator(Point2 p) const;

  double boundary_tolerance() const { return tol_; }

 private:
  struct Node {
    BoundingBox box;
    std::uint32_t lo = 0;  // first segment
    std::uint32_t hi = 0;  // one past the last segment
    std::int32_t left = -1;
    std::int32_t right = -1;
  };

  std::int32_t build(std::uint32_t lo, std::uint32_t hi);
  double query(std::int32_t node, Point2 p, bool& on_boundary) const;

  std::vector<Point2> vertices_;
  std::vector<Node> nodes_;
  double tol_ = 0.0;
};

/// Redundant contour integrals: union, intersection and symmetric difference
/// areas of the two interiors, each weighting every sub-segment of one curve
/// by the other curve's interior indicator at its midpoint.
QTriple q_integrals(const ClosedCurve& c1, const ClosedCurve& c2);

/// Set-difference areas from the Q integrals, with error estimate
/// delta = |Q2 - Q3 - Q1| / 4. Valid for non-transverse inputs.
LobeReport set_difference_areas(const ClosedCurve& c1, const ClosedCurve& c2);

}  // namespace lober
