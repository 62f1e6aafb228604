#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lober/geometry.hpp"

namespace lober {

/// Position on a curve: segment index and parameter t in [0, 1).
struct CurveLocation {
  std::size_t segment = 0;
  double t = 0.0;

  friend constexpr auto operator<=>(const CurveLocation&, const CurveLocation&) = default;
};

struct IntersectionPoint {
  Point2 point;
  CurveLocation on_c1;
  CurveLocation on_c2;
  /// Sign of the z-component of (unit tangent of C1) x (unit tangent of C2),
  /// tangents taken in each curve's stored traversal direction.
  int rho = 0;
  /// Rank of this point when walking C1 (resp. C2) in stored order.
  std::size_t arc_order_c1 = 0;
  std::size_t arc_order_c2 = 0;
};

/// Crossings between two closed curves.
///
/// `points` is sorted by position along C1. `by_c1[k]` / `by_c2[k]` give the
/// index into `points` of the k-th crossing along C1 / C2 in stored order.
/// The orientation flags record how each curve was stored when the set was
/// computed; adjacency needs them to map counter-clockwise / clockwise senses
/// onto rank order.
struct IntersectionSet {
  std::vector<IntersectionPoint> points;
  std::vector<std::size_t> by_c1;
  std::vector<std::size_t> by_c2;
  Orientation c1_orientation = Orientation::ccw;
  Orientation c2_orientation = Orientation::ccw;
  std::vector<std::string> diagnostics;

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }

  /// Rebuilds by_c1/by_c2 from the arc_order fields.
  void rebuild_orders();
};

/// Result of solving the 2x2 system of two segments.
struct SegmentHit {
  Point2 point;
  double t1 = 0.0;
  double t2 = 0.0;
};

/// Relative determinant threshold below which a crossing counts as
/// non-transverse: |v1 x v2| < kTransversalityTol * |v1| |v2|.
inline constexpr double kTransversalityTol = 1e-10;

/// Crossings closer than this times the joint bounding-box diagonal merge.
inline constexpr double kIntersectionDedupRelTol = 1e-9;

/// Signed line function through s ((y2-y1)x - (x2-x1)y - x1 y2 + y1 x2),
/// evaluated relative to s.a for accuracy.
double line_function(const Segment& s, Point2 p);

/// Necessary condition: the endpoints of s2 do not lie strictly on the same
/// side of the line through s1. False guarantees no intersection.
bool may_intersect(const Segment& s1, const Segment& s2);

/// Necessary and sufficient test. Both product inequalities must hold; when
/// all four line values vanish the segments are collinear and the test falls
/// back to overlap of their projections.
bool segments_intersect(const Segment& s1, const Segment& s2);

/// Solves for the crossing parameters of two segments that intersect.
/// Returns nullopt when the segments do not intersect. Throws
/// TransversalityError when the determinant is below the relative threshold.
std::optional<SegmentHit> intersection_point(const Segment& s1, const Segment& s2);

enum class DetectionMode {
  /// Every contact must be a transverse crossing; otherwise throw. An odd
  /// crossing count throws TopologyError.
  strict,
  /// Skip collinear overlaps, touches and tangencies; never throw on parity.
  tolerant,
};

/// All crossings of c1 and c2. A crossing exactly at a vertex is attributed to
/// the segment on which its parameter lies in [0, 1).
IntersectionSet find_intersections(const ClosedCurve& c1, const ClosedCurve& c2,
                                   DetectionMode mode = DetectionMode::strict);

/// Sign of the tangent cross product at a transverse crossing, from the host
/// segments. Throws TransversalityError when |sin theta| is below threshold.
int orientation_sign(const IntersectionPoint& ip, const ClosedCurve& c1, const ClosedCurve& c2);

/// True when no two non-adjacent segments of the curve intersect.
bool is_simple(const ClosedCurve& curve);

}  // namespace lober
