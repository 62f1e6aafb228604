#pragma once

#include <cstddef>
#include <utility>

#include "lober/geometry.hpp"

namespace lober {

enum class Interpolation {
  /// Straight subdivision of existing segments; shape and area exact.
  linear,
  /// Curvature-matched cubic between neighbouring vertices (contour-surgery
  /// style): new points follow the curve bending estimated from the
  /// circumscribed circles at each vertex.
  cubic,
};

struct DensifyConfig {
  int n_pass = 3;
  int n_dens = 10;
  /// Radius, in input segments, refined around each crossing.
  int window = 2;
  Interpolation interpolation = Interpolation::cubic;
  std::size_t max_vertices = 10'000'000;
};

/// Effective precision factor n_dens^n_pass.
double precision_factor(const DensifyConfig& cfg);

/// Inserts points near the crossings of c1 and c2. Each pass locates the
/// crossings in tolerant mode and splits every segment that descends from an
/// input segment within `window` input segments of a crossing into n_dens
/// pieces. Input vertices are always kept. Throws ResourceError when a curve
/// would exceed max_vertices.
std::pair<ClosedCurve, ClosedCurve> densify(const ClosedCurve& c1, const ClosedCurve& c2,
                                            const DensifyConfig& cfg);

/// Signed curvature of the circle through three consecutive vertices
/// (positive when the curve turns left).
double circumcircle_curvature(Point2 prev, Point2 at, Point2 next);

}  // namespace lober
