#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "lober/geometry.hpp"

namespace lober::fixtures {

/// Regular n-gon inscribed in the circle, counter-clockwise, first vertex at
/// angle 0.
ClosedCurve circle(Point2 center, double r, std::size_t n);

/// Ellipse with semi-axes a (along the rotated x axis) and b, rotated by
/// `phase` radians, counter-clockwise.
ClosedCurve ellipse(Point2 center, double a, double b, double phase, std::size_t n);

/// Axis-aligned rectangle, counter-clockwise.
ClosedCurve rectangle(double xmin, double ymin, double xmax, double ymax);

/// Velocity field (x, y, t) -> (vx, vy).
using PlanarField = std::function<Point2(Point2, double)>;

/// Distance from a vortex centre below which the oscillating vortex pair
/// field counts as singular.
inline constexpr double kVortexCoreRadius = 1e-6;

/// Oscillating vortex pair velocity in the co-moving frame, first order in
/// epsilon: (f1 + eps g1, f2 - eps g2). Throws SingularityError within
/// kVortexCoreRadius of (0, +-1).
Point2 ovp_velocity(double x, double y, double t, double gamma, double epsilon);

PlanarField ovp_field(double gamma, double epsilon);

/// Forcing period 2 pi gamma of the vortex pair field.
double ovp_period(double gamma);

using State4 = std::array<double, 4>;

/// Rescaled ship roll/pitch equations, state (x, y, vx, vy).
State4 capsize_field(const State4& s, double r);

/// Conserved energy of capsize_field.
double capsize_energy(const State4& s, double r);

/// Fixed-step RK4 trajectory of capsize_field.
State4 integrate_capsize(State4 s, double r, double dt, std::size_t steps);

/// Fixed-step RK4 advection of every vertex from t0 to t1. Throws
/// SingularityError if the field does, InvalidCurveError if the advected
/// polygon collapses.
ClosedCurve advect_curve(const ClosedCurve& curve, const PlanarField& field, double t0,
                         double t1, std::size_t steps);

/// Same for a raw point list.
std::vector<Point2> advect_points(std::vector<Point2> points, const PlanarField& field,
                                  double t0, double t1, std::size_t steps);

/// Material circle of the vortex pair flow after `periods` forcing periods,
/// with dt = period / steps_per_period.
ClosedCurve ovp_advected_circle(Point2 center, double r, std::size_t n, double gamma,
                                double epsilon, double periods,
                                std::size_t steps_per_period = 2000);

/// Circle of initial conditions in the (y, vy) plane at x = x0, vx = 0,
/// integrated for time t and projected back onto (y, vy).
ClosedCurve capsize_section_curve(Point2 center, double r, std::size_t n, double x0, double ratio,
                                  double t, double dt);

/// Point-in-polygon by even-odd ray casting, indexed by horizontal slabs.
/// Shares no code with the winding module.
class RayCaster {
 public:
  explicit RayCaster(const ClosedCurve& curve);
  bool inside(Point2 p) const;

 private:
  std::vector<Point2> vertices_;
  std::vector<std::vector<std::uint32_t>> slabs_;
  double ymin_ = 0.0;
  double slab_height_ = 1.0;
};

struct OracleEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

/// Seed of stream k derived from a base seed (splitmix64 finalizer).
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream);

/// Uniform double in [0, 1) from the top 53 bits of a 64-bit word.
double unit_interval(std::uint64_t bits);

/// Monte-Carlo estimate of [A1 \ A2]: uniform samples over the joint bounding
/// box, counted when inside c1 and outside c2. Samples are drawn in chunks of
/// parallel::kChunk, chunk k from an mt19937_64 seeded with
/// stream_seed(seed, k), so the estimate does not depend on the worker count.
OracleEstimate montecarlo_diff_area(const ClosedCurve& c1, const ClosedCurve& c2,
                                    std::size_t n_samples, std::uint64_t seed);

/// Area of the intersection of two discs whose centres are d apart. Requires
/// |r1 - r2| <= d <= r1 + r2; throws DegenerateError otherwise.
double lens_area(double r1, double r2, double d);

}  // namespace lober::fixtures
