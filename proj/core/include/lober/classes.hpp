#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lober/geometry.hpp"
#include "lober/intersect.hpp"

namespace lober {

enum class CurveId { c1, c2 };

/// Traversal sense along a curve: positive = counter-clockwise.
enum class Sense { positive, negative };

/// Which signed adjacency drives the successor map.
enum class Variant {
  /// gamma = A+_{C1} for rho = +1, A-_{C2} for rho = -1; cycles bound A1 \ A2.
  a1_minus_a2,
  /// gamma = A-_{C1} for rho = +1, A+_{C2} for rho = -1; cycles bound A2 \ A1.
  a2_minus_a1,
};

/// Adjacency A^{sense}_{curve}(p_i, p_j): 1 iff p_j is the next crossing after
/// p_i when walking `curve` in `sense`. O(1) from the arc-order ranks.
int adjacency(const IntersectionSet& points, CurveId curve, Sense sense, std::size_t i,
              std::size_t j);

/// Signed adjacency gamma(p_i, p_j) for the chosen variant.
int signed_adjacency(const IntersectionSet& points, std::size_t i, std::size_t j,
                     Variant variant = Variant::a1_minus_a2);

/// sigma(p) = the unique q with gamma(p, q) = 1, as indices into points.
struct SuccessorMap {
  std::vector<std::size_t> sigma;
  std::vector<std::size_t> inverse;
  Variant variant = Variant::a1_minus_a2;

  std::size_t operator()(std::size_t i) const { return sigma[i]; }
  std::size_t size() const { return sigma.size(); }
};

/// Builds sigma and checks it is a bijection. Throws TopologyError otherwise.
SuccessorMap successor_map(const IntersectionSet& points, Variant variant = Variant::a1_minus_a2);

struct EquivalenceClass {
  /// Cycle of sigma: members[k+1] = sigma(members[k]), wrapping.
  std::vector<std::size_t> members;
  double lobe_area = 0.0;
};

/// Cycles of sigma, ordered by their smallest member index.
std::vector<EquivalenceClass> partition(const SuccessorMap& sigma);
std::vector<EquivalenceClass> partition(const IntersectionSet& points,
                                        Variant variant = Variant::a1_minus_a2);

/// Contour integral 1/2 * int (y dx - x dy) along the arc from p to sigma(p),
/// on the curve and in the sense selected by rho(p) and the variant. The end
/// segments are split at the crossing parameters. `points` must have been
/// computed from c1 and c2 as given.
double class_integral(std::size_t p, const SuccessorMap& sigma, const IntersectionSet& points,
                      const ClosedCurve& c1, const ClosedCurve& c2);

/// Contour integral of the arc on `curve` from `from` to `to`, walking in
/// stored order (forward) or against it.
double arc_integral(const ClosedCurve& curve, const CurveLocation& from, Point2 from_point,
                    const CurveLocation& to, Point2 to_point, bool forward);

/// Vertices of the closed loop traced by one class (for plotting).
std::vector<Point2> class_boundary(const EquivalenceClass& cls, const SuccessorMap& sigma,
                                   const IntersectionSet& points, const ClosedCurve& c1,
                                   const ClosedCurve& c2);

enum class AreaMethod { transverse, winding };

struct QTriple {
  double q1 = 0.0;
  double q2 = 0.0;
  double q3 = 0.0;
};

struct LobeReport {
  /// Classes of the (A+C1, A-C2) relation: lobes of A1 \ A2.
  std::vector<EquivalenceClass> classes;
  /// Classes of the swapped relation: lobes of A2 \ A1.
  std::vector<EquivalenceClass> swapped_classes;
  double a1_minus_a2 = 0.0;
  double a2_minus_a1 = 0.0;
  double area_c1 = 0.0;
  double area_c2 = 0.0;
  AreaMethod method = AreaMethod::transverse;
  /// delta for the winding method; 0 for the class method.
  double error_estimate = 0.0;
  std::optional<QTriple> q;
  /// Class-method totals minus winding-method totals, when cross-checked.
  std::optional<double> cross_check_a1_minus_a2;
  std::optional<double> cross_check_a2_minus_a1;
  std::vector<std::string> diagnostics;
};

struct LobeOptions {
  /// Verify both curves are simple before classifying (O(N log N) scan).
  bool check_simple = true;
  /// Also run the winding method and record the discrepancy.
  bool cross_check = false;
};

/// Set-difference areas from the class partition. Both curves are normalized
/// to counter-clockwise traversal first. Throws TransversalityError or
/// TopologyError when the transverse assumptions fail. When `crossings` is
/// given it receives the crossings of the normalized curves.
LobeReport lobe_areas(const ClosedCurve& c1, const ClosedCurve& c2, const LobeOptions& opts = {},
                      IntersectionSet* crossings = nullptr);

/// Same, reusing an intersection set computed from the two curves exactly as
/// passed (both must be counter-clockwise).
LobeReport lobe_areas_from(const ClosedCurve& c1_ccw, const ClosedCurve& c2_ccw,
                           const IntersectionSet& points);

}  // namespace lober
