#include "lober/classes.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "lober/errors.hpp"
#include "lober/summation.hpp"
#include "lober/winding.hpp"

namespace lober {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

std::size_t rank_on(const IntersectionPoint& p, CurveId curve) {
  return curve == CurveId::c1 ? p.arc_order_c1 : p.arc_order_c2;
}

const std::vector<std::size_t>& order_on(const IntersectionSet& s, CurveId curve) {
  return curve == CurveId::c1 ? s.by_c1 : s.by_c2;
}

bool stored_ccw(const IntersectionSet& s, CurveId curve) {
  return (curve == CurveId::c1 ? s.c1_orientation : s.c2_orientation) == Orientation::ccw;
}

/// Walking `curve` in `sense` follows stored order iff the senses agree.
bool walks_forward(const IntersectionSet& s, CurveId curve, Sense sense) {
  return (sense == Sense::positive) == stored_ccw(s, curve);
}

std::size_t neighbour(const IntersectionSet& s, CurveId curve, Sense sense, std::size_t i) {
  const std::size_t n = s.size();
  const std::size_t r = rank_on(s.points[i], curve);
  const std::size_t next_rank = walks_forward(s, curve, sense) ? (r + 1) % n : (r + n - 1) % n;
  return order_on(s, curve)[next_rank];
}

struct Route {
  CurveId curve;
  Sense sense;
};

/// Curve and sense of the arc leaving p under the given variant.
Route route_of(int rho, Variant variant) {
  const bool primary = variant == Variant::a1_minus_a2;
  if (rho > 0) return {CurveId::c1, primary ? Sense::positive : Sense::negative};
  return {CurveId::c2, primary ? Sense::negative : Sense::positive};
}

const CurveLocation& location_on(const IntersectionPoint& p, CurveId curve) {
  return curve == CurveId::c1 ? p.on_c1 : p.on_c2;
}

/// Appends the interior vertices met when walking from `from` to `to`.
void append_arc_vertices(const ClosedCurve& curve, const CurveLocation& from,
                         const CurveLocation& to, bool forward, std::vector<Point2>& out) {
  const std::size_t n = curve.size();
  if (forward) {
    if (from.segment == to.segment && from < to) return;
    const std::size_t count = (to.segment + n - from.segment - 1) % n + 1;
    for (std::size_t k = 0; k < count; ++k) out.push_back(curve[(from.segment + 1 + k) % n]);
  } else {
    std::vector<Point2> tmp;
    append_arc_vertices(curve, to, from, true, tmp);
    out.insert(out.end(), tmp.rbegin(), tmp.rend());
  }
}

}  // namespace

int adjacency(const IntersectionSet& points, CurveId curve, Sense sense, std::size_t i,
              std::size_t j) {
  if (i == j || i >= points.size() || j >= points.size()) return 0;
  return neighbour(points, curve, sense, i) == j ? 1 : 0;
}

int signed_adjacency(const IntersectionSet& points, std::size_t i, std::size_t j, Variant variant) {
  const Route r = route_of(points.points.at(i).rho, variant);
  return adjacency(points, r.curve, r.sense, i, j);
}

SuccessorMap successor_map(const IntersectionSet& points, Variant variant) {
  const std::size_t n = points.size();
  SuccessorMap map;
  map.variant = variant;
  map.sigma.assign(n, kNone);
  map.inverse.assign(n, kNone);
  if (points.by_c1.size() != n || points.by_c2.size() != n) {
    throw TopologyError("intersection set has inconsistent arc orders");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const int rho = points.points[i].rho;
    if (rho != 1 && rho != -1) {
      throw TopologyError("crossing " + std::to_string(i) + " has no orientation sign");
    }
    const Route r = route_of(rho, variant);
    const std::size_t next = neighbour(points, r.curve, r.sense, i);
    if (next == i) throw TopologyError("crossing " + std::to_string(i) + " is its own successor");
    if (map.inverse[next] != kNone) {
      throw TopologyError("crossings " + std::to_string(map.inverse[next]) + " and " +
                          std::to_string(i) + " share the successor " + std::to_string(next) +
                          "; curves are not simple or a crossing was missed");
    }
    map.sigma[i] = next;
    map.inverse[next] = i;
  }
  return map;
}

std::vector<EquivalenceClass> partition(const SuccessorMap& sigma) {
  const std::size_t n = sigma.size();
  std::vector<bool> seen(n, false);
  std::vector<EquivalenceClass> classes;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    EquivalenceClass cls;
    for (std::size_t p = start; !seen[p]; p = sigma(p)) {
      seen[p] = true;
      cls.members.push_back(p);
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<EquivalenceClass> partition(const IntersectionSet& points, Variant variant) {
  return partition(successor_map(points, variant));
}

double arc_integral(const ClosedCurve& curve, const CurveLocation& from, Point2 from_point,
                    const CurveLocation& to, Point2 to_point, bool forward) {
  if (!forward) return -arc_integral(curve, to, to_point, from, from_point, true);
  const std::size_t n = curve.size();
  if (from.segment == to.segment && from < to) return contour_term(from_point, to_point);

  const std::size_t s = from.segment;
  const std::size_t e = to.segment;
  const std::size_t full = (e + n - s - 1) % n;
  const double head = contour_term(from_point, curve[curve.next(s)]);
  const double body = pairwise_sum(full, [&](std::size_t k) {
    const std::size_t i = (s + 1 + k) % n;
    return contour_term(curve[i], curve[curve.next(i)]);
  });
  const double tail = contour_term(curve[e], to_point);
  return head + body + tail;
}

double class_integral(std::size_t p, const SuccessorMap& sigma, const IntersectionSet& points,
                      const ClosedCurve& c1, const ClosedCurve& c2) {
  const IntersectionPoint& from = points.points.at(p);
  const IntersectionPoint& to = points.points.at(sigma(p));
  const Route r = route_of(from.rho, sigma.variant);
  const ClosedCurve& curve = r.curve == CurveId::c1 ? c1 : c2;
  return arc_integral(curve, location_on(from, r.curve), from.point, location_on(to, r.curve),
                      to.point, walks_forward(points, r.curve, r.sense));
}

std::vector<Point2> class_boundary(const EquivalenceClass& cls, const SuccessorMap& sigma,
                                   const IntersectionSet& points, const ClosedCurve& c1,
                                   const ClosedCurve& c2) {
  std::vector<Point2> loop;
  for (std::size_t p : cls.members) {
    const IntersectionPoint& from = points.points[p];
    const IntersectionPoint& to = points.points[sigma(p)];
    const Route r = route_of(from.rho, sigma.variant);
    const ClosedCurve& curve = r.curve == CurveId::c1 ? c1 : c2;
    loop.push_back(from.point);
    append_arc_vertices(curve, location_on(from, r.curve), location_on(to, r.curve),
                        walks_forward(points, r.curve, r.sense), loop);
  }
  return loop;
}

namespace {

/// Fills per-class areas for one variant and returns their total. Each class
/// traces a counter-clockwise loop when both curves are counter-clockwise, so
/// the y dx - x dy sum is minus the lobe area.
double classify_variant(const IntersectionSet& points, const ClosedCurve& c1,
                        const ClosedCurve& c2, Variant variant,
                        std::vector<EquivalenceClass>& out) {
  const SuccessorMap sigma = successor_map(points, variant);
  out = partition(sigma);
  for (EquivalenceClass& cls : out) {
    const double s = pairwise_sum(cls.members.size(), [&](std::size_t k) {
      return class_integral(cls.members[k], sigma, points, c1, c2);
    });
    cls.lobe_area = -s;
  }
  return pairwise_sum(out.size(), [&](std::size_t k) { return out[k].lobe_area; });
}

/// Interior test that tolerates a few vertices lying on the other curve.
bool vertex_inside(const ClosedCurve& outer, const ClosedCurve& probe) {
  const WindingIndex index(outer);
  for (const Point2& v : probe.vertices()) {
    if (const auto ind = index.indicator(v)) return *ind < 0;
  }
  throw TopologyError("every vertex of one curve lies on the other");
}

}  // namespace

LobeReport lobe_areas_from(const ClosedCurve& c1, const ClosedCurve& c2,
                           const IntersectionSet& points) {
  if (!c1.is_ccw() || !c2.is_ccw()) {
    throw InvalidCurveError("lobe_areas_from expects counter-clockwise curves");
  }
  LobeReport report;
  report.method = AreaMethod::transverse;
  report.area_c1 = enclosed_area(c1);
  report.area_c2 = enclosed_area(c2);
  report.diagnostics = points.diagnostics;

  if (points.empty()) {
    if (vertex_inside(c1, c2)) {
      report.a1_minus_a2 = report.area_c1 - report.area_c2;
      report.a2_minus_a1 = 0.0;
      report.diagnostics.push_back("no crossings: C2 lies inside C1");
    } else if (vertex_inside(c2, c1)) {
      report.a1_minus_a2 = 0.0;
      report.a2_minus_a1 = report.area_c2 - report.area_c1;
      report.diagnostics.push_back("no crossings: C1 lies inside C2");
    } else {
      report.a1_minus_a2 = report.area_c1;
      report.a2_minus_a1 = report.area_c2;
      report.diagnostics.push_back("no crossings: curves are disjoint");
    }
    return report;
  }

  report.a1_minus_a2 = classify_variant(points, c1, c2, Variant::a1_minus_a2, report.classes);
  report.a2_minus_a1 =
      classify_variant(points, c1, c2, Variant::a2_minus_a1, report.swapped_classes);
  for (const auto* list : {&report.classes, &report.swapped_classes}) {
    for (const EquivalenceClass& cls : *list) {
      if (cls.lobe_area < 0.0) {
        report.diagnostics.push_back("a class encloses negative area " +
                                     std::to_string(cls.lobe_area) +
                                     "; check the inputs with the winding method");
      }
    }
  }
  return report;
}

LobeReport lobe_areas(const ClosedCurve& c1, const ClosedCurve& c2, const LobeOptions& opts,
                      IntersectionSet* crossings) {
  const ClosedCurve n1 = with_orientation(c1, Orientation::ccw);
  const ClosedCurve n2 = with_orientation(c2, Orientation::ccw);
  if (opts.check_simple) {
    if (!is_simple(n1)) throw TopologyError("C1 self-intersects");
    if (!is_simple(n2)) throw TopologyError("C2 self-intersects");
  }
  const IntersectionSet points = find_intersections(n1, n2, DetectionMode::strict);
  LobeReport report = lobe_areas_from(n1, n2, points);
  if (!c1.is_ccw()) report.diagnostics.insert(report.diagnostics.begin(), "C1 reversed to counter-clockwise");
  if (!c2.is_ccw()) report.diagnostics.insert(report.diagnostics.begin(), "C2 reversed to counter-clockwise");

  if (opts.cross_check) {
    const LobeReport w = set_difference_areas(n1, n2);
    report.cross_check_a1_minus_a2 = report.a1_minus_a2 - w.a1_minus_a2;
    report.cross_check_a2_minus_a1 = report.a2_minus_a1 - w.a2_minus_a1;
    report.error_estimate = 0.0;
    report.diagnostics.push_back("winding cross-check: dA1\\A2 = " +
                                 std::to_string(*report.cross_check_a1_minus_a2) +
                                 ", dA2\\A1 = " + std::to_string(*report.cross_check_a2_minus_a1) +
                                 ", winding delta = " + std::to_string(w.error_estimate));
  }
  if (crossings) *crossings = points;
  return report;
}

}  // namespace lober
