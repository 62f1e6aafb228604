#include "lober/winding.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "lober/errors.hpp"
#include "lober/intersect.hpp"
#include "lober/parallel.hpp"
#include "lober/summation.hpp"

namespace lober {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::uint32_t kLeafSegments = 8;

int indicator_from_winding(double j) {
  const double turns = std::abs(j);
  if (turns > 3.0 * kPi) {
    throw TopologyError("curve winds " + std::to_string(j / (2.0 * kPi)) +
                        " times around a point; only simple curves are supported");
  }
  return turns >= kPi ? -1 : +1;
}

}  // namespace

double segment_winding_increment(Point2 a, Point2 b, Point2 p0) {
  const Point2 u = a - p0;
  const Point2 w = b - p0;
  return std::atan2(cross(u, w), dot(u, w));
}

double winding_integral(const ClosedCurve& curve, Point2 p0) {
  const double tol = kBoundaryRelTol * curve.bbox().diagonal();
  for (std::size_t i = 0; i < curve.size(); ++i) {
    if (point_segment_distance(p0, curve.segment(i)) <= tol) {
      throw OnBoundaryError("point lies on segment " + std::to_string(i) + " of the curve");
    }
  }
  return pairwise_sum(curve.size(), [&](std::size_t i) {
    const Segment s = curve.segment(i);
    return segment_winding_increment(s.a, s.b, p0);
  });
}

int interior_indicator(const ClosedCurve& curve, Point2 p0) {
  return indicator_from_winding(winding_integral(curve, p0));
}

WindingIndex::WindingIndex(const ClosedCurve& curve, double boundary_rel_tol)
    : vertices_(curve.vertices().begin(), curve.vertices().end()),
      tol_(boundary_rel_tol * curve.bbox().diagonal()) {
  nodes_.reserve(2 * (vertices_.size() / kLeafSegments + 1));
  build(0, static_cast<std::uint32_t>(vertices_.size()));
}

std::int32_t WindingIndex::build(std::uint32_t lo, std::uint32_t hi) {
  const auto id = static_cast<std::int32_t>(nodes_.size());
  nodes_.push_back({BoundingBox::empty(), lo, hi, -1, -1});
  if (hi - lo <= kLeafSegments) {
    BoundingBox box = BoundingBox::empty();
    for (std::uint32_t i = lo; i <= hi; ++i) box.expand(vertices_[i % vertices_.size()]);
    nodes_[id].box = box;
    return id;
  }
  const std::uint32_t mid = lo + (hi - lo) / 2;
  const std::int32_t l = build(lo, mid);
  const std::int32_t r = build(mid, hi);
  BoundingBox box = nodes_[l].box;
  box.expand(nodes_[r].box);
  nodes_[id].box = box;
  nodes_[id].left = l;
  nodes_[id].right = r;
  return id;
}

double WindingIndex::query(std::int32_t id, Point2 p, bool& on_boundary) const {
  const Node& node = nodes_[id];
  const std::size_t n = vertices_.size();
  if (!node.box.contains(p, tol_)) {
    return segment_winding_increment(vertices_[node.lo], vertices_[node.hi % n], p);
  }
  if (node.left < 0) {
    double s = 0.0;
    for (std::uint32_t i = node.lo; i < node.hi; ++i) {
      const Point2 a = vertices_[i];
      const Point2 b = vertices_[(i + 1) % n];
      if (point_segment_distance(p, {a, b}) <= tol_) on_boundary = true;
      s += segment_winding_increment(a, b, p);
    }
    return s;
  }
  return query(node.left, p, on_boundary) + query(node.right, p, on_boundary);
}

std::optional<double> WindingIndex::winding(Point2 p) const {
  bool on_boundary = false;
  const double j = query(0, p, on_boundary);
  if (on_boundary) return std::nullopt;
  return j;
}

std::optional<int> WindingIndex::indicator(Point2 p) const {
  const auto j = winding(p);
  if (!j) return std::nullopt;
  return indicator_from_winding(*j);
}

namespace {

/// One straight piece of a curve between consecutive split points.
struct Piece {
  Point2 a;
  Point2 b;
};

/// Splits the curve at the given crossings. `locations` pairs each crossing's
/// location on this curve with its coordinates.
std::vector<Piece> split_curve(const ClosedCurve& curve,
                               std::vector<std::pair<CurveLocation, Point2>> locations) {
  std::sort(locations.begin(), locations.end(),
            [](const auto& p, const auto& q) { return p.first < q.first; });
  std::vector<Piece> pieces;
  pieces.reserve(curve.size() + locations.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    Point2 start = curve[i];
    for (; k < locations.size() && locations[k].first.segment == i; ++k) {
      const Point2 cut = locations[k].second;
      if (cut != start) pieces.push_back({start, cut});
      start = cut;
    }
    const Point2 end = curve[curve.next(i)];
    if (end != start) pieces.push_back({start, end});
  }
  return pieces;
}

struct Weighted {
  double q1 = 0.0;
  double q2 = 0.0;
  double q3 = 0.0;
};

/// Area-form term of a counter-clockwise piece, weighted by indicator I in
/// {-1, 0, +1} for Q1, (I+1)/2 for Q2 and (I-1)/(-2) for Q3.
Weighted weigh(Point2 a, Point2 b, int ind) {
  const double term = -contour_term(a, b);
  return {ind * term, 0.5 * (ind + 1) * term, -0.5 * (ind - 1) * term};
}

Weighted weigh_piece(const WindingIndex& other, Point2 a, Point2 b, int depth) {
  const Point2 mid = lerp(a, b, 0.5);
  if (const auto ind = other.indicator(mid)) return weigh(a, b, *ind);
  if (depth >= kMaxBoundaryBisections) return weigh(a, b, 0);
  const Weighted l = weigh_piece(other, a, mid, depth + 1);
  const Weighted r = weigh_piece(other, mid, b, depth + 1);
  return {l.q1 + r.q1, l.q2 + r.q2, l.q3 + r.q3};
}

std::vector<Weighted> weigh_curve(const std::vector<Piece>& pieces, const WindingIndex& other) {
  std::vector<Weighted> out(pieces.size());
  parallel::for_each_chunk(parallel::chunk_count(pieces.size()), [&](std::size_t c) {
    const std::size_t end = std::min(pieces.size(), (c + 1) * parallel::kChunk);
    for (std::size_t k = c * parallel::kChunk; k < end; ++k) {
      out[k] = weigh_piece(other, pieces[k].a, pieces[k].b, 0);
    }
  });
  return out;
}

}  // namespace

QTriple q_integrals(const ClosedCurve& c1, const ClosedCurve& c2) {
  const ClosedCurve n1 = with_orientation(c1, Orientation::ccw);
  const ClosedCurve n2 = with_orientation(c2, Orientation::ccw);
  const IntersectionSet crossings = find_intersections(n1, n2, DetectionMode::tolerant);

  std::vector<std::pair<CurveLocation, Point2>> on1;
  std::vector<std::pair<CurveLocation, Point2>> on2;
  for (const IntersectionPoint& ip : crossings.points) {
    on1.emplace_back(ip.on_c1, ip.point);
    on2.emplace_back(ip.on_c2, ip.point);
  }
  const std::vector<Piece> pieces1 = split_curve(n1, std::move(on1));
  const std::vector<Piece> pieces2 = split_curve(n2, std::move(on2));
  const WindingIndex index1(n1);
  const WindingIndex index2(n2);
  const std::vector<Weighted> w1 = weigh_curve(pieces1, index2);
  const std::vector<Weighted> w2 = weigh_curve(pieces2, index1);

  auto total = [&](double Weighted::*field) {
    return pairwise_sum(w1.size(), [&](std::size_t k) { return w1[k].*field; }) +
           pairwise_sum(w2.size(), [&](std::size_t k) { return w2[k].*field; });
  };
  return {total(&Weighted::q1), total(&Weighted::q2), total(&Weighted::q3)};
}

LobeReport set_difference_areas(const ClosedCurve& c1, const ClosedCurve& c2) {
  LobeReport report;
  report.method = AreaMethod::winding;
  report.area_c1 = enclosed_area(c1);
  report.area_c2 = enclosed_area(c2);
  const QTriple q = q_integrals(c1, c2);
  report.q = q;

  const double shared = 0.25 * (q.q1 + q.q2 - q.q3);
  const double delta = 0.25 * std::abs(q.q2 - q.q3 - q.q1);
  report.error_estimate = delta;
  report.a1_minus_a2 = 0.5 * (report.area_c1 - report.area_c2) + shared;
  report.a2_minus_a1 = 0.5 * (report.area_c2 - report.area_c1) + shared;

  for (auto [value, name] : {std::pair{&report.a1_minus_a2, "A1\\A2"},
                             std::pair{&report.a2_minus_a1, "A2\\A1"}}) {
    if (*value < 0.0) {
      if (-*value > delta) {
        report.diagnostics.push_back(std::string("clamped ") + name + " = " +
                                     std::to_string(*value) + " (beyond delta) to 0");
      }
      *value = 0.0;
    }
  }
  return report;
}

}  // namespace lober
