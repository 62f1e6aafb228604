#include "lober/intersect.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>

#include "lober/errors.hpp"
#include "lober/parallel.hpp"

namespace lober {
namespace {

int sign(double v) { return (v > 0.0) - (v < 0.0); }

struct SegmentBox {
  double xmin, xmax, ymin, ymax;
  std::uint32_t index;
  std::uint8_t curve;
};

SegmentBox box_of(const Segment& s, std::size_t index, std::uint8_t curve) {
  return {std::min(s.a.x, s.b.x), std::max(s.a.x, s.b.x), std::min(s.a.y, s.b.y),
          std::max(s.a.y, s.b.y), static_cast<std::uint32_t>(index), curve};
}

bool boxes_overlap(const SegmentBox& p, const SegmentBox& q) {
  return p.xmin <= q.xmax && q.xmin <= p.xmax && p.ymin <= q.ymax && q.ymin <= p.ymax;
}

using Pair = std::pair<std::uint32_t, std::uint32_t>;

/// Sweep over x-extents. With two curves, reports (c1 index, c2 index) pairs
/// whose boxes overlap; with one curve, reports (i, j) with i < j.
std::vector<Pair> candidate_pairs(std::vector<SegmentBox> boxes, bool single_curve) {
  std::sort(boxes.begin(), boxes.end(), [](const SegmentBox& p, const SegmentBox& q) {
    if (p.xmin != q.xmin) return p.xmin < q.xmin;
    if (p.curve != q.curve) return p.curve < q.curve;
    return p.index < q.index;
  });

  std::vector<Pair> pairs;
  std::vector<SegmentBox> active[2];
  for (const SegmentBox& b : boxes) {
    for (auto& list : active) {
      std::erase_if(list, [&](const SegmentBox& a) { return a.xmax < b.xmin; });
    }
    const int other = single_curve ? 0 : 1 - b.curve;
    for (const SegmentBox& a : active[other]) {
      if (!boxes_overlap(a, b)) continue;
      if (single_curve) {
        pairs.emplace_back(std::min(a.index, b.index), std::max(a.index, b.index));
      } else if (b.curve == 0) {
        pairs.emplace_back(b.index, a.index);
      } else {
        pairs.emplace_back(a.index, b.index);
      }
    }
    active[single_curve ? 0 : b.curve].push_back(b);
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

/// Side of direction r relative to a curve passing through a point with
/// incoming ray `in` (towards the previous point) and outgoing ray `out`.
/// +1: left of the traversal, -1: right, 0: along one of the rays.
int side_of(Point2 in, Point2 out, Point2 r) {
  auto strictly_between_ccw = [](Point2 from, Point2 to, Point2 v) {
    const double ft = cross(from, to);
    if (ft > 0.0) return cross(from, v) > 0.0 && cross(v, to) > 0.0;
    if (ft == 0.0 && dot(from, to) < 0.0) return cross(from, v) > 0.0;
    // Reflex sweep: complement of the closed convex sweep to -> from.
    return !(cross(to, v) >= 0.0 && cross(v, from) >= 0.0);
  };
  if (strictly_between_ccw(out, in, r)) return +1;
  if (strictly_between_ccw(in, out, r)) return -1;
  return 0;
}

enum class ContactKind { none, crossing, non_transverse };

struct Contact {
  ContactKind kind = ContactKind::none;
  IntersectionPoint ip;
  bool at_vertex = false;
};

Contact classify_contact(const ClosedCurve& c1, std::size_t i, const ClosedCurve& c2,
                         std::size_t j) {
  const Segment s1 = c1.segment(i);
  const Segment s2 = c2.segment(j);
  Contact out;

  const double ga = line_function(s1, s2.a);
  const double gb = line_function(s1, s2.b);
  if (sign(ga) * sign(gb) > 0) return out;  // necessary condition fails
  const double fa = line_function(s2, s1.a);
  const double fb = line_function(s2, s1.b);
  if (sign(fa) * sign(fb) > 0) return out;

  if ((fa == 0.0 && fb == 0.0) || (ga == 0.0 && gb == 0.0)) {
    if (segments_intersect(s1, s2)) out.kind = ContactKind::non_transverse;
    return out;
  }
  // Contacts at t == 1 belong to the following segment.
  if (fb == 0.0 || gb == 0.0) return out;

  const Point2 d1 = s1.direction();
  const Point2 d2 = s2.direction();
  const double det = cross(d1, d2);
  const bool vertex1 = fa == 0.0;
  const bool vertex2 = ga == 0.0;

  IntersectionPoint& ip = out.ip;
  ip.on_c1 = {i, vertex1 ? 0.0 : std::clamp(fa / (fa - fb), 0.0, 1.0)};
  ip.on_c2 = {j, vertex2 ? 0.0 : std::clamp(ga / (ga - gb), 0.0, 1.0)};

  if (!vertex1 && !vertex2) {
    ip.point = s1.at(ip.on_c1.t);
    ip.rho = sign(det);
    const bool transverse = std::abs(det) >= kTransversalityTol * norm(d1) * norm(d2);
    out.kind = transverse ? ContactKind::crossing : ContactKind::non_transverse;
    return out;
  }

  // A vertex lies on the other curve: decide crossing versus touching from the
  // local fans of both curves around the contact point.
  out.at_vertex = true;
  const Point2 v = vertex1 ? s1.a : s2.a;
  ip.point = v;
  const Point2 in1 = (vertex1 ? c1[c1.prev(i)] : s1.a) - v;
  const Point2 out1 = s1.b - v;
  const Point2 in2 = (vertex2 ? c2[c2.prev(j)] : s2.a) - v;
  const Point2 out2 = s2.b - v;
  const int side_in = side_of(in1, out1, in2);
  const int side_out = side_of(in1, out1, out2);
  if (side_in == 0 || side_out == 0 || side_in == side_out) {
    out.kind = ContactKind::non_transverse;
    return out;
  }
  ip.rho = side_out > 0 ? +1 : -1;
  out.kind = ContactKind::crossing;
  return out;
}

std::string pair_name(std::size_t i, std::size_t j) {
  return "C1 segment " + std::to_string(i) + " / C2 segment " + std::to_string(j);
}

}  // namespace

void IntersectionSet::rebuild_orders() {
  const std::size_t n = points.size();
  by_c1.assign(n, 0);
  by_c2.assign(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    by_c1.at(points[k].arc_order_c1) = k;
    by_c2.at(points[k].arc_order_c2) = k;
  }
}

double line_function(const Segment& s, Point2 p) {
  const Point2 d = s.direction();
  return d.y * (p.x - s.a.x) - d.x * (p.y - s.a.y);
}

bool may_intersect(const Segment& s1, const Segment& s2) {
  return sign(line_function(s1, s2.a)) * sign(line_function(s1, s2.b)) <= 0;
}

bool segments_intersect(const Segment& s1, const Segment& s2) {
  const double ga = line_function(s1, s2.a);
  const double gb = line_function(s1, s2.b);
  const double fa = line_function(s2, s1.a);
  const double fb = line_function(s2, s1.b);
  if (sign(ga) * sign(gb) > 0 || sign(fa) * sign(fb) > 0) return false;
  if ((ga == 0.0 && gb == 0.0) || (fa == 0.0 && fb == 0.0)) {
    // Collinear: project on the dominant axis and test interval overlap.
    const Point2 d = s1.direction();
    auto coord = [&](Point2 p) { return std::abs(d.x) >= std::abs(d.y) ? p.x : p.y; };
    const double lo1 = std::min(coord(s1.a), coord(s1.b));
    const double hi1 = std::max(coord(s1.a), coord(s1.b));
    const double lo2 = std::min(coord(s2.a), coord(s2.b));
    const double hi2 = std::max(coord(s2.a), coord(s2.b));
    return lo1 <= hi2 && lo2 <= hi1;
  }
  return true;
}

std::optional<SegmentHit> intersection_point(const Segment& s1, const Segment& s2) {
  if (!segments_intersect(s1, s2)) return std::nullopt;
  const Point2 d1 = s1.direction();
  const Point2 d2 = s2.direction();
  const double det = cross(d1, d2);
  if (std::abs(det) < kTransversalityTol * norm(d1) * norm(d2)) {
    throw TransversalityError("segments are parallel or overlapping (determinant " +
                                  std::to_string(det) + ")",
                              0, 0);
  }
  const double fa = line_function(s2, s1.a);
  const double fb = line_function(s2, s1.b);
  const double ga = line_function(s1, s2.a);
  const double gb = line_function(s1, s2.b);
  SegmentHit hit;
  hit.t1 = std::clamp(fa / (fa - fb), 0.0, 1.0);
  hit.t2 = std::clamp(ga / (ga - gb), 0.0, 1.0);
  hit.point = s1.at(hit.t1);
  return hit;
}

IntersectionSet find_intersections(const ClosedCurve& c1, const ClosedCurve& c2,
                                   DetectionMode mode) {
  std::vector<SegmentBox> boxes;
  boxes.reserve(c1.size() + c2.size());
  for (std::size_t i = 0; i < c1.size(); ++i) boxes.push_back(box_of(c1.segment(i), i, 0));
  for (std::size_t j = 0; j < c2.size(); ++j) boxes.push_back(box_of(c2.segment(j), j, 1));
  const std::vector<Pair> pairs = candidate_pairs(std::move(boxes), false);

  struct ChunkResult {
    std::vector<Contact> hits;
    std::optional<Pair> first_bad;
    std::size_t vertex_contacts = 0;
  };
  const std::size_t n_chunks = parallel::chunk_count(pairs.size());
  std::vector<ChunkResult> chunks(n_chunks);
  parallel::for_each_chunk(n_chunks, [&](std::size_t c) {
    ChunkResult& r = chunks[c];
    const std::size_t end = std::min(pairs.size(), (c + 1) * parallel::kChunk);
    for (std::size_t k = c * parallel::kChunk; k < end; ++k) {
      Contact contact = classify_contact(c1, pairs[k].first, c2, pairs[k].second);
      if (contact.kind == ContactKind::crossing) {
        if (contact.at_vertex) ++r.vertex_contacts;
        r.hits.push_back(contact);
      } else if (contact.kind == ContactKind::non_transverse && !r.first_bad) {
        r.first_bad = pairs[k];
      }
    }
  });

  IntersectionSet set;
  set.c1_orientation = c1.orientation();
  set.c2_orientation = c2.orientation();
  std::size_t vertex_contacts = 0;
  std::size_t non_transverse = 0;
  for (const ChunkResult& r : chunks) {
    if (r.first_bad) {
      if (mode == DetectionMode::strict) {
        throw TransversalityError(
            "non-transverse contact between " + pair_name(r.first_bad->first, r.first_bad->second) +
                "; use the winding (-light) method",
            r.first_bad->first, r.first_bad->second);
      }
      ++non_transverse;
    }
    vertex_contacts += r.vertex_contacts;
    for (const Contact& h : r.hits) set.points.push_back(h.ip);
  }
  if (non_transverse > 0) {
    set.diagnostics.push_back("skipped non-transverse contacts in " +
                              std::to_string(non_transverse) + " work chunk(s)");
  }
  if (vertex_contacts > 0) {
    set.diagnostics.push_back(std::to_string(vertex_contacts) +
                              " crossing(s) pass exactly through a vertex");
  }

  std::sort(set.points.begin(), set.points.end(),
            [](const IntersectionPoint& p, const IntersectionPoint& q) {
              if (p.on_c1 != q.on_c1) return p.on_c1 < q.on_c1;
              return p.on_c2 < q.on_c2;
            });

  // Merge numerically split duplicates, including across the wrap-around.
  BoundingBox joint = c1.bbox();
  joint.expand(c2.bbox());
  const double tol = kIntersectionDedupRelTol * joint.diagonal();
  std::vector<IntersectionPoint> merged;
  merged.reserve(set.points.size());
  for (const IntersectionPoint& p : set.points) {
    if (!merged.empty() && distance(merged.back().point, p.point) < tol) continue;
    merged.push_back(p);
  }
  if (merged.size() > 1 && distance(merged.back().point, merged.front().point) < tol) {
    merged.pop_back();
  }
  if (merged.size() != set.points.size()) {
    set.diagnostics.push_back("merged " + std::to_string(set.points.size() - merged.size()) +
                              " coincident crossing(s)");
  }
  set.points = std::move(merged);

  if (mode == DetectionMode::strict && set.points.size() % 2 != 0) {
    throw TopologyError("odd number of crossings (" + std::to_string(set.points.size()) +
                        "); a crossing was missed or is spurious, try densifying");
  }

  const std::size_t n = set.points.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& p = set.points[a];
    const auto& q = set.points[b];
    if (p.on_c2 != q.on_c2) return p.on_c2 < q.on_c2;
    return a < b;
  });
  for (std::size_t k = 0; k < n; ++k) {
    set.points[k].arc_order_c1 = k;
    set.points[order[k]].arc_order_c2 = k;
  }
  set.rebuild_orders();
  return set;
}

int orientation_sign(const IntersectionPoint& ip, const ClosedCurve& c1, const ClosedCurve& c2) {
  const Point2 t1 = tangent_at(c1, ip.on_c1.segment);
  const Point2 t2 = tangent_at(c2, ip.on_c2.segment);
  const double s = cross(t1, t2);
  if (std::abs(s) < kTransversalityTol) {
    throw TransversalityError("tangents are parallel at the crossing", ip.on_c1.segment,
                              ip.on_c2.segment);
  }
  return sign(s);
}

bool is_simple(const ClosedCurve& curve) {
  const std::size_t n = curve.size();
  // Adjacent segments may only share their common vertex.
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 d1 = curve.segment(i).direction();
    const Point2 d2 = curve.segment(curve.next(i)).direction();
    if (cross(d1, d2) == 0.0 && dot(d1, d2) < 0.0) return false;
  }
  std::vector<SegmentBox> boxes;
  boxes.reserve(n);
  for (std::size_t i = 0; i < n; ++i) boxes.push_back(box_of(curve.segment(i), i, 0));
  for (const auto& [i, j] : candidate_pairs(std::move(boxes), true)) {
    if (j == i + 1 || (i == 0 && j + 1 == n)) continue;
    if (segments_intersect(curve.segment(i), curve.segment(j))) return false;
  }
  return true;
}

}  // namespace lober
