#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "lober/classes.hpp"
#include "lober/fixtures.hpp"
#include "lober/intersect.hpp"
#include "lober/winding.hpp"
#include "support/oracles.hpp"

using namespace lober;

namespace {

Segment random_segment(std::mt19937_64& rng) {
  return {{testing::uniform(rng, -1, 1), testing::uniform(rng, -1, 1)},
          {testing::uniform(rng, -1, 1), testing::uniform(rng, -1, 1)}};
}

std::multiset<double> areas_of(const std::vector<EquivalenceClass>& classes) {
  std::multiset<double> out;
  for (const auto& c : classes) out.insert(c.lobe_area);
  return out;
}

bool close_sets(const std::multiset<double>& a, const std::multiset<double>& b, double tol) {
  if (a.size() != b.size()) return false;
  return std::equal(a.begin(), a.end(), b.begin(), [&](double x, double y) { return std::abs(x - y) < tol; });
}

}  // namespace

TEST_CASE("screen soundness over random segment pairs") {
  std::mt19937_64 rng(101);
  int screened = 0;
  for (int k = 0; k < 1'000'000; ++k) {
    const Segment s1 = random_segment(rng);
    const Segment s2 = random_segment(rng);
    if (!may_intersect(s1, s2)) {
      ++screened;
      REQUIRE_FALSE(testing::parametric_solve(s1, s2));
    }
  }
  CHECK(screened > 100'000);
}

TEST_CASE("intersection residuals over random crossing pairs") {
  std::mt19937_64 rng(202);
  int found = 0;
  while (found < 100'000) {
    const Segment s1 = random_segment(rng);
    const Segment s2 = random_segment(rng);
    if (!segments_intersect(s1, s2)) continue;
    if (std::abs(cross(s1.direction(), s2.direction())) <
        1e-6 * s1.length() * s2.length()) continue;
    const auto hit = intersection_point(s1, s2);
    REQUIRE(hit);
    ++found;
    const double len = std::max(s1.length(), s2.length());
    REQUIRE(distance(s1.at(hit->t1), s2.at(hit->t2)) < 1e-10 * len);
    REQUIRE(distance(hit->point, s1.at(hit->t1)) < 1e-10 * len);
  }
}

TEST_CASE("crossing sets: symmetry, host segments, alternation, ranks") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto [a, b] = testing::random_transverse_pair(seed, 500);
    const IntersectionSet ab = find_intersections(a, b);
    const IntersectionSet ba = find_intersections(b, a);
    REQUIRE(ab.size() == ba.size());
    REQUIRE(ab.size() % 2 == 0);
    for (const auto& p : ab.points) {
      const bool mirrored = std::any_of(ba.points.begin(), ba.points.end(), [&](const auto& q) {
        return distance(p.point, q.point) < 1e-9 * a.bbox().diagonal();
      });
      CHECK(mirrored);
      const Segment s1 = a.segment(p.on_c1.segment);
      const Segment s2 = b.segment(p.on_c2.segment);
      CHECK(may_intersect(s1, s2));
      CHECK(segments_intersect(s1, s2));
      CHECK((p.rho == 1 || p.rho == -1));
    }
    for (std::size_t k = 0; k < ab.size(); ++k) {
      const auto& p = ab.points[ab.by_c1[k]];
      const auto& q = ab.points[ab.by_c1[(k + 1) % ab.size()]];
      CHECK(p.rho == -q.rho);
    }
    std::vector<std::size_t> r1, r2;
    for (const auto& p : ab.points) {
      r1.push_back(p.arc_order_c1);
      r2.push_back(p.arc_order_c2);
    }
    std::sort(r1.begin(), r1.end());
    std::sort(r2.begin(), r2.end());
    for (std::size_t k = 0; k < r1.size(); ++k) {
      CHECK(r1[k] == k);
      CHECK(r2[k] == k);
    }
  }
}

TEST_CASE("partition laws and method agreement") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto [a, b] = testing::random_transverse_pair(seed, 600);
    const ClosedCurve na = with_orientation(a, Orientation::ccw);
    const ClosedCurve nb = with_orientation(b, Orientation::ccw);
    const IntersectionSet s = find_intersections(na, nb);
    for (Variant v : {Variant::a1_minus_a2, Variant::a2_minus_a1}) {
      const SuccessorMap m = successor_map(s, v);
      const auto classes = partition(m);
      std::vector<int> seen(s.size(), 0);
      std::size_t total = 0;
      for (const auto& c : classes) {
        CHECK(c.members.size() >= 2);
        total += c.members.size();
        for (std::size_t k = 0; k < c.members.size(); ++k) {
          const std::size_t p = c.members[k];
          ++seen[p];
          CHECK(m(p) == c.members[(k + 1) % c.members.size()]);
          CHECK(signed_adjacency(s, p, m(p), v) == 1);
          CHECK(s.points[p].rho == -s.points[m(p)].rho);
        }
      }
      CHECK(total == s.size());
      CHECK(std::all_of(seen.begin(), seen.end(), [](int n) { return n == 1; }));
    }
    const LobeReport r = lobe_areas(a, b);
    const LobeReport w = set_difference_areas(a, b);
    CHECK(r.a1_minus_a2 >= 0.0);
    CHECK(r.a2_minus_a1 >= 0.0);
    const double tol = std::max(1e-6, 10 * w.error_estimate);
    CHECK(std::abs(r.a1_minus_a2 - w.a1_minus_a2) < tol);
    CHECK(std::abs(r.a2_minus_a1 - w.a2_minus_a1) < tol);
    CHECK(w.error_estimate < 1e-3 * std::max(w.area_c1, w.area_c2));
    REQUIRE(w.q);
    CHECK(std::abs(w.q->q1 - (w.q->q2 - w.q->q3)) == doctest::Approx(4 * w.error_estimate));
    CHECK(w.q->q2 >= w.q->q3);
    CHECK(w.q->q3 >= 0.0);
  }
}

TEST_CASE("reversal and swap covariance") {
  for (std::uint64_t seed = 40; seed <= 55; ++seed) {
    const auto [a, b] = testing::random_transverse_pair(seed, 400);
    const LobeReport r = lobe_areas(a, b);
    const LobeReport both = lobe_areas(reverse(a), reverse(b));
    CHECK(close_sets(areas_of(r.classes), areas_of(both.classes), 1e-9));
    CHECK(close_sets(areas_of(r.swapped_classes), areas_of(both.swapped_classes), 1e-9));
    const LobeReport swapped = lobe_areas(b, a);
    CHECK(close_sets(areas_of(r.classes), areas_of(swapped.swapped_classes), 1e-9));
    CHECK(close_sets(areas_of(r.swapped_classes), areas_of(swapped.classes), 1e-9));

    const LobeReport w = set_difference_areas(a, b);
    for (const auto& [x, y] : {std::pair{reverse(a), b}, std::pair{a, reverse(b)}}) {
      const LobeReport v = set_difference_areas(x, y);
      CHECK(std::abs(v.a1_minus_a2 - w.a1_minus_a2) < 1e-9);
      CHECK(std::abs(v.a2_minus_a1 - w.a2_minus_a1) < 1e-9);
    }
  }
}

TEST_CASE("winding integral is exact on random polygons") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    const ClosedCurve c = testing::random_star(rng, {0, 0}, 1, 300, 0.5);
    for (int k = 0; k < 500; ++k) {
      const Point2 p{testing::uniform(rng, -2, 2), testing::uniform(rng, -2, 2)};
      double j = 0.0;
      try {
        j = winding_integral(c, p);
      } catch (const std::exception&) {
        continue;
      }
      const double turns = std::abs(j) / (2 * std::numbers::pi);
      CHECK(std::abs(turns - std::round(turns)) * 2 * std::numbers::pi < 1e-9);
      CHECK((interior_indicator(c, p) < 0) == testing::ray_parity_inside(c, p));
    }
  }
}
