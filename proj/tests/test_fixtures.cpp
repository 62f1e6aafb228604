#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "lober/errors.hpp"
#include "lober/fixtures.hpp"
#include "lober/intersect.hpp"
#include "lober/parallel.hpp"
#include "support/oracles.hpp"

using namespace lober;
using namespace lober::fixtures;

TEST_CASE("circle and ellipse generators") {
  for (std::size_t n : {3u, 17u, 1000u}) {
    const ClosedCurve c = circle({1, 2}, 0.5, n);
    CHECK(c.is_ccw());
    CHECK(enclosed_area(c) ==
          doctest::Approx(0.5 * n * 0.25 * std::sin(2 * std::numbers::pi / n)).epsilon(1e-12));
  }
  const ClosedCurve e = ellipse({0, 0}, 1, 2, 0.3, 4096);
  CHECK(e.is_ccw());
  CHECK(std::abs(enclosed_area(e) - 2 * std::numbers::pi) < 2 * std::numbers::pi * 1e-5);
  CHECK(enclosed_area(e) < 2 * std::numbers::pi);
  CHECK_THROWS(circle({0, 0}, -1, 10));
}

TEST_CASE("vortex pair field values") {
  const Point2 v = ovp_velocity(0, 0, 0, 0.5, 0.0);
  CHECK(v.x == doctest::Approx(1.5));
  CHECK(v.y == 0.0);
  std::mt19937_64 rng(1);
  for (int k = 0; k < 200; ++k) {
    const double x = testing::uniform(rng, -3, 3);
    const double y = testing::uniform(rng, -3, 3);
    CHECK(ovp_velocity(-x, y, 0, 0.5, 0).y == doctest::Approx(-ovp_velocity(x, y, 0, 0.5, 0).y));
    const double t = testing::uniform(rng, 0, 10);
    const Point2 a = ovp_velocity(x, y, t, 0.7, 0.1);
    const Point2 b = ovp_velocity(x, y, t + ovp_period(0.7), 0.7, 0.1);
    CHECK(a.x == doctest::Approx(b.x).epsilon(1e-9));
    CHECK(a.y == doctest::Approx(b.y).epsilon(1e-9));
  }
  CHECK_THROWS_AS(ovp_velocity(0, 1, 0, 0.5, 0.1), SingularityError);
  CHECK_THROWS_AS(ovp_velocity(0, -1, 0, 0.5, 0.0), SingularityError);
}

TEST_CASE("unperturbed vortex pair field is divergence free") {
  std::mt19937_64 rng(2);
  const double h = 1e-5;
  for (int k = 0; k < 500; ++k) {
    const double x = testing::uniform(rng, -3, 3);
    const double y = testing::uniform(rng, -3, 3);
    if (std::hypot(x, y - 1) < 0.1 || std::hypot(x, y + 1) < 0.1) continue;
    const double div = (ovp_velocity(x + h, y, 0, 0.5, 0).x - ovp_velocity(x - h, y, 0, 0.5, 0).x +
                        ovp_velocity(x, y + h, 0, 0.5, 0).y - ovp_velocity(x, y - h, 0, 0.5, 0).y) /
                       (2 * h);
    CHECK(std::abs(div) < 1e-6);
  }
}

TEST_CASE("capsize field") {
  for (double sx : {-1.0, 1.0}) {
    const State4 d = capsize_field({sx, 0.5, 0, 0}, 1.6);
    for (double v : d) CHECK(v == 0.0);
  }
  for (double v : capsize_field({0, 0, 0, 0}, 1.6)) CHECK(v == 0.0);
  const State4 s0{0.3, 0.1, 0.05, -0.1};
  const double e0 = capsize_energy(s0, 1.6);
  const State4 s1 = integrate_capsize(s0, 1.6, 1e-3, 50'000);
  CHECK(std::abs(capsize_energy(s1, 1.6) - e0) < 1e-8);
}

TEST_CASE("advection") {
  const ClosedCurve c = circle({0, 0}, 1, 32);
  const ClosedCurve same = advect_curve(c, [](Point2, double) { return Point2{}; }, 0, 1, 10);
  for (std::size_t i = 0; i < c.size(); ++i) CHECK(same[i] == c[i]);

  const ClosedCurve seed = circle({0, 1.5}, 0.3, 1 << 14);
  const ClosedCurve moved = advect_curve(seed, ovp_field(0.5, 0.0), 0, ovp_period(0.5), 2000);
  CHECK(moved.orientation() == seed.orientation());
  CHECK(std::abs(enclosed_area(moved) - enclosed_area(seed)) / enclosed_area(seed) < 1e-4);

  const ClosedCurve folded = ovp_advected_circle({0, 1.5}, 0.3, 2048, 0.5, 0.1, 1.0);
  const IntersectionSet s = find_intersections(circle({0, 1.5}, 0.3, 2048), folded);
  CHECK(s.size() >= 2);
  CHECK(s.size() % 2 == 0);
}

TEST_CASE("ray caster agrees with plain parity") {
  std::mt19937_64 rng(3);
  const ClosedCurve c = testing::random_star(rng, {0, 0}, 1, 3000, 0.4);
  const RayCaster rc(c);
  for (int k = 0; k < 20'000; ++k) {
    const Point2 p{testing::uniform(rng, -2, 2), testing::uniform(rng, -2, 2)};
    CHECK(rc.inside(p) == testing::ray_parity_inside(c, p));
  }
}

TEST_CASE("Monte-Carlo oracle") {
  const ClosedCurve a = circle({0, 0}, 1, 4096);
  const ClosedCurve b = circle({1, 0}, 1, 4096);
  const double expected = std::numbers::pi - lens_area(1, 1, 1);
  const OracleEstimate e = montecarlo_diff_area(a, b, 1'000'000, 99);
  CHECK(std::abs(e.value - expected) < 3 * e.std_error);
  const OracleEstimate again = montecarlo_diff_area(a, b, 1'000'000, 99);
  CHECK(again.value == e.value);
  parallel::set_worker_count(1);
  CHECK(montecarlo_diff_area(a, b, 1'000'000, 99).value == e.value);
  parallel::set_worker_count(4);
  CHECK(montecarlo_diff_area(a, b, 1'000'000, 99).value == e.value);

  const ClosedCurve s1 = rectangle(0, 0, 1, 1);
  const ClosedCurve s2 = rectangle(3, 0, 4, 1);
  const OracleEstimate d = montecarlo_diff_area(s1, s2, 100'000, 5);
  CHECK(std::abs(d.value - 1.0) < 3 * d.std_error);
}

TEST_CASE("lens area") {
  CHECK(lens_area(1, 1, 1) == doctest::Approx(2 * std::numbers::pi / 3 - std::sqrt(3.0) / 2));
  CHECK(lens_area(1, 1, 1.999999999) < 1e-12);
  CHECK(lens_area(1, 0.5, 0.5 + 1e-12) == doctest::Approx(std::numbers::pi * 0.25));
  CHECK_THROWS_AS(lens_area(1, 1, 2.5), DegenerateError);
  CHECK_THROWS_AS(lens_area(1, 0.2, 0.5), DegenerateError);
}

TEST_CASE("stream seeds and unit interval") {
  CHECK(stream_seed(1, 0) != stream_seed(1, 1));
  CHECK(stream_seed(1, 0) != stream_seed(2, 0));
  CHECK(unit_interval(0) == 0.0);
  CHECK(unit_interval(~0ULL) < 1.0);
}
