#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "qhlab/domain.hpp"
#include "qhlab/errors.hpp"

using namespace qhlab;

TEST_CASE("unit disk at h=0.5 keeps exactly the five strict-interior lattice points") {
  const GridDomain g = rasterize(DomainSpec::unit_disk(), 0.5);
  REQUIRE(g.n_interior() == 5);
  std::set<std::pair<int, int>> got;
  for (const auto& ij : g.interior_ij) got.insert({ij[0], ij[1]});
  const std::set<std::pair<int, int>> want = {{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  CHECK(got == want);
}

TEST_CASE("unit square at h=0.25 has a 3x3 interior") {
  const GridDomain g = rasterize(DomainSpec::square(1.0), 0.25);
  CHECK(g.n_interior() == 9);
}

TEST_CASE("koch snowflake interior count tracks the analytic area") {
  const int iters = 3;
  const double h = 0.01;
  const GridDomain g = rasterize(DomainSpec::koch_snowflake(iters), h);
  const double raster_area = g.n_interior() * h * h;
  const double analytic = koch_snowflake_area(iters);
  CHECK(std::abs(raster_area - analytic) / analytic < 0.01);
}

TEST_CASE("every interior node's 4-neighborhood resolves to interior or ghost") {
  const GridDomain g = rasterize(DomainSpec::annulus(0.3, 1.0), 1.0 / 32);
  for (int n = 0; n < g.n_interior(); ++n) {
    for (int s = 0; s < 4; ++s) {
      const int code = g.neighbors[n][s];
      if (GridDomain::is_ghost_ref(code)) {
        CHECK(GridDomain::ghost_ref(code) < g.n_ghost());
      } else {
        CHECK(code < g.n_interior());
      }
    }
  }
}

TEST_CASE("interior nodes form one 4-connected component") {
  const GridDomain g = rasterize(DomainSpec::square_minus_ball(2.0, 0.5), 1.0 / 16);
  // BFS from node 0 must reach everything.
  std::vector<char> seen(g.n_interior(), 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  while (!stack.empty()) {
    const int n = stack.back();
    stack.pop_back();
    for (int s = 0; s < 4; ++s) {
      const int code = g.neighbors[n][s];
      if (!GridDomain::is_ghost_ref(code) && !seen[code]) {
        seen[code] = 1;
        stack.push_back(code);
      }
    }
  }
  CHECK(std::count(seen.begin(), seen.end(), 1) == g.n_interior());
}

TEST_CASE("rasterize rejects unresolved throats and empty domains") {
  CHECK_THROWS_AS(rasterize(DomainSpec::annulus(0.9, 1.0), 1.0 / 32), Error);
  CHECK_THROWS_AS(rasterize(DomainSpec::strip(0.05, 1.0), 1.0 / 64), Error);
}

TEST_CASE("exact distance examples") {
  SUBCASE("disk center") {
    const GridDomain g = rasterize(DomainSpec::unit_disk(), 0.25);
    const DistanceField f = distance_to_boundary(g);
    const int c = g.find_interior(0, 0);
    REQUIRE(c >= 0);
    CHECK(f.values[c] == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("square nearest side") {
    const GridDomain g = rasterize(DomainSpec::square(2.0), 0.25);
    const DistanceField f = distance_to_boundary(g);
    const int n = g.find_interior(2, 0);  // (0.5, 0)
    REQUIRE(n >= 0);
    CHECK(f.values[n] == doctest::Approx(0.5).epsilon(1e-12));
  }
  SUBCASE("profile linear growth matches the point-line oracle") {
    const DomainSpec s = DomainSpec::profile(1.0, 1.0, 1.0, 8.0);
    for (double t : {3.0, 5.0, 6.5}) {
      const double want = (t + 1.0) / std::sqrt(2.0);
      CHECK(s.boundary_distance({0.0, t}) == doctest::Approx(want).epsilon(1e-9));
    }
  }
  SUBCASE("closed forms for disk, annulus, square") {
    const GridDomain gd = rasterize(DomainSpec::unit_disk(), 1.0 / 16);
    const DistanceField fd = distance_to_boundary(gd);
    for (int n = 0; n < gd.n_interior(); ++n) {
      const double want = 1.0 - norm(gd.interior_pts[n]);
      CHECK(std::abs(fd.values[n] - want) < 1e-12);
    }
    const GridDomain ga = rasterize(DomainSpec::annulus(0.25, 1.0), 1.0 / 16);
    const DistanceField fa = distance_to_boundary(ga);
    for (int n = 0; n < ga.n_interior(); ++n) {
      const double r = norm(ga.interior_pts[n]);
      const double want = std::min(r - 0.25, 1.0 - r);
      CHECK(std::abs(fa.values[n] - want) < 1e-12);
    }
  }
}

TEST_CASE("distance values are positive and bounded by the bounding box diameter") {
  const GridDomain g = rasterize(DomainSpec::profile(1.0, 0.5, 0.5, 4.0), 1.0 / 16);
  const DistanceField f = distance_to_boundary(g);
  Point lo, hi;
  g.spec.bounding_box(lo, hi);
  const double diam = dist(lo, hi);
  for (double v : f.values) {
    CHECK(v > 0.0);
    CHECK(v <= diam);
  }
}

TEST_CASE("refining h improves the raster area for disk and square") {
  auto area_err = [](const DomainSpec& s, double h, double exact) {
    const GridDomain g = rasterize(s, h);
    return std::abs(g.n_interior() * h * h - exact);
  };
  const double pi = 3.14159265358979323846;
  CHECK(area_err(DomainSpec::unit_disk(), 1.0 / 32, pi) <
        area_err(DomainSpec::unit_disk(), 1.0 / 16, pi));
  CHECK(area_err(DomainSpec::square(1.0), 1.0 / 32, 1.0) <=
        area_err(DomainSpec::square(1.0), 1.0 / 16, 1.0));
}

TEST_CASE("mollifying an affine distance field reproduces it exactly") {
  const GridDomain g = rasterize(DomainSpec::strip(2.0, 6.0), 1.0 / 16);
  const DistanceField f = distance_to_boundary(g);
  const DistanceField sm = smooth_distance(g, f, 0.25);
  for (int n = 0; n < g.n_interior(); ++n) {
    const Point p = g.interior_pts[n];
    const double R = 0.25 * f.values[n];
    // Stay on one affine branch and away from the window caps.
    if (std::abs(p.x) > R + 1e-12 && std::abs(p.y) < 3.0 - R - 1e-12) {
      CHECK(sm.values[n] == doctest::Approx(f.values[n]).epsilon(1e-12));
    }
  }
  CHECK(sm.smoothed);
}

TEST_CASE("smoothing the unit disk at h=1/64 stays within the frozen c0 bound") {
  const GridDomain g = rasterize(DomainSpec::unit_disk(), 1.0 / 64);
  const DistanceField f = distance_to_boundary(g);
  const DistanceField sm = smooth_distance(g, f, 0.25);
  CHECK(sm.c0 >= 1.0);
  CHECK(sm.c0 <= 1.5);
  // Sandwich invariant with the measured constant, nodewise.
  for (int n = 0; n < g.n_interior(); ++n) {
    CHECK(sm.values[n] <= sm.c0 * f.values[n] + 1e-12);
    CHECK(sm.values[n] >= f.values[n] / sm.c0 - 1e-12);
  }
}

TEST_CASE("smoothed field is C1 across the distance ridge of square_minus_ball") {
  const GridDomain g = rasterize(DomainSpec::square_minus_ball(2.0, 0.5), 1.0 / 64);
  const DistanceField f = distance_to_boundary(g);
  const DistanceField sm = smooth_distance(g, f, 0.25);
  const double h = g.h;

  // Max second difference along lattice axes (edge-gradient jump).
  auto max_jump = [&](const DistanceField& fld) {
    double worst = 0.0;
    for (int n = 0; n < g.n_interior(); ++n) {
      for (int axis = 0; axis < 2; ++axis) {
        const int fwd = g.neighbors[n][axis == 0 ? 0 : 2];
        const int bwd = g.neighbors[n][axis == 0 ? 1 : 3];
        if (GridDomain::is_ghost_ref(fwd) || GridDomain::is_ghost_ref(bwd)) continue;
        worst = std::max(worst,
                         std::abs(fld.values[fwd] - 2.0 * fld.values[n] + fld.values[bwd]));
      }
    }
    return worst;
  };
  CHECK(max_jump(sm) < 2.0 * sm.c1 * h);
}

TEST_CASE("re-smoothing is rejected") {
  const GridDomain g = rasterize(DomainSpec::unit_disk(), 1.0 / 16);
  const DistanceField f = distance_to_boundary(g);
  const DistanceField sm = smooth_distance(g, f, 0.25);
  CHECK_THROWS_AS(smooth_distance(g, sm, 0.25), Error);
}

TEST_CASE("spec validation") {
  CHECK_THROWS(DomainSpec::annulus(1.0, 0.5));
  CHECK_THROWS(DomainSpec::annulus(-1.0, 0.5));
  CHECK_THROWS(DomainSpec::koch_snowflake(7));
  CHECK_THROWS(DomainSpec::profile(1.0, -1.0, 1.0, 4.0));
}
