#include "qhlab/domain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

#include "qhlab/errors.hpp"

namespace qhlab {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ResolutionTooCoarse: return "ResolutionTooCoarse";
    case ErrorKind::EmptyDomain: return "EmptyDomain";
    case ErrorKind::AlreadySmoothed: return "AlreadySmoothed";
    case ErrorKind::EllipticityViolated: return "EllipticityViolated";
    case ErrorKind::MMatrixViolated: return "MMatrixViolated";
    case ErrorKind::ShiftExceedsTau: return "ShiftExceedsTau";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::NonPositiveEigenvector: return "NonPositiveEigenvector";
    case ErrorKind::SolverDivergence: return "SolverDivergence";
    case ErrorKind::NonPositiveColumn: return "NonPositiveColumn";
    case ErrorKind::CoincidentPoints: return "CoincidentPoints";
    case ErrorKind::DisconnectedSubdomain: return "DisconnectedSubdomain";
    case ErrorKind::Unreachable: return "Unreachable";
    case ErrorKind::ChainBlocked: return "ChainBlocked";
    case ErrorKind::GeodesicTooShort: return "GeodesicTooShort";
    case ErrorKind::NestingViolated: return "NestingViolated";
    case ErrorKind::NegativeInput: return "NegativeInput";
    case ErrorKind::BallNotContained: return "BallNotContained";
    case ErrorKind::ThetaUnavailable: return "ThetaUnavailable";
    case ErrorKind::TripleTooClose: return "TripleTooClose";
    case ErrorKind::InsufficientSpread: return "InsufficientSpread";
    case ErrorKind::NonPositiveFunction: return "NonPositiveFunction";
    case ErrorKind::PoleTooCloseToBoundary: return "PoleTooCloseToBoundary";
    case ErrorKind::ArgumentOutOfDomain: return "ArgumentOutOfDomain";
    case ErrorKind::ConfigInvalid: return "ConfigInvalid";
  }
  return "UnknownError";
}

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

double profile_f(const DomainSpec& s, double t) {
  return s.c1 * std::pow(std::abs(t), s.power) + s.c2;
}

/// Distance from q to the curve {(f(|t|), t)} minimized by dense sampling
/// plus golden-section refinement. q is taken in the half-plane x >= 0.
double profile_branch_distance(const DomainSpec& s, Point q) {
  const double T = s.x_extent + profile_f(s, s.x_extent) + 1.0;
  const int n = 2048;
  auto g = [&](double t) {
    const double dx = profile_f(s, t) - q.x;
    const double dy = t - q.y;
    return dx * dx + dy * dy;
  };
  double best_t = -T, best_g = g(-T);
  const double step = 2.0 * T / n;
  for (int k = 1; k <= n; ++k) {
    const double t = -T + step * k;
    const double v = g(t);
    if (v < best_g) {
      best_g = v;
      best_t = t;
    }
  }
  double a = best_t - step, b = best_t + step;
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
  double g1 = g(x1), g2 = g(x2);
  for (int it = 0; it < 120; ++it) {
    if (g1 < g2) {
      b = x2;
      x2 = x1;
      g2 = g1;
      x1 = b - phi * (b - a);
      g1 = g(x1);
    } else {
      a = x1;
      x1 = x2;
      g1 = g2;
      x2 = a + phi * (b - a);
      g2 = g(x2);
    }
  }
  return std::sqrt(std::min(g1, g2));
}

bool point_in_polygon(const std::vector<Point>& poly, Point p) {
  bool inside = false;
  const std::size_t n = poly.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point a = poly[j], b = poly[i];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double xint = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
      if (p.x < xint) inside = !inside;
    }
  }
  return inside;
}

}  // namespace

DomainSpec DomainSpec::unit_disk() {
  DomainSpec s;
  s.kind = DomainKind::UnitDisk;
  return s;
}

DomainSpec DomainSpec::annulus(double r_in, double r_out) {
  require(r_in > 0 && r_out > 0, "annulus radii must be positive");
  require(r_in < r_out, "annulus requires r_in < r_out");
  DomainSpec s;
  s.kind = DomainKind::Annulus;
  s.r_in = r_in;
  s.r_out = r_out;
  return s;
}

DomainSpec DomainSpec::square(double side) {
  require(side > 0, "square side must be positive");
  DomainSpec s;
  s.kind = DomainKind::Square;
  s.side = side;
  return s;
}

DomainSpec DomainSpec::square_minus_ball(double side, double hole_radius) {
  require(side > 0 && hole_radius > 0, "square_minus_ball parameters must be positive");
  require(hole_radius < side / std::sqrt(2.0), "hole swallows the square");
  DomainSpec s;
  s.kind = DomainKind::SquareMinusBall;
  s.side = side;
  s.hole_radius = hole_radius;
  return s;
}

DomainSpec DomainSpec::profile(double c1, double c2, double power, double x_extent) {
  require(c1 > 0 && c2 > 0 && power > 0 && x_extent > 0, "profile parameters must be positive");
  DomainSpec s;
  s.kind = DomainKind::Profile;
  s.c1 = c1;
  s.c2 = c2;
  s.power = power;
  s.x_extent = x_extent;
  return s;
}

DomainSpec DomainSpec::strip(double width, double length) {
  require(width > 0 && length > 0, "strip dimensions must be positive");
  DomainSpec s;
  s.kind = DomainKind::Strip;
  s.width = width;
  s.length = length;
  return s;
}

DomainSpec DomainSpec::koch_snowflake(int iterations) {
  require(iterations >= 0 && iterations <= 6, "koch iterations must lie in [0, 6]");
  DomainSpec s;
  s.kind = DomainKind::KochSnowflake;
  s.iterations = iterations;
  return s;
}

std::vector<Point> koch_snowflake_polygon(int iterations) {
  const double r3 = std::sqrt(3.0);
  std::vector<Point> poly = {{0.0, r3 / 3.0}, {-0.5, -r3 / 6.0}, {0.5, -r3 / 6.0}};
  for (int it = 0; it < iterations; ++it) {
    std::vector<Point> next;
    next.reserve(poly.size() * 4);
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Point a = poly[i], b = poly[(i + 1) % n];
      const Point d = b - a;
      const Point p1 = a + (1.0 / 3.0) * d;
      const Point p2 = a + (2.0 / 3.0) * d;
      // CCW polygon: outward = right-hand perpendicular of the direction.
      const Point mid = a + 0.5 * d;
      const Point out{d.y, -d.x};
      const Point tip = mid + (r3 / 6.0) * out;
      next.push_back(a);
      next.push_back(p1);
      next.push_back(tip);
      next.push_back(p2);
    }
    poly = std::move(next);
  }
  return poly;
}

double koch_snowflake_area(int iterations) {
  const double base = std::sqrt(3.0) / 4.0;
  double add = 0.0, term = 1.0 / 3.0;
  for (int k = 1; k <= iterations; ++k) {
    add += term;
    term *= 4.0 / 9.0;
  }
  return base * (1.0 + add);
}

bool DomainSpec::contains(Point p) const {
  switch (kind) {
    case DomainKind::UnitDisk:
      return p.x * p.x + p.y * p.y < 1.0;
    case DomainKind::Annulus: {
      const double r = norm(p);
      return r > r_in && r < r_out;
    }
    case DomainKind::Square:
      return std::max(std::abs(p.x), std::abs(p.y)) < side / 2.0;
    case DomainKind::SquareMinusBall:
      return std::max(std::abs(p.x), std::abs(p.y)) < side / 2.0 && norm(p) > hole_radius;
    case DomainKind::Profile:
      return std::abs(p.x) < profile_f(*this, p.y) && std::abs(p.y) < x_extent;
    case DomainKind::Strip:
      return std::abs(p.x) < width / 2.0 && std::abs(p.y) < length / 2.0;
    case DomainKind::KochSnowflake: {
      static thread_local std::vector<Point> poly;
      static thread_local int cached_iters = -1;
      if (cached_iters != iterations) {
        poly = koch_snowflake_polygon(iterations);
        cached_iters = iterations;
      }
      return point_in_polygon(poly, p);
    }
  }
  return false;
}

double DomainSpec::boundary_distance(Point p) const {
  switch (kind) {
    case DomainKind::UnitDisk:
      return 1.0 - norm(p);
    case DomainKind::Annulus: {
      const double r = norm(p);
      return std::min(r - r_in, r_out - r);
    }
    case DomainKind::Square:
      return side / 2.0 - std::max(std::abs(p.x), std::abs(p.y));
    case DomainKind::SquareMinusBall: {
      const double sq = side / 2.0 - std::max(std::abs(p.x), std::abs(p.y));
      return std::min(sq, norm(p) - hole_radius);
    }
    case DomainKind::Profile:
      return profile_branch_distance(*this, Point{std::abs(p.x), p.y});
    case DomainKind::Strip:
      return width / 2.0 - std::abs(p.x);
    case DomainKind::KochSnowflake: {
      const auto poly = koch_snowflake_polygon(iterations);
      double best = std::numeric_limits<double>::infinity();
      const std::size_t n = poly.size();
      for (std::size_t i = 0; i < n; ++i) {
        best = std::min(best, dist_to_segment(p, poly[i], poly[(i + 1) % n]));
      }
      return best;
    }
  }
  return 0.0;
}

double DomainSpec::narrowest_feature() const {
  // Only genuine throats constrain the raster; a full convex body has none.
  switch (kind) {
    case DomainKind::UnitDisk: return std::numeric_limits<double>::infinity();
    case DomainKind::Annulus: return r_out - r_in;
    case DomainKind::Square: return std::numeric_limits<double>::infinity();
    case DomainKind::SquareMinusBall: {
      const double gap = side / 2.0 - hole_radius;
      if (gap > 0.0) return gap;
      // Tangent or overlapping hole: the interior splits into corner
      // chambers; their bulk width is the resolvable feature (the cusp
      // taper itself has no finite width).
      return side / std::sqrt(2.0) - hole_radius;
    }
    case DomainKind::Profile: return 2.0 * c2;
    case DomainKind::Strip: return width;
    case DomainKind::KochSnowflake: return std::numeric_limits<double>::infinity();
  }
  return 0.0;
}

void DomainSpec::bounding_box(Point& lo, Point& hi) const {
  switch (kind) {
    case DomainKind::UnitDisk:
      lo = {-1, -1};
      hi = {1, 1};
      return;
    case DomainKind::Annulus:
      lo = {-r_out, -r_out};
      hi = {r_out, r_out};
      return;
    case DomainKind::Square:
    case DomainKind::SquareMinusBall:
      lo = {-side / 2, -side / 2};
      hi = {side / 2, side / 2};
      return;
    case DomainKind::Profile: {
      const double xmax = profile_f(*this, x_extent);
      lo = {-xmax, -x_extent};
      hi = {xmax, x_extent};
      return;
    }
    case DomainKind::Strip:
      lo = {-width / 2, -length / 2};
      hi = {width / 2, length / 2};
      return;
    case DomainKind::KochSnowflake: {
      const auto poly = koch_snowflake_polygon(iterations);
      lo = {1e30, 1e30};
      hi = {-1e30, -1e30};
      for (const Point& p : poly) {
        lo.x = std::min(lo.x, p.x);
        lo.y = std::min(lo.y, p.y);
        hi.x = std::max(hi.x, p.x);
        hi.y = std::max(hi.y, p.y);
      }
      return;
    }
  }
}

std::string DomainSpec::describe() const {
  char buf[160];
  switch (kind) {
    case DomainKind::UnitDisk:
      return "unit_disk";
    case DomainKind::Annulus:
      std::snprintf(buf, sizeof buf, "annulus(r_in=%g, r_out=%g)", r_in, r_out);
      return buf;
    case DomainKind::Square:
      std::snprintf(buf, sizeof buf, "square(side=%g)", side);
      return buf;
    case DomainKind::SquareMinusBall:
      std::snprintf(buf, sizeof buf, "square_minus_ball(side=%g, hole_radius=%g)", side,
                    hole_radius);
      return buf;
    case DomainKind::Profile:
      std::snprintf(buf, sizeof buf, "profile(c1=%g, c2=%g, power=%g, x_extent=%g)", c1, c2,
                    power, x_extent);
      return buf;
    case DomainKind::Strip:
      std::snprintf(buf, sizeof buf, "strip(width=%g, length=%g)", width, length);
      return buf;
    case DomainKind::KochSnowflake:
      std::snprintf(buf, sizeof buf, "koch_snowflake(%d)", iterations);
      return buf;
  }
  return "?";
}

int GridDomain::find_interior(int i, int j) const {
  const int ii = i - i0_, jj = j - j0_;
  if (ii < 0 || jj < 0 || ii >= ni_ || jj >= nj_) return -1;
  return raster_[static_cast<std::size_t>(ii) * nj_ + jj];
}

int GridDomain::nearest_interior(Point p) const {
  int best = -1;
  double best_d = std::numeric_limits<double>::infinity();
  for (int k = 0; k < n_interior(); ++k) {
    const double d = dist(interior_pts[k], p);
    if (d < best_d) {
      best_d = d;
      best = k;
    }
  }
  return best;
}

GridDomain rasterize(const DomainSpec& spec, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("grid spacing must be positive");
  if (spec.narrowest_feature() / h < 8.0 - 1e-9) {
    throw Error(ErrorKind::ResolutionTooCoarse,
                spec.describe() + ": narrowest feature " + std::to_string(spec.narrowest_feature()) +
                    " spans fewer than 8 cells at h=" + std::to_string(h));
  }

  Point lo, hi;
  spec.bounding_box(lo, hi);
  const int i_min = static_cast<int>(std::floor(lo.x / h)) - 1;
  const int i_max = static_cast<int>(std::ceil(hi.x / h)) + 1;
  const int j_min = static_cast<int>(std::floor(lo.y / h)) - 1;
  const int j_max = static_cast<int>(std::ceil(hi.y / h)) + 1;

  GridDomain g;
  g.h = h;
  g.spec = spec;
  g.i0_ = i_min - 1;
  g.j0_ = j_min - 1;
  g.ni_ = i_max - i_min + 3;
  g.nj_ = j_max - j_min + 3;
  std::vector<signed char> inside(static_cast<std::size_t>(g.ni_) * g.nj_, 0);
  auto cell = [&](int i, int j) -> signed char& {
    return inside[static_cast<std::size_t>(i - g.i0_) * g.nj_ + (j - g.j0_)];
  };

  long long count = 0;
  for (int i = i_min; i <= i_max; ++i) {
    for (int j = j_min; j <= j_max; ++j) {
      if (spec.contains({i * h, j * h})) {
        cell(i, j) = 1;
        ++count;
      }
    }
  }
  if (count == 0) throw Error(ErrorKind::EmptyDomain, spec.describe());

  // Keep the largest 4-connected component (first in scan order on ties).
  std::vector<signed char> comp = inside;  // 1 = unvisited interior
  long long best_size = 0;
  std::pair<int, int> best_seed{0, 0};
  for (int i = i_min; i <= i_max; ++i) {
    for (int j = j_min; j <= j_max; ++j) {
      if (cell(i, j) != 1 || comp[static_cast<std::size_t>(i - g.i0_) * g.nj_ + (j - g.j0_)] != 1)
        continue;
      long long size = 0;
      std::queue<std::pair<int, int>> q;
      q.push({i, j});
      comp[static_cast<std::size_t>(i - g.i0_) * g.nj_ + (j - g.j0_)] = 2;
      while (!q.empty()) {
        auto [ci, cj] = q.front();
        q.pop();
        ++size;
        constexpr int d4[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
        for (const auto& d : d4) {
          const int ni = ci + d[0], nj = cj + d[1];
          auto& c = comp[static_cast<std::size_t>(ni - g.i0_) * g.nj_ + (nj - g.j0_)];
          if (cell(ni, nj) == 1 && c == 1) {
            c = 2;
            q.push({ni, nj});
          }
        }
      }
      if (size > best_size) {
        best_size = size;
        best_seed = {i, j};
      }
      // Mark this component as done (3) so seeds are not revisited.
      // (comp entries already flipped to 2; renumber below by refill.)
      for (auto& c : comp)
        if (c == 2) c = 3;
    }
  }

  // Refill from the winning seed to mark selected nodes.
  std::vector<signed char> selected(inside.size(), 0);
  {
    std::queue<std::pair<int, int>> q;
    q.push(best_seed);
    selected[static_cast<std::size_t>(best_seed.first - g.i0_) * g.nj_ +
             (best_seed.second - g.j0_)] = 1;
    while (!q.empty()) {
      auto [ci, cj] = q.front();
      q.pop();
      constexpr int d4[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
      for (const auto& d : d4) {
        const int ni = ci + d[0], nj = cj + d[1];
        auto& s = selected[static_cast<std::size_t>(ni - g.i0_) * g.nj_ + (nj - g.j0_)];
        if (cell(ni, nj) == 1 && !s) {
          s = 1;
          q.push({ni, nj});
        }
      }
    }
  }

  g.raster_.assign(inside.size(), -1);
  for (int i = i_min; i <= i_max; ++i) {
    for (int j = j_min; j <= j_max; ++j) {
      const std::size_t idx = static_cast<std::size_t>(i - g.i0_) * g.nj_ + (j - g.j0_);
      if (selected[idx]) {
        g.raster_[idx] = static_cast<int>(g.interior_ij.size());
        g.interior_ij.push_back({i, j});
        g.interior_pts.push_back({i * h, j * h});
      }
    }
  }

  // Ghost layer: every 8-neighbor of an interior node that is not interior.
  std::vector<int> ghost_raster(inside.size(), -1);
  g.neighbors.resize(g.interior_ij.size());
  g.frontier.assign(g.interior_ij.size(), false);
  for (std::size_t n = 0; n < g.interior_ij.size(); ++n) {
    const auto [i, j] = g.interior_ij[n];
    for (int s = 0; s < kNeighborCount; ++s) {
      const int ni = i + kNeighborOffsets[s][0], nj = j + kNeighborOffsets[s][1];
      const int idx = g.find_interior(ni, nj);
      if (idx >= 0) {
        g.neighbors[n][s] = idx;
        continue;
      }
      const std::size_t flat = static_cast<std::size_t>(ni - g.i0_) * g.nj_ + (nj - g.j0_);
      int gi = ghost_raster[flat];
      if (gi < 0) {
        gi = static_cast<int>(g.ghost_ij.size());
        ghost_raster[flat] = gi;
        g.ghost_ij.push_back({ni, nj});
        g.ghost_pts.push_back({ni * h, nj * h});
      }
      g.neighbors[n][s] = ~gi;
      g.frontier[n] = true;
    }
  }
  return g;
}

DistanceField distance_to_boundary(const GridDomain& grid) {
  DistanceField f;
  f.values.resize(grid.n_interior());
  for (int n = 0; n < grid.n_interior(); ++n) {
    f.values[n] = grid.spec.boundary_distance(grid.interior_pts[n]);
  }
  return f;
}

DistanceField smooth_distance(const GridDomain& grid, const DistanceField& field,
                              double radius_factor) {
  if (field.smoothed) throw Error(ErrorKind::AlreadySmoothed, "field was smoothed already");
  if (!(radius_factor > 0.0 && radius_factor <= 0.5))
    throw std::invalid_argument("radius_factor must lie in (0, 1/2]");

  const double h = grid.h;
  DistanceField out;
  out.smoothed = true;
  out.radius_factor = radius_factor;
  out.values.resize(grid.n_interior());

  for (int n = 0; n < grid.n_interior(); ++n) {
    const double R = radius_factor * field.values[n];
    const int m = static_cast<int>(std::floor(R / h));
    if (m < 1) {
      out.values[n] = field.values[n];
      continue;
    }
    const auto [i, j] = grid.interior_ij[n];
    double acc = 0.0, wsum = 0.0;
    for (int di = -m; di <= m; ++di) {
      for (int dj = -m; dj <= m; ++dj) {
        const double r = h * std::hypot(di, dj);
        if (r >= R) continue;
        const int q = grid.find_interior(i + di, j + dj);
        if (q < 0) continue;
        const double u = 1.0 - (r / R) * (r / R);
        const double w = u * u;
        acc += w * field.values[q];
        wsum += w;
      }
    }
    out.values[n] = acc / wsum;
  }

  double c0 = 1.0;
  for (int n = 0; n < grid.n_interior(); ++n) {
    const double exact = field.values[n], sm = out.values[n];
    c0 = std::max(c0, std::max(sm / exact, exact / sm));
  }
  out.c0 = c0;

  double c1 = 0.0;
  for (int n = 0; n < grid.n_interior(); ++n) {
    for (int s = 0; s < kNeighborCount; ++s) {
      const int code = grid.neighbors[n][s];
      if (GridDomain::is_ghost_ref(code)) continue;
      const double len = h * std::hypot(kNeighborOffsets[s][0], kNeighborOffsets[s][1]);
      c1 = std::max(c1, std::abs(out.values[n] - out.values[code]) / len);
    }
  }
  out.c1 = c1;
  return out;
}

}  // namespace qhlab
