#pragma once

#include <array>
#include <string>
#include <vector>

#include "qhlab/geometry.hpp"

namespace qhlab {

enum class DomainKind {
  UnitDisk,
  Annulus,
  Square,
  SquareMinusBall,
  Profile,
  Strip,
  KochSnowflake,
};

/// Parametric description of a planar domain. Membership and distance to the
/// analytic boundary are computed from the closed-form description, never from
/// a raster.
struct DomainSpec {
  DomainKind kind = DomainKind::UnitDisk;

  double r_in = 0.0, r_out = 0.0;          // annulus
  double side = 0.0, hole_radius = 0.0;    // square, square_minus_ball
  double c1 = 0.0, c2 = 0.0, power = 1.0;  // profile: |x| < c1*|y|^power + c2
  double x_extent = 0.0;                   // profile window: |y| < x_extent
  double width = 0.0, length = 0.0;        // strip: |x| < width/2, |y| < length/2
  int iterations = 0;                      // koch snowflake (side 1, centroid at origin)

  static DomainSpec unit_disk();
  static DomainSpec annulus(double r_in, double r_out);
  static DomainSpec square(double side);
  static DomainSpec square_minus_ball(double side, double hole_radius);
  static DomainSpec profile(double c1, double c2, double power, double x_extent);
  static DomainSpec strip(double width, double length);
  static DomainSpec koch_snowflake(int iterations);

  /// Strict interior membership test.
  bool contains(Point p) const;

  /// Exact Euclidean distance from an interior point to the analytic boundary.
  /// For profile and strip domains the window caps do not count as boundary;
  /// they exist only to truncate an unbounded domain.
  double boundary_distance(Point p) const;

  /// Width of the narrowest throat the raster must resolve.
  double narrowest_feature() const;

  /// Axis-aligned bounding box of the (windowed) domain.
  void bounding_box(Point& lo, Point& hi) const;

  std::string describe() const;
};

/// Koch snowflake boundary polyline (closed; base equilateral triangle of
/// side 1 centered at the centroid, apex up).
std::vector<Point> koch_snowflake_polygon(int iterations);

/// Analytic area of the iterated snowflake, used as a rasterization oracle.
double koch_snowflake_area(int iterations);

// Neighbor slot order used throughout: E, W, N, S, NE, NW, SE, SW.
inline constexpr int kNeighborCount = 8;
inline constexpr std::array<std::array<int, 2>, 8> kNeighborOffsets = {
    {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, 1}, {1, -1}, {-1, -1}}};

/// Rasterized domain: interior lattice nodes plus a ghost layer of exterior
/// nodes 8-adjacent to the interior. Ghost nodes carry Dirichlet data.
/// Immutable after construction.
class GridDomain {
 public:
  double h = 0.0;
  DomainSpec spec;

  std::vector<std::array<int, 2>> interior_ij;
  std::vector<Point> interior_pts;
  std::vector<std::array<int, 2>> ghost_ij;
  std::vector<Point> ghost_pts;

  /// Per interior node, 8 neighbor slots; value >= 0 is an interior index,
  /// value < 0 encodes ghost index ~v (bit complement). Every slot is valid.
  std::vector<std::array<int, 8>> neighbors;

  /// Interior nodes with at least one ghost 8-neighbor.
  std::vector<bool> frontier;

  int n_interior() const { return static_cast<int>(interior_pts.size()); }
  int n_ghost() const { return static_cast<int>(ghost_pts.size()); }

  static bool is_ghost_ref(int code) { return code < 0; }
  static int ghost_ref(int code) { return ~code; }

  /// Interior index of lattice coordinate, -1 if not interior.
  int find_interior(int i, int j) const;

  /// Interior node nearest to a point (linear scan).
  int nearest_interior(Point p) const;

 private:
  // Dense lattice-to-index raster covering the bounding box (plus padding).
  int i0_ = 0, j0_ = 0, ni_ = 0, nj_ = 0;
  std::vector<int> raster_;
  friend GridDomain rasterize(const DomainSpec& spec, double h);
};

/// Exact or mollified distance-to-boundary values on interior nodes.
struct DistanceField {
  std::vector<double> values;
  bool smoothed = false;
  double radius_factor = 0.0;
  double c0 = 1.0;  // measured two-sided comparability against the exact field
  double c1 = 0.0;  // measured max |difference quotient| over grid edges
};

/// Rasterize a parametric domain. The interior mask is the strict analytic
/// membership; the raster must put at least 8 cells across the narrowest
/// feature. If the strict raster splits into several 4-connected components
/// (tangent square_minus_ball), the largest one is kept deterministically.
GridDomain rasterize(const DomainSpec& spec, double h);

/// Exact distance to the analytic boundary at every interior node.
DistanceField distance_to_boundary(const GridDomain& grid);

/// Mollify a distance field with the C^2 bump (1-(r/R)^2)^2 of node-dependent
/// radius R(p) = radius_factor * d(p). Records the measured two-sided constant
/// c0 and the measured edge-gradient bound c1.
DistanceField smooth_distance(const GridDomain& grid, const DistanceField& field,
                              double radius_factor);

}  // namespace qhlab
