#pragma once

#include <string>
#include <vector>

#include "km/f_lattice.hpp"
#include "km/numeric.hpp"

// Poincare-disk picture of the Weyl group: the det = 1, trace > 0 sheet in
// Minkowski coordinates tau = (a+c)/2, xi = (a-c)/2, eta = b projects to the
// disk by (xi, eta) / (1 + tau).  The fixed line of a reflection r_beta is a
// diameter when trace(beta) = 0, otherwise a circular arc orthogonal to the
// unit circle with center (xi, eta)/tau and radius 1/|tau|.
//
// Everything that feeds an index computation is decided in integer lattice
// arithmetic; floating point appears only in projection and rendering.

namespace km {

// Boundary point of the disk: the light-cone direction [p^2 pq; pq q^2]
// orthogonal to the root, projecting to the exact rational point
// ((p^2 - q^2), 2pq) / (p^2 + q^2).
struct IdealPoint {
  Int p = 0, q = 0;  // primitive, first nonzero entry positive
  Rational x, y;
};

struct DiskGeodesic {
  SymMat2 root;
  bool is_diameter = false;  // passes through the center: trace(root) = 0
  IdealPoint end1, end2;
  double cx = 0, cy = 0, radius = 0;  // meaningful when !is_diameter
};

// Error: NotRealRoot unless norm(beta) = 2.
DiskGeodesic project_root_line(const SymMat2& beta);

enum class PairKind { intersecting, ideal, ultraparallel };

struct PairAngle {
  PairKind kind;
  Int product = 0;   // (beta_i, beta_j); |.| < 2, = 2, > 2 decides the kind
  double theta = 0;  // intersection angle, acos(|product| / 2); intersecting only
};

// Errors: NotRealRoot, SameLine (beta_i = +-beta_j).
PairAngle pair_angle(const SymMat2& bi, const SymMat2& bj);

struct RegionArea {
  bool finite = false;
  Int area_sixths = 0;              // exact area / (pi/6)
  double area = 0;                  // +infinity when !finite
  std::vector<Int> boundary_order;  // cyclic order of input indices (finite case)
};

// Area of the region bounded by the given reflection lines.  A closed polygon
// needs a cyclic order in which consecutive lines meet (Intersecting or
// Ideal) while non-consecutive ones stay Ultraparallel; its Gauss-Bonnet area
// pi(k-2) - sum(angles) is an exact multiple of pi/6 because every
// intersection angle is pi/2 or pi/3.  No such order with some pair
// Ultraparallel means an unbounded region.  At most 10 lines.
// Errors: NotRealRoot, SameLine, NotAPolygon, InputError.
RegionArea region_area(const std::vector<SymMat2>& roots);

struct SubgroupIndex {
  bool finite = false;
  Int index = 0;  // index of the reflection subgroup in the full Weyl group
};

// area / (pi / 6), cross-checked in floating point to 1e-9.
// Errors: those of region_area, NonIntegralIndex.
SubgroupIndex index_in_W(const std::vector<SymMat2>& roots);

struct TesselationScene {
  std::vector<SymMat2> geodesic_roots;
  std::vector<std::string> labels;  // parallel to geodesic_roots; "" = unlabeled
  std::vector<SymMat2> region;      // shaded polygon boundary; empty = no shading
  int size_px = 600;
  bool show_labels = true;
};

// Orbit of the three simple reflection lines under Weyl words of length up to
// `depth`, with the fundamental triangle shaded.  Error: InputError for
// depth < 0 or depth > 12.
TesselationScene tesselation_scene(Int depth, int size_px = 600, bool show_labels = true);

// Deterministic SVG: byte-identical output for identical scenes and style
// version.  Shading a region that is not a finite polygon raises the
// region_area errors.
std::string render_svg(const TesselationScene& scene);

}  // namespace km
