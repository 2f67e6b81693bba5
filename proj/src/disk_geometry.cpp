#include "km/disk_geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <set>

#include "km/errors.hpp"
#include "km/version.hpp"

namespace km {

namespace {

// style table: frozen per kSvgStyleVersion
constexpr const char* kCircleStroke = "#202020";
constexpr const char* kLineStroke = "#35506e";
constexpr const char* kRegionFill = "#e8c77d";
constexpr const char* kTextFill = "#202020";

void require_real(const SymMat2& b) {
  if (norm2(b) != 2) fail("NotRealRoot", "reflection lines come from norm-2 vectors");
}

std::pair<Int, Int> primitive_dir(Int p, Int q) {
  Int g = std::gcd(p < 0 ? -p : p, q < 0 ? -q : q);
  p /= g;
  q /= g;
  if (p < 0 || (p == 0 && q < 0)) {
    p = -p;
    q = -q;
  }
  return {p, q};
}

IdealPoint ideal_point(Int p0, Int q0) {
  auto [p, q] = primitive_dir(p0, q0);
  IdealPoint pt;
  pt.p = p;
  pt.q = q;
  pt.x = Rational(p * p - q * q, p * p + q * q);
  pt.y = Rational(2 * p * q, p * p + q * q);
  return pt;
}

struct P2 {
  double x = 0, y = 0;
};

P2 to_double(const IdealPoint& ip) {
  return {ip.x.convert_to<double>(), ip.y.convert_to<double>()};
}

// Dual of the root's Minkowski normal: Euclidean-orthogonality against it is
// Minkowski-orthogonality against the root.  Scaled by 2 to stay integral.
std::array<Int, 3> dual(const SymMat2& b) {
  return {b.a + b.c, -(b.a - b.c), -2 * b.b};
}

// Disk image of the intersection point of two crossing reflection lines.
P2 crossing_point(const SymMat2& bi, const SymMat2& bj) {
  auto u = dual(bi), v = dual(bj);
  Int t = u[1] * v[2] - u[2] * v[1];
  Int xi = u[2] * v[0] - u[0] * v[2];
  Int eta = u[0] * v[1] - u[1] * v[0];
  Int q = t * t - xi * xi - eta * eta;
  if (q <= 0) fail("InternalError", "crossing lines must meet inside the disk");
  if (t < 0) {
    t = -t;
    xi = -xi;
    eta = -eta;
  }
  double s = std::sqrt(static_cast<double>(q));
  return {static_cast<double>(xi) / (s + static_cast<double>(t)),
          static_cast<double>(eta) / (s + static_cast<double>(t))};
}

bool same_point(const IdealPoint& a, const IdealPoint& b) { return a.p == b.p && a.q == b.q; }

// The single boundary point shared by two tangent reflection lines.
IdealPoint shared_ideal(const DiskGeodesic& gi, const DiskGeodesic& gj) {
  for (const IdealPoint* a : {&gi.end1, &gi.end2})
    for (const IdealPoint* b : {&gj.end1, &gj.end2})
      if (same_point(*a, *b)) return *a;
  fail("InternalError", "tangent lines must share a boundary direction");
}

std::string fmt(double v) {
  if (std::abs(v) < 5e-7) v = 0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

// disk coordinates to SVG user coordinates (y points down)
P2 user(const P2& p) { return {100 * p.x, -100 * p.y}; }

std::string xy(const P2& p) { return fmt(p.x) + " " + fmt(p.y); }

int arc_sweep(const P2& center_u, const P2& from_u, const P2& to_u) {
  double a0 = std::atan2(from_u.y - center_u.y, from_u.x - center_u.x);
  double a1 = std::atan2(to_u.y - center_u.y, to_u.x - center_u.x);
  double d = a1 - a0;
  while (d > M_PI) d -= 2 * M_PI;
  while (d <= -M_PI) d += 2 * M_PI;
  return d > 0 ? 1 : 0;
}

std::string escape_text(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '&') out += "&amp;";
    else if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else out += c;
  }
  return out;
}

SymMat2 canon_sign(const SymMat2& r) {
  for (Int v : {r.a, r.b, r.c}) {
    if (v > 0) return r;
    if (v < 0) return -r;
  }
  fail("ZeroVector", "zero vector has no reflection line");
}

}  // namespace

DiskGeodesic project_root_line(const SymMat2& beta) {
  require_real(beta);
  DiskGeodesic g;
  g.root = beta;
  const Int A = beta.a, B = beta.b, C = beta.c;
  // light-cone directions of the plane (beta, .) = 0: C p^2 - 2B pq + A q^2 = 0
  if (C != 0) {
    g.end1 = ideal_point(B + 1, C);
    g.end2 = ideal_point(B - 1, C);
  } else {
    g.end1 = ideal_point(1, 0);
    g.end2 = ideal_point(A, 2 * B);
  }
  g.is_diameter = (A + C == 0);
  if (!g.is_diameter) {
    double tau = static_cast<double>(A + C) / 2;
    g.cx = (static_cast<double>(A - C) / 2) / tau;
    g.cy = static_cast<double>(B) / tau;
    g.radius = 1 / std::abs(tau);
  }
  return g;
}

PairAngle pair_angle(const SymMat2& bi, const SymMat2& bj) {
  require_real(bi);
  require_real(bj);
  if (bi == bj || bi == -bj) fail("SameLine", "the two roots give the same reflection line");
  PairAngle pa;
  pa.product = bilinear(bi, bj);
  Int t = pa.product < 0 ? -pa.product : pa.product;
  if (t < 2) {
    pa.kind = PairKind::intersecting;
    pa.theta = std::acos(static_cast<double>(t) / 2);
  } else if (t == 2) {
    pa.kind = PairKind::ideal;
  } else {
    pa.kind = PairKind::ultraparallel;
  }
  return pa;
}

RegionArea region_area(const std::vector<SymMat2>& roots) {
  const Int k = static_cast<Int>(roots.size());
  if (k == 0) fail("InputError", "no boundary lines");
  if (k > 10) fail("InputError", "at most 10 boundary lines");
  for (const SymMat2& r : roots) require_real(r);

  std::vector<std::vector<PairAngle>> pa(k, std::vector<PairAngle>(k));
  bool any_ultra = false;
  for (Int i = 0; i < k; ++i)
    for (Int j = i + 1; j < k; ++j) {
      pa[i][j] = pa[j][i] = pair_angle(roots[i], roots[j]);
      any_ultra = any_ultra || pa[i][j].kind == PairKind::ultraparallel;
    }

  RegionArea out;
  if (k <= 2) {  // a half-plane, wedge or strip: unbounded either way
    out.finite = false;
    out.area = std::numeric_limits<double>::infinity();
    return out;
  }

  // Angle contribution in units of pi/6: integer because the pairing is an
  // integer with |t| in {0, 1}.
  auto angle_units = [&](const PairAngle& p) {
    return p.product == 0 ? Int(3) : Int(2);  // pi/2 or pi/3
  };

  std::vector<Int> rest(k - 1);
  std::iota(rest.begin(), rest.end(), 1);
  std::vector<Int> order(k);
  order[0] = 0;
  do {
    std::copy(rest.begin(), rest.end(), order.begin() + 1);
    bool ok = true;
    for (Int i = 0; i < k && ok; ++i)
      for (Int j = i + 1; j < k && ok; ++j) {
        bool adjacent = (j == i + 1) || (i == 0 && j == k - 1);
        PairKind kind = pa[order[i]][order[j]].kind;
        ok = adjacent ? kind != PairKind::ultraparallel : kind == PairKind::ultraparallel;
      }
    if (!ok) continue;
    Int units = 0;
    for (Int i = 0; i < k; ++i) {
      const PairAngle& p = pa[order[i]][order[(i + 1) % k]];
      if (p.kind == PairKind::intersecting) units += angle_units(p);
    }
    Int sixths = 6 * (k - 2) - units;
    if (sixths <= 0) continue;  // not realizable as a hyperbolic polygon
    out.finite = true;
    out.area_sixths = sixths;
    out.area = static_cast<double>(sixths) * M_PI / 6;
    out.boundary_order = order;
    return out;
  } while (std::next_permutation(rest.begin(), rest.end()));

  if (any_ultra) {  // some bounding lines diverge: the region is unbounded
    out.finite = false;
    out.area = std::numeric_limits<double>::infinity();
    return out;
  }
  fail("NotAPolygon", "lines cannot be cyclically ordered into a closed region");
}

SubgroupIndex index_in_W(const std::vector<SymMat2>& roots) {
  RegionArea ra = region_area(roots);
  if (!ra.finite) return {false, 0};
  double ratio = ra.area / (M_PI / 6);
  if (std::abs(ratio - static_cast<double>(ra.area_sixths)) > 1e-9)
    fail("NonIntegralIndex", "area is not an integer multiple of the fundamental area");
  return {true, ra.area_sixths};
}

TesselationScene tesselation_scene(Int depth, int size_px, bool show_labels) {
  if (depth < 0 || depth > 12) fail("InputError", "orbit depth must be in [0, 12]");
  if (size_px < 64 || size_px > 4096) fail("InputError", "image size must be in [64, 4096]");
  TesselationScene sc;
  sc.size_px = size_px;
  sc.show_labels = show_labels;
  sc.region = {alpha(-1), alpha(0), alpha(1)};

  std::set<std::array<Int, 3>> seen_roots;
  auto add_root = [&](const SymMat2& r, const char* label) {
    SymMat2 c = canon_sign(r);
    if (!seen_roots.insert({c.a, c.b, c.c}).second) return;
    sc.geodesic_roots.push_back(c);
    sc.labels.push_back(label ? label : "");
  };
  add_root(alpha(-1), "a-1");
  add_root(alpha(0), "a0");
  add_root(alpha(1), "a1");

  std::set<std::array<Int, 4>> seen;
  auto key = [](const Mat2i& m) {
    return std::array<Int, 4>{m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
  };
  std::vector<Pgl2> frontier = {Pgl2::identity()};
  seen.insert(key(Pgl2::identity().m));
  for (Int d = 1; d <= depth; ++d) {
    std::vector<Pgl2> next;
    for (const Pgl2& w : frontier)
      for (int gi = -1; gi <= 1; ++gi) {
        Pgl2 h = Pgl2::generator(static_cast<Gen>(gi)).times(w);
        if (!seen.insert(key(h.m)).second) continue;
        for (int i = -1; i <= 1; ++i) add_root(weyl_apply(h, alpha(i)), nullptr);
        next.push_back(std::move(h));
      }
    frontier = std::move(next);
  }
  return sc;
}

std::string render_svg(const TesselationScene& scene) {
  if (scene.labels.size() != scene.geodesic_roots.size())
    fail("InputError", "labels must parallel the geodesic list");

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(scene.size_px) +
         "\" height=\"" + std::to_string(scene.size_px) + "\" viewBox=\"-110 -110 220 220\">\n";
  svg += "<!-- style " + std::string(kSvgStyleVersion) + " -->\n";

  if (!scene.region.empty()) {
    RegionArea ra = region_area(scene.region);
    if (!ra.finite) fail("InputError", "shaded region must be a finite polygon");
    const Int k = static_cast<Int>(scene.region.size());
    std::vector<DiskGeodesic> geo;
    for (const SymMat2& r : scene.region) geo.push_back(project_root_line(r));
    // vertex i sits between boundary lines order[i] and order[i+1]
    std::vector<P2> verts(k);
    for (Int i = 0; i < k; ++i) {
      Int a = ra.boundary_order[i], b = ra.boundary_order[(i + 1) % k];
      if (pair_angle(scene.region[a], scene.region[b]).kind == PairKind::intersecting)
        verts[i] = crossing_point(scene.region[a], scene.region[b]);
      else
        verts[i] = to_double(shared_ideal(geo[a], geo[b]));
    }
    std::string d = "M " + xy(user(verts[k - 1]));
    for (Int i = 0; i < k; ++i) {
      const DiskGeodesic& g = geo[ra.boundary_order[i]];
      P2 from = user(verts[(i + k - 1) % k]);
      P2 to = user(verts[i]);
      if (g.is_diameter) {
        d += " L " + xy(to);
      } else {
        P2 c = user({g.cx, g.cy});
        std::string r = fmt(100 * g.radius);
        d += " A " + r + " " + r + " 0 0 " + std::to_string(arc_sweep(c, from, to)) + " " + xy(to);
      }
    }
    d += " Z";
    svg += "<path d=\"" + d + "\" fill=\"" + kRegionFill + "\" stroke=\"none\"/>\n";
  }

  for (const SymMat2& r : scene.geodesic_roots) {
    DiskGeodesic g = project_root_line(r);
    P2 p1 = user(to_double(g.end1)), p2 = user(to_double(g.end2));
    if (g.is_diameter) {
      svg += "<line x1=\"" + fmt(p1.x) + "\" y1=\"" + fmt(p1.y) + "\" x2=\"" + fmt(p2.x) +
             "\" y2=\"" + fmt(p2.y) + "\" stroke=\"" + kLineStroke +
             "\" stroke-width=\"0.7\"/>\n";
    } else {
      P2 c = user({g.cx, g.cy});
      std::string rr = fmt(100 * g.radius);
      svg += "<path d=\"M " + xy(p1) + " A " + rr + " " + rr + " 0 0 " +
             std::to_string(arc_sweep(c, p1, p2)) + " " + xy(p2) + "\" fill=\"none\" stroke=\"" +
             kLineStroke + "\" stroke-width=\"0.7\"/>\n";
    }
  }

  svg += "<circle cx=\"0\" cy=\"0\" r=\"100\" fill=\"none\" stroke=\"" +
         std::string(kCircleStroke) + "\" stroke-width=\"1.2\"/>\n";

  if (scene.show_labels) {
    for (size_t i = 0; i < scene.geodesic_roots.size(); ++i) {
      if (scene.labels[i].empty()) continue;
      DiskGeodesic g = project_root_line(scene.geodesic_roots[i]);
      P2 anchor;
      if (g.is_diameter) {
        P2 e = to_double(g.end2);
        anchor = {e.x * 1.08, e.y * 1.08};
      } else {
        P2 e1 = to_double(g.end1), e2 = to_double(g.end2);
        double mx = e1.x + e2.x, my = e1.y + e2.y;
        double n = std::hypot(mx, my);
        anchor = {mx / n * 1.08, my / n * 1.08};
      }
      P2 a = user(anchor);
      svg += "<text x=\"" + fmt(a.x) + "\" y=\"" + fmt(a.y) +
             "\" font-family=\"monospace\" font-size=\"7\" fill=\"" + kTextFill +
             "\" text-anchor=\"middle\" dominant-baseline=\"middle\">" +
             escape_text(scene.labels[i]) + "</text>\n";
    }
  }

  svg += "</svg>\n";
  return svg;
}

}  // namespace km
