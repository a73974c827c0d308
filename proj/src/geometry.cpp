#include "iabsim/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace iabsim {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Liang-Barsky slab clip against one open slab |coord| < half. Returns false
// when the segment cannot intersect the open slab; otherwise narrows
// [t0, t1]. p is the segment direction component, q0 the start coordinate.
bool clip_open_slab(double p, double q0, double half, double& t0, double& t1) {
  if (p == 0.0) {
    // Parallel to the slab: inside only if strictly between the faces, so a
    // segment running along a face counts as outside (open convention).
    return q0 > -half && q0 < half;
  }
  double ta = (-half - q0) / p;
  double tb = (half - q0) / p;
  if (ta > tb) std::swap(ta, tb);
  if (ta > t0) t0 = ta;
  if (tb < t1) t1 = tb;
  return t0 < t1;
}

}  // namespace

double distance(const Point& a, const Point& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

bool Region::contains(const Point& p) const {
  return p.x >= origin.x && p.x <= origin.x + width && p.y >= origin.y &&
         p.y <= origin.y + height;
}

TreeField sample_tree_field(const Region& region, double density,
                            double line_length, double line_width,
                            double in_leaf_probability, RandomStream& rng,
                            const double* fixed_orientation) {
  if (!(density >= 0.0) || !std::isfinite(density)) {
    throw std::invalid_argument("tree-line density must be finite and >= 0");
  }
  if (in_leaf_probability < 0.0 || in_leaf_probability > 1.0) {
    throw std::invalid_argument("in_leaf_probability must be in [0, 1]");
  }
  TreeField field;
  field.density = density;
  const std::uint64_t count = rng.poisson(density * region.area());
  field.lines.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    TreeLine line;
    line.center.x = region.origin.x + rng.uniform() * region.width;
    line.center.y = region.origin.y + rng.uniform() * region.height;
    line.orientation =
        fixed_orientation ? *fixed_orientation : rng.uniform() * kPi;
    line.length = line_length;
    line.width = line_width;
    line.in_leaf = rng.uniform() < in_leaf_probability;
    field.lines.push_back(line);
  }
  return field;
}

std::vector<Point> sample_uniform_points(const Region& region, std::size_t n,
                                         RandomStream& rng) {
  std::vector<Point> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    pts.push_back({region.origin.x + rng.uniform() * region.width,
                   region.origin.y + rng.uniform() * region.height});
  }
  return pts;
}

double segment_strip_chord(const Point& a, const Point& b,
                           const TreeLine& line) {
  const double seg_len = distance(a, b);
  if (seg_len == 0.0) {
    throw std::invalid_argument("link endpoints must be distinct");
  }
  // Transform into the strip frame: origin at the strip center, x along the
  // strip length, y across its width.
  const double c = std::cos(line.orientation);
  const double s = std::sin(line.orientation);
  const double ax = a.x - line.center.x;
  const double ay = a.y - line.center.y;
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double lx = c * ax + s * ay;
  const double ly = -s * ax + c * ay;
  const double lpx = c * dx + s * dy;
  const double lpy = -s * dx + c * dy;

  double t0 = 0.0;
  double t1 = 1.0;
  if (!clip_open_slab(lpx, lx, line.length / 2.0, t0, t1)) return 0.0;
  if (!clip_open_slab(lpy, ly, line.width / 2.0, t0, t1)) return 0.0;
  return (t1 - t0) * seg_len;
}

VegetationDepth vegetation_depth(const Point& a, const Point& b,
                                 const TreeField& field) {
  VegetationDepth depth;
  for (const TreeLine& line : field.lines) {
    const double chord = segment_strip_chord(a, b, line);
    if (line.in_leaf) {
      depth.in_leaf_m += chord;
    } else {
      depth.out_of_leaf_m += chord;
    }
  }
  return depth;
}

bool is_los(const Point& a, const Point& b, const TreeField& field) {
  return vegetation_depth(a, b, field).total() == 0.0;
}

}  // namespace iabsim
