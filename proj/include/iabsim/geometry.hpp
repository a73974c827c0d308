#pragma once

#include <vector>

#include "iabsim/rng.hpp"

namespace iabsim {

struct Point {
  double x = 0.0;  // meters
  double y = 0.0;  // meters
};

double distance(const Point& a, const Point& b);

struct Region {
  double width = 0.0;   // meters
  double height = 0.0;  // meters
  Point origin;         // lower-left corner

  double area() const { return width * height; }
  bool contains(const Point& p) const;
};

// A tree line is a rectangular strip: length along its orientation axis,
// width across it, centered on `center`. The in-leaf flag selects which
// vegetation-loss branch applies to crossings.
struct TreeLine {
  Point center;
  double orientation = 0.0;  // radians in [0, pi)
  double length = 0.0;       // meters
  double width = 0.0;        // meters
  bool in_leaf = false;
};

struct TreeField {
  std::vector<TreeLine> lines;
  double density = 0.0;  // per square meter
};

struct VegetationDepth {
  double in_leaf_m = 0.0;
  double out_of_leaf_m = 0.0;

  double total() const { return in_leaf_m + out_of_leaf_m; }
};

// Poisson-distributed line count (mean density*area), centers uniform in the
// region, orientations uniform on [0, pi) unless fixed_orientation points to
// a value, leaf states independent Bernoulli(in_leaf_probability).
TreeField sample_tree_field(const Region& region, double density,
                            double line_length, double line_width,
                            double in_leaf_probability, RandomStream& rng,
                            const double* fixed_orientation = nullptr);

std::vector<Point> sample_uniform_points(const Region& region, std::size_t n,
                                         RandomStream& rng);

// Length of segment (a, b) inside the strip of `line`. Strip boundaries are
// open: a segment that only grazes the boundary returns 0.
double segment_strip_chord(const Point& a, const Point& b,
                           const TreeLine& line);

VegetationDepth vegetation_depth(const Point& a, const Point& b,
                                 const TreeField& field);

// True iff the link crosses no vegetation at all.
bool is_los(const Point& a, const Point& b, const TreeField& field);

}  // namespace iabsim
