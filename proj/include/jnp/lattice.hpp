// Exponent-plane primitives: points, directions, valuations, Newton polygons.
#pragma once

#include <vector>

#include "jnp/error.hpp"
#include "jnp/rational.hpp"

namespace jnp {

struct Point {
  Q x;
  Q y;
};

inline bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
inline bool operator!=(const Point& a, const Point& b) { return !(a == b); }
inline Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }

// (x, then y) ordering, used for canonical point lists.
bool point_lex_less(const Point& a, const Point& b);

// Primitive integer pair (rho, sigma), never (0, 0).
struct Dir {
  Z rho;
  Z sigma;
};

inline bool operator==(const Dir& a, const Dir& b) { return a.rho == b.rho && a.sigma == b.sigma; }
inline bool operator!=(const Dir& a, const Dir& b) { return !(a == b); }

// Normalizes (rho, sigma) by its positive gcd. Errors on (0, 0).
Dir make_dir(const Z& rho, const Z& sigma);

// val(d, p) = rho * p.x + sigma * p.y
Q val(const Dir& d, const Point& p);

// cross((r1,s1),(r2,s2)) = r1*s2 - s1*r2
Z cross(const Dir& a, const Dir& b);

// The direction orthogonal to p, oriented so val(dir_of(p), p) = 0 with
// dir_of((2,1)) = (-1,2). Errors with DegeneratePoint when p lies on the
// diagonal through (1,1), including p = 0.
Dir dir_of(const Point& p);

// Strict order on the closed arc from (0,-1) to (1,0): rho >= 0, sigma <= 0.
// Errors with OutOfArc when either argument leaves the arc.
bool dir_lt(const Dir& a, const Dir& b);

// Open arc from (0,-1) to (1,-1): rho >= 1 and rho + sigma < 0.
bool in_lower_arc(const Dir& d);

// Closed-arc membership test used by dir_lt.
bool in_order_arc(const Dir& d);

// Convex hull corners, counterclockwise, starting at the lexicographically
// least corner. Collinear supports give the two extreme points, a single
// point gives one corner. Errors with EmptySupport on an empty list.
std::vector<Point> newton_polygon(std::vector<Point> support);

struct HullEdge {
  Point a;  // endpoint with the smaller y-coordinate
  Point b;
  Dir dir;  // primitive outward normal
};

// Hull edges whose outward normal lies in the open arc from (0,-1) to
// (1,-1), sorted by dir_lt. A segment polygon is tried in both orientations;
// a point polygon has no edges.
std::vector<HullEdge> lower_side_edges(const std::vector<Point>& corners);

// All hull edges with their outward normals, counterclockwise. For a segment
// polygon both orientations are reported, for a point none.
std::vector<HullEdge> hull_edges(const std::vector<Point>& corners);

}  // namespace jnp
