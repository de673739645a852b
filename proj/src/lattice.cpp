#include "jnp/lattice.hpp"

#include <algorithm>

namespace jnp {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ok: return "Ok";
    case Errc::degenerate_point: return "DegeneratePoint";
    case Errc::out_of_arc: return "OutOfArc";
    case Errc::empty_support: return "EmptySupport";
    case Errc::zero_polynomial: return "ZeroPolynomial";
    case Errc::not_in_image: return "NotInImage";
    case Errc::not_closed: return "NotClosed";
    case Errc::not_homogeneous: return "NotHomogeneous";
    case Errc::not_in_l: return "NotInL";
    case Errc::bad_direction: return "BadDirection";
    case Errc::direction_mismatch: return "DirectionMismatch";
    case Errc::not_companion: return "NotCompanion";
    case Errc::hypothesis_violated: return "HypothesisViolated";
    case Errc::non_divisible: return "NonDivisible";
    case Errc::bad_start: return "BadStart";
    case Errc::bad_params: return "BadParams";
    case Errc::edge_rejected: return "EdgeRejected";
    case Errc::no_common_root: return "NoCommonRoot";
    case Errc::ratio_mismatch: return "RatioMismatch";
    case Errc::hypothesis_unmet: return "HypothesisUnmet";
    case Errc::not_anchored: return "NotAnchored";
    case Errc::not_divisible: return "NotDivisible";
    case Errc::power_root_failed: return "PowerRootFailed";
    case Errc::parse_error: return "ParseError";
    case Errc::bad_input: return "BadInput";
  }
  return "Unknown";
}

bool point_lex_less(const Point& a, const Point& b) {
  int c = cmp(a.x, b.x);
  if (c != 0) return c < 0;
  return cmp(a.y, b.y) < 0;
}

Dir make_dir(const Z& rho, const Z& sigma) {
  if (rho == 0 && sigma == 0) fail(Errc::bad_input, "direction (0,0)");
  Z g = z_gcd(rho, sigma);
  return Dir{rho / g, sigma / g};
}

Q val(const Dir& d, const Point& p) { return Q(d.rho) * p.x + Q(d.sigma) * p.y; }

Z cross(const Dir& a, const Dir& b) { return a.rho * b.sigma - a.sigma * b.rho; }

Dir dir_of(const Point& p) {
  if (p.x == p.y) fail(Errc::degenerate_point, "point on the diagonal");
  Z l = z_lcm(p.x.get_den(), p.y.get_den());
  Z a = Z(p.x * l);
  Z b = Z(p.y * l);
  return make_dir(-b, a);
}

bool in_order_arc(const Dir& d) { return d.rho >= 0 && d.sigma <= 0; }

bool in_lower_arc(const Dir& d) { return d.rho >= 1 && d.rho + d.sigma < 0; }

bool dir_lt(const Dir& a, const Dir& b) {
  if (!in_order_arc(a) || !in_order_arc(b))
    fail(Errc::out_of_arc, "dir_lt outside the (0,-1)..(1,0) arc");
  return cross(a, b) > 0;
}

namespace {

Q cross3(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

Dir outward_normal(const Point& a, const Point& b) {
  Q dx = b.x - a.x;
  Q dy = b.y - a.y;
  Z l = z_lcm(dx.get_den(), dy.get_den());
  return make_dir(Z(dy * l), Z(-dx * l));
}

}  // namespace

std::vector<Point> newton_polygon(std::vector<Point> support) {
  if (support.empty()) fail(Errc::empty_support, "newton_polygon of nothing");
  std::sort(support.begin(), support.end(), point_lex_less);
  support.erase(std::unique(support.begin(), support.end()), support.end());
  size_t n = support.size();
  if (n == 1) return support;
  std::vector<Point> hull(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross3(hull[k - 2], hull[k - 1], support[i]) <= 0) --k;
    hull[k++] = support[i];
  }
  size_t lower = k + 1;
  for (size_t i = n - 1; i-- > 0;) {
    while (k >= lower && cross3(hull[k - 2], hull[k - 1], support[i]) <= 0) --k;
    hull[k++] = support[i];
  }
  hull.resize(k - 1);
  return hull;
}

std::vector<HullEdge> hull_edges(const std::vector<Point>& corners) {
  std::vector<HullEdge> out;
  if (corners.size() < 2) return out;
  if (corners.size() == 2) {
    out.push_back({corners[0], corners[1], outward_normal(corners[0], corners[1])});
    out.push_back({corners[1], corners[0], outward_normal(corners[1], corners[0])});
  } else {
    for (size_t i = 0; i < corners.size(); ++i) {
      const Point& a = corners[i];
      const Point& b = corners[(i + 1) % corners.size()];
      out.push_back({a, b, outward_normal(a, b)});
    }
  }
  // Normalize each stored edge so `a` carries the smaller y (ties by x).
  for (auto& e : out) {
    int c = cmp(e.a.y, e.b.y);
    if (c > 0 || (c == 0 && cmp(e.a.x, e.b.x) > 0)) std::swap(e.a, e.b);
  }
  return out;
}

std::vector<HullEdge> lower_side_edges(const std::vector<Point>& corners) {
  std::vector<HullEdge> out;
  for (auto& e : hull_edges(corners))
    if (in_lower_arc(e.dir)) out.push_back(e);
  std::sort(out.begin(), out.end(),
            [](const HullEdge& l, const HullEdge& r) { return dir_lt(l.dir, r.dir); });
  return out;
}

}  // namespace jnp
