#include "jnp/laurent.hpp"

#include <algorithm>

namespace jnp {

LaurentPoly LaurentPoly::constant(const Q& c) {
  LaurentPoly p;
  p.add_term(c, Q(0), Z(0));
  return p;
}

LaurentPoly LaurentPoly::term(const Q& coef, const Q& xe, const Z& ye) {
  LaurentPoly p;
  p.add_term(coef, xe, ye);
  return p;
}

void LaurentPoly::add_term(const Q& coef, const Q& xe, const Z& ye) {
  if (ye < 0) fail(Errc::bad_input, "negative y exponent");
  if (coef == 0) return;
  LKey k{xe, ye};
  auto it = t_.find(k);
  if (it == t_.end()) {
    t_.emplace(k, coef);
  } else {
    it->second += coef;
    if (it->second == 0) t_.erase(it);
  }
}

Z LaurentPoly::level() const {
  Z l(1);
  for (const auto& [k, c] : t_) l = z_lcm(l, k.xe.get_den());
  return l;
}

Q LaurentPoly::coeff_at(const Q& xe, const Z& ye) const {
  auto it = t_.find(LKey{xe, ye});
  return it == t_.end() ? Q(0) : it->second;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [k, c] : r.t_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [k, c] : o.t_) r.add_term(c, k.xe, k.ye);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [k, c] : o.t_) r.add_term(-c, k.xe, k.ye);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [ka, ca] : t_)
    for (const auto& [kb, cb] : o.t_) r.add_term(ca * cb, ka.xe + kb.xe, ka.ye + kb.ye);
  return r;
}

LaurentPoly LaurentPoly::scaled(const Q& s) const {
  if (s == 0) return LaurentPoly();
  LaurentPoly r = *this;
  for (auto& [k, c] : r.t_) c *= s;
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned long e) const {
  LaurentPoly r = LaurentPoly::constant(Q(1));
  LaurentPoly base = *this;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

std::vector<Point> LaurentPoly::support() const {
  std::vector<Point> s;
  s.reserve(t_.size());
  for (const auto& [k, c] : t_) s.push_back(Point{k.xe, Q(k.ye)});
  return s;
}

Q v_deg(const Dir& d, const LaurentPoly& p) {
  if (p.is_zero()) fail(Errc::zero_polynomial, "v_deg of zero");
  bool first = true;
  Q best(0);
  for (const auto& [k, c] : p.terms()) {
    Q v = Q(d.rho) * k.xe + Q(d.sigma) * Q(k.ye);
    if (first || v > best) {
      best = v;
      first = false;
    }
  }
  return best;
}

LaurentPoly leading_form(const Dir& d, const LaurentPoly& p) {
  Q best = v_deg(d, p);
  LaurentPoly r;
  for (const auto& [k, c] : p.terms())
    if (Q(d.rho) * k.xe + Q(d.sigma) * Q(k.ye) == best) r.add_term(c, k.xe, k.ye);
  return r;
}

std::pair<Point, Point> st_en(const Dir& d, const LaurentPoly& p) {
  LaurentPoly lf = leading_form(d, p);
  bool first = true;
  Point lo{}, hi{};
  Q lo_key(0), hi_key(0);
  for (const auto& [k, c] : lf.terms()) {
    // inner product with the traversal direction (-sigma, rho)
    Q key = Q(-d.sigma) * k.xe + Q(d.rho) * Q(k.ye);
    Point pt{k.xe, Q(k.ye)};
    if (first) {
      lo = hi = pt;
      lo_key = hi_key = key;
      first = false;
    } else if (key < lo_key) {
      lo = pt;
      lo_key = key;
    } else if (key > hi_key) {
      hi = pt;
      hi_key = key;
    }
  }
  return {lo, hi};
}

bool dir_angle_less(const Dir& a, const Dir& b) {
  auto quadrant = [](const Dir& d) {
    if (d.rho > 0 && d.sigma >= 0) return 0;
    if (d.rho <= 0 && d.sigma > 0) return 1;
    if (d.rho < 0 && d.sigma <= 0) return 2;
    return 3;
  };
  int qa = quadrant(a), qb = quadrant(b);
  if (qa != qb) return qa < qb;
  return cross(a, b) > 0;
}

std::vector<Dir> dir_set(const LaurentPoly& p) {
  std::vector<Dir> out;
  if (p.is_zero()) return out;
  auto corners = newton_polygon(p.support());
  for (const auto& e : hull_edges(corners)) out.push_back(e.dir);
  std::sort(out.begin(), out.end(), dir_angle_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

LaurentPoly differentiate(const LaurentPoly& p, Axis axis) {
  LaurentPoly r;
  for (const auto& [k, c] : p.terms()) {
    if (axis == Axis::x) {
      if (k.xe != 0) r.add_term(c * k.xe, k.xe - 1, k.ye);
    } else {
      if (k.ye != 0) r.add_term(c * Q(k.ye), k.xe, k.ye - 1);
    }
  }
  return r;
}

LaurentPoly integrate(const LaurentPoly& p, Axis axis) {
  LaurentPoly r;
  for (const auto& [k, c] : p.terms()) {
    if (axis == Axis::x) {
      if (k.xe == -1) fail(Errc::not_in_image, "x^-1 term has no polynomial primitive");
      r.add_term(c / (k.xe + 1), k.xe + 1, k.ye);
    } else {
      r.add_term(c / Q(k.ye + 1), k.xe, k.ye + 1);
    }
  }
  return r;
}

LaurentPoly bracket(const LaurentPoly& p, const LaurentPoly& q) {
  return differentiate(p, Axis::x) * differentiate(q, Axis::y) -
         differentiate(q, Axis::x) * differentiate(p, Axis::y);
}

LaurentPoly subst_y_shift(const LaurentPoly& p, const Q& c, const Q& e) {
  if (!is_integer(Q(e * p.level()))) fail(Errc::bad_input, "shift exponent outside the level lattice");
  LaurentPoly r;
  for (const auto& [k, coef] : p.terms()) {
    unsigned long b = k.ye.get_ui();
    Q ck(1);
    for (unsigned long j = 0; j <= b; ++j) {
      // binomial(b, j) * c^j
      Z bin;
      mpz_bin_uiui(bin.get_mpz_t(), b, j);
      r.add_term(coef * Q(bin) * ck, k.xe + e * Q(j), Z(b - j));
      ck *= c;
    }
  }
  return r;
}

LaurentPoly eval_y(const LaurentPoly& p, const LaurentPoly& eta) {
  for (const auto& [k, c] : eta.terms())
    if (k.ye != 0) fail(Errc::bad_input, "substitution body involves y");
  LaurentPoly r;
  for (const auto& [k, c] : p.terms()) {
    LaurentPoly t = LaurentPoly::term(c, k.xe, Z(0)) * eta.pow(k.ye.get_ui());
    r = r + t;
  }
  return r;
}

Q v11(const LaurentPoly& p) { return v_deg(Dir{1, -1}, p); }

}  // namespace jnp
