// Laurent polynomials in x (rational exponents) and y (nonnegative integer
// exponents) with exact rational coefficients.
#pragma once

#include <map>
#include <vector>

#include "jnp/lattice.hpp"

namespace jnp {

struct LKey {
  Q xe;
  Z ye;
};

inline bool operator==(const LKey& a, const LKey& b) { return a.xe == b.xe && a.ye == b.ye; }

// decreasing y-exponent, then decreasing x-exponent: canonical term order
struct LKeyLess {
  bool operator()(const LKey& a, const LKey& b) const {
    int c = cmp(a.ye, b.ye);
    if (c != 0) return c > 0;
    return cmp(a.xe, b.xe) > 0;
  }
};

class LaurentPoly {
public:
  using TermMap = std::map<LKey, Q, LKeyLess>;

  LaurentPoly() = default;
  static LaurentPoly constant(const Q& c);
  // coef * x^xe * y^ye; ye must be >= 0
  static LaurentPoly term(const Q& coef, const Q& xe, const Z& ye);

  bool is_zero() const { return t_.empty(); }
  size_t term_count() const { return t_.size(); }
  const TermMap& terms() const { return t_; }
  // smallest l >= 1 with all x-exponents in (1/l) Z
  Z level() const;
  Q coeff_at(const Q& xe, const Z& ye) const;
  void add_term(const Q& coef, const Q& xe, const Z& ye);

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly scaled(const Q& s) const;
  LaurentPoly pow(unsigned long e) const;
  bool operator==(const LaurentPoly& o) const { return t_ == o.t_; }
  bool operator!=(const LaurentPoly& o) const { return !(t_ == o.t_); }

  std::vector<Point> support() const;

private:
  TermMap t_;
};

enum class Axis { x, y };

// max of val(d, .) over the support; errors with ZeroPolynomial.
Q v_deg(const Dir& d, const LaurentPoly& p);

// terms of maximal valuation in direction d
LaurentPoly leading_form(const Dir& d, const LaurentPoly& p);

// Endpoints of the leading form: st minimizes the inner product with
// (-sigma, rho) over the leading support, en maximizes it.
std::pair<Point, Point> st_en(const Dir& d, const LaurentPoly& p);

// Directions whose leading form keeps more than one term: the outward
// normals of the Newton polygon edges, in counterclockwise angular order
// starting at (1,0).
std::vector<Dir> dir_set(const LaurentPoly& p);

LaurentPoly differentiate(const LaurentPoly& p, Axis axis);

// Errors with NotInImage when integrating x^-1 terms along x.
LaurentPoly integrate(const LaurentPoly& p, Axis axis);

// D_x(p) D_y(q) - D_x(q) D_y(p)
LaurentPoly bracket(const LaurentPoly& p, const LaurentPoly& q);

// y |-> y + c * x^e; e * level(p) must be an integer.
LaurentPoly subst_y_shift(const LaurentPoly& p, const Q& c, const Q& e);

// y |-> eta(x); eta must not involve y.
LaurentPoly eval_y(const LaurentPoly& p, const LaurentPoly& eta);

// val in direction (1,-1), the quantity the corner enumeration budgets on.
Q v11(const LaurentPoly& p);

bool dir_angle_less(const Dir& a, const Dir& b);

}  // namespace jnp
