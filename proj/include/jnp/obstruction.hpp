// Audits for purported Jacobian pairs: the corrected antiderivative of the
// bracket, exact-form primitives, the slope-one exclusion, the edge
// obstruction resultant, and common-root extraction from leading forms.
#pragma once

#include <string>
#include <vector>

#include "jnp/homog.hpp"

namespace jnp {

// Coef_{x^-1 y^0}(Q D_x(P)) x^-1 + integral_y [P,Q]. Satisfies
// D_y(tilde_j(P,Q)) = [P,Q], and tilde_j(P,Q) - Q D_x(P) has no x^-1 terms.
LaurentPoly tilde_j(const LaurentPoly& p, const LaurentPoly& q);

// H with D_x(H) = g and D_y(H) = f, up to an additive constant. Errors:
// NotClosed when D_y(g) != D_x(f), NotInImage when g carries x^-1 terms.
LaurentPoly exact_primitive(const LaurentPoly& g, const LaurentPoly& f);

// Hull edges of Supp(P) with slope one. A segment support reports a single
// record with direction (1,-1). Errors: ZeroPolynomial.
std::vector<HullEdge> slope_one_audit(const LaurentPoly& p);

struct ObstructionResult {
  Q resultant;
  bool obstructed = false;  // nonzero resultant: no common root can exist
};

// Resultant of the y-exponent dehomogenizations of the d-leading forms of P
// and of tilde_j(P,Q). Errors with HypothesisUnmet unless d is in Dir(P),
// rho != 0, and v_deg(d, tilde_j(P,Q)) = -rho.
ObstructionResult edge_obstruction_test(const LaurentPoly& p, const LaurentPoly& q, const Dir& d);

struct PairRoot {
  HomogForm root;  // monic common root R
  unsigned long m = 1;
  unsigned long n = 1;
  Q lambda_p;  // leading form of P = lambda_p * R^m
  Q lambda_q;  // leading form of Q = lambda_q * R^n
};

// Common-root extraction: m/n = v_deg(d,P)/v_deg(d,Q) in lowest terms.
// Errors: RatioMismatch when that ratio is not a ratio of two positive
// integers, NoCommonRoot when the leading forms are not powers of one root.
PairRoot pair_leading_root(const LaurentPoly& p, const LaurentPoly& q, const Dir& d);

// Necessary-condition report for a pair: nonconstant bracket, slope-one
// edges of either polygon, forbidden corners on directions strictly between
// (1,-1) and (1,0), and lower-side directions where the common-root power m
// breaks m * rho <= v_deg(d, P). Empty list: all checks pass.
std::vector<std::string> pair_polygon_audit(const LaurentPoly& p, const LaurentPoly& q);

}  // namespace jnp
