// Graded forms: homogeneous Laurent polynomials for a direction (rho, sigma)
// with rho >= 1 > -1 >= sigma, their companion equation [G,R] = R^i, the
// multiplicity dichotomy, exponent reduction, direction feasibility and
// witness search.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>

#include "jnp/laurent.hpp"
#include "jnp/qpoly.hpp"

namespace jnp {

// x^alpha y^beta fhat(w) with w = x^(-sigma) y^rho and fhat(0) != 0.
struct HomogForm {
  Dir d;
  Z alpha;
  Z beta;
  QPoly fhat;
};

LaurentPoly to_poly(const HomogForm& h);

// Errors: BadDirection (rho < 1 or sigma > -1), NotInL (fractional
// x-exponents), NotHomogeneous (zero or mixed valuations).
HomogForm from_poly(const LaurentPoly& p, const Dir& d);

// valuation u = rho*alpha + sigma*beta
Z u_of(const HomogForm& h);
Point st_of(const HomogForm& h);
Point en_of(const HomogForm& h);
// degree of fhat
Z n1_of(const HomogForm& h);
// gcd(alpha, beta)
Z n2_of(const HomogForm& h);

// r(z) = z^beta * fhat(z^rho), the one-variable shadow along the edge
QPoly z_poly(const HomogForm& h);

bool homog_equal(const HomogForm& a, const HomogForm& b);

// rho * r^i - (v r' g - u g' r) in z; zero exactly when [G,R] = R^i.
// Errors: DirectionMismatch when the forms carry different directions.
QPoly central_residual(const HomogForm& R, const HomogForm& G, unsigned long i);

// Some G with [G,R] = R^i, or nullopt when none exists. The direction must
// lie in the open arc between (0,-1) and (1,-1) (error BadDirection).
std::optional<HomogForm> solve_companion(const HomogForm& R, unsigned long i);

// Maximal k with F = R0^k exactly; k divides gcd(alpha, beta) and the
// squarefree-exponent gcd of fhat, and the content must have a rational
// k-th root. Errors as from_poly.
std::pair<HomogForm, unsigned long> power_free_root(const LaurentPoly& F, const Dir& d);

// One record per irreducible factor of r over the closure: the factor w
// stands in for the variable z itself (present when beta_R > 0), s and t are
// the multiplicities in R and G. Tag A: t = s(i-1)+1. Tag B: u t = v s
// (chosen when both hold).
struct MultiplicityRecord {
  bool factor_is_z = false;
  QPoly factor;  // monic irreducible in w; ignored when factor_is_z
  Z s;
  Z t;
  char tag = '?';
};

// Errors: DirectionMismatch, NotCompanion (when [G,R] != R^i).
std::vector<MultiplicityRecord> multiplicity_classify(const HomogForm& R, const HomogForm& G,
                                                      unsigned long i);

// Number of distinct irreducible factors of r over the algebraic closure:
// (beta > 0) + rho * deg(squarefree part of fhat).
Z closure_factor_count(const HomogForm& h);

// From [G1,R] = R^i produce G2 with [G2,R] = R^n. Multiplies by R^(n-i)
// when n >= i; divides otherwise, requiring (n-1)u + rho + sigma >= 0
// (error HypothesisViolated) and exact divisibility (error NonDivisible).
// Errors: DirectionMismatch, NotCompanion on invalid input.
HomogForm reduce_exponent(const HomogForm& R, const HomogForm& G1, unsigned long i,
                          unsigned long n);

enum class CaseTag { case1, case2, case3 };

struct DirCandidate {
  Dir d;
  CaseTag tag;
  Z s;       // case2: minimal multiplicity sum
  Z tprime;  // case2/case3: companion parameter
  Z gamma;   // case3: divisor of gcd(alpha, beta)
};

// Finite search window: rho <= rho_max and -rho-sigma <= span_max. The
// case-1 family (beta = 0, rho = 1) is unbounded in sigma; entries are
// emitted per direction inside the window only.
struct DirWindow {
  Z rho_max;
  Z span_max;
};

// Feasible next directions from a corner st = (alpha, beta), alpha > beta
// >= 0 (error BadStart), strictly above prev when given, valuation at least
// rho. Case2 needs its minimal multiplicity sum within m_max.
std::vector<DirCandidate> candidate_directions(const Point& st, const Z& m_max,
                                               const std::optional<Dir>& prev,
                                               const DirWindow& window);

// Named witness families:
//   intro  (a, b)                 dir (1,-1), i = 2
//   ejemplo(k, j)                 dir (1,-2), i = 2
//   caso2  (n)                    dir (n,-(n+1)), i = 2
//   case1  (u, j, i, sigma, lambda) dir (1, sigma), fhat = (w-lambda)^j
//   case3  ()                     dir (5,-8), i = 2
// Returns (R, G, i) with [G,R] = R^i exactly. Errors: BadParams.
std::tuple<HomogForm, HomogForm, unsigned long> family_witness(
    const std::string& name, const std::map<std::string, Q>& params);

struct SearchConfig {
  std::vector<Q> pool;
  unsigned long i_max = 4;
  SearchConfig();
};

// Witness for the edge st -> st + steps*(-sigma, rho): tries every monic
// fhat = prod (w - lambda)^(s_lambda) with lambda from the pool and total
// multiplicity `steps`, each with i = 2..i_max, smallest factor sets first.
// Errors with EdgeRejected when the edge fails the feasibility arithmetic;
// returns nullopt when the pool is exhausted.
std::optional<std::tuple<HomogForm, HomogForm, unsigned long>> witness_search(
    const Point& st, const Dir& d, const Z& steps, const SearchConfig& cfg);

}  // namespace jnp
