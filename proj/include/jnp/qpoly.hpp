// Dense univariate polynomials over the rationals, with exact gcd,
// squarefree decomposition, irreducible factorization, resultants and
// perfect-power roots.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "jnp/error.hpp"
#include "jnp/rational.hpp"

namespace jnp {

class QPoly {
public:
  QPoly() = default;
  explicit QPoly(const Q& constant) {
    if (constant != 0) c_.push_back(constant);
  }
  static QPoly from_coeffs(std::vector<Q> coeffs);
  static QPoly monomial(const Q& coef, size_t degree);

  int deg() const { return (int)c_.size() - 1; }
  bool is_zero() const { return c_.empty(); }
  // Lowest nonzero exponent; -1 for the zero polynomial.
  int ord() const;
  const Q& coeff(size_t i) const;
  const Q& lc() const { return c_.back(); }
  const std::vector<Q>& coeffs() const { return c_; }

  QPoly operator-() const;
  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  QPoly scaled(const Q& s) const;
  QPoly shifted(size_t k) const;  // * w^k
  QPoly pow(unsigned long e) const;
  bool operator==(const QPoly& o) const { return c_ == o.c_; }
  bool operator!=(const QPoly& o) const { return !(c_ == o.c_); }

  QPoly derivative() const;
  Q eval(const Q& at) const;
  // f(c * w)
  QPoly compose_scale(const Q& c) const;
  // f(w^k), k >= 1
  QPoly compose_power(unsigned long k) const;

private:
  void trim();
  std::vector<Q> c_;
};

// Quotient and remainder; divisor must be nonzero.
std::pair<QPoly, QPoly> divrem(const QPoly& a, const QPoly& b);
// Errors with BadInput when the division leaves a remainder.
QPoly exact_div(const QPoly& a, const QPoly& b);
bool divides_poly(const QPoly& d, const QPoly& a);

// Monic gcd; gcd(0,0) = 0.
QPoly gcd_monic(const QPoly& a, const QPoly& b);

// a = content * primitive, primitive integral with positive leading
// coefficient and coprime coefficients. content(0) = 0.
Q content(const QPoly& a);
QPoly primitive_part(const QPoly& a);

// Yun decomposition: a = lc * prod parts[i].first ^ parts[i].second with
// monic squarefree pairwise-coprime parts and strictly increasing exponents.
struct SquarefreeDecomposition {
  Q unit;
  std::vector<std::pair<QPoly, int>> parts;
};
SquarefreeDecomposition squarefree_decomposition(const QPoly& a);

// Irreducible factorization over the rationals:
// a = unit * prod factors[i].first ^ factors[i].second, factors monic
// irreducible, sorted by (degree, coefficients).
struct Factorization {
  Q unit;
  std::vector<std::pair<QPoly, int>> factors;
};
Factorization factor(const QPoly& a);

Q resultant(const QPoly& a, const QPoly& b);

// Monic g with g^n == a, when it exists.
std::optional<QPoly> monic_nth_root(const QPoly& a, unsigned long n);

// gcd of the exponents in the squarefree decomposition; 0 for constants.
unsigned long squarefree_exponent_gcd(const QPoly& a);

std::string to_string(const QPoly& a, const std::string& var = "w");

}  // namespace jnp
