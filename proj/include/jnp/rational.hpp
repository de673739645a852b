// Thin helpers over GMP's mpq_class / mpz_class.
#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace jnp {

using Z = mpz_class;
using Q = mpq_class;

inline Q make_q(const Z& num, const Z& den) {
  Q r(num, den);
  r.canonicalize();
  return r;
}

inline Z z_gcd(const Z& a, const Z& b) {
  Z r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Z z_lcm(const Z& a, const Z& b) {
  Z r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline bool is_integer(const Q& q) { return q.get_den() == 1; }

inline Z floor_div(const Z& a, const Z& b) {
  Z r;
  mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Z ceil_div(const Z& a, const Z& b) {
  Z r;
  mpz_cdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline bool divides(const Z& d, const Z& a) {
  if (d == 0) return a == 0;
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Z z_pow(const Z& base, unsigned long e) {
  Z r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Q q_pow(const Q& base, long e) {
  if (e >= 0) {
    Z n = base.get_num(), d = base.get_den();
    return make_q(z_pow(n, (unsigned long)e), z_pow(d, (unsigned long)e));
  }
  Z n = base.get_num(), d = base.get_den();
  return make_q(z_pow(d, (unsigned long)(-e)), z_pow(n, (unsigned long)(-e)));
}

// Exact integer n-th root; nullopt when `a` is not a perfect n-th power.
inline std::optional<Z> z_nth_root(const Z& a, unsigned long n) {
  if (n == 0) return std::nullopt;
  if (a < 0 && n % 2 == 0) return std::nullopt;
  Z r;
  int exact = mpz_root(r.get_mpz_t(), a.get_mpz_t(), n);
  if (!exact) return std::nullopt;
  return r;
}

inline std::optional<Q> q_nth_root(const Q& q, unsigned long n) {
  auto rn = z_nth_root(q.get_num(), n);
  if (!rn) return std::nullopt;
  auto rd = z_nth_root(q.get_den(), n);
  if (!rd) return std::nullopt;
  return make_q(*rn, *rd);
}

inline long to_long(const Z& z) { return z.get_si(); }

inline std::string q_str(const Q& q) { return q.get_str(); }
inline std::string z_str(const Z& z) { return z.get_str(); }

}  // namespace jnp
