#include "jnp/qpoly.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>

namespace jnp {

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::from_coeffs(std::vector<Q> coeffs) {
  QPoly p;
  p.c_ = std::move(coeffs);
  p.trim();
  return p;
}

QPoly QPoly::monomial(const Q& coef, size_t degree) {
  QPoly p;
  if (coef != 0) {
    p.c_.assign(degree + 1, Q(0));
    p.c_[degree] = coef;
  }
  return p;
}

int QPoly::ord() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return (int)i;
  return -1;
}

const Q& QPoly::coeff(size_t i) const {
  static const Q zero(0);
  return i < c_.size() ? c_[i] : zero;
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

QPoly QPoly::operator+(const QPoly& o) const {
  QPoly r;
  r.c_.resize(std::max(c_.size(), o.c_.size()), Q(0));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
  r.trim();
  return r;
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator*(const QPoly& o) const {
  if (is_zero() || o.is_zero()) return QPoly();
  QPoly r;
  r.c_.assign(c_.size() + o.c_.size() - 1, Q(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      if (o.c_[j] != 0) r.c_[i + j] += c_[i] * o.c_[j];
  }
  r.trim();
  return r;
}

QPoly QPoly::scaled(const Q& s) const {
  if (s == 0) return QPoly();
  QPoly r = *this;
  for (auto& q : r.c_) q *= s;
  return r;
}

QPoly QPoly::shifted(size_t k) const {
  if (is_zero() || k == 0) return *this;
  QPoly r;
  r.c_.assign(c_.size() + k, Q(0));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
  return r;
}

QPoly QPoly::pow(unsigned long e) const {
  QPoly r(Q(1));
  QPoly base = *this;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

QPoly QPoly::derivative() const {
  QPoly r;
  if (c_.size() <= 1) return r;
  r.c_.resize(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * Q((unsigned long)i);
  r.trim();
  return r;
}

Q QPoly::eval(const Q& at) const {
  Q acc(0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * at + c_[i];
  return acc;
}

QPoly QPoly::compose_scale(const Q& c) const {
  QPoly r = *this;
  Q f(1);
  for (size_t i = 0; i < r.c_.size(); ++i) {
    r.c_[i] *= f;
    f *= c;
  }
  r.trim();
  return r;
}

QPoly QPoly::compose_power(unsigned long k) const {
  if (is_zero() || k == 1) return *this;
  QPoly r;
  r.c_.assign((c_.size() - 1) * k + 1, Q(0));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i * k] = c_[i];
  r.trim();
  return r;
}

std::pair<QPoly, QPoly> divrem(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) fail(Errc::bad_input, "division by zero polynomial");
  if (a.deg() < b.deg()) return {QPoly(), a};
  std::vector<Q> rem(a.coeffs());
  std::vector<Q> quo(a.deg() - b.deg() + 1, Q(0));
  const Q& blc = b.lc();
  for (int k = a.deg() - b.deg(); k >= 0; --k) {
    Q q = rem[k + b.deg()] / blc;
    quo[k] = q;
    if (q != 0)
      for (int j = 0; j <= b.deg(); ++j) rem[k + j] -= q * b.coeff(j);
  }
  return {QPoly::from_coeffs(std::move(quo)), QPoly::from_coeffs(std::move(rem))};
}

QPoly exact_div(const QPoly& a, const QPoly& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) fail(Errc::bad_input, "inexact polynomial division");
  return q;
}

bool divides_poly(const QPoly& d, const QPoly& a) {
  if (d.is_zero()) return a.is_zero();
  return divrem(a, d).second.is_zero();
}

Q content(const QPoly& a) {
  if (a.is_zero()) return Q(0);
  Z num(0), den(1);
  for (const Q& q : a.coeffs()) {
    num = z_gcd(num, q.get_num());
    den = z_lcm(den, q.get_den());
  }
  Q c = make_q(num, den);
  if (a.lc() < 0) c = -c;
  return c;
}

QPoly primitive_part(const QPoly& a) {
  if (a.is_zero()) return a;
  return a.scaled(Q(1) / content(a));
}

namespace {

// Pseudo-remainder of integer-coefficient polynomials, primitive-PRS style.
QPoly pseudo_rem(const QPoly& a, const QPoly& b) {
  QPoly r = a;
  Q blc = b.lc();
  while (!r.is_zero() && r.deg() >= b.deg()) {
    QPoly t = b.shifted(r.deg() - b.deg()).scaled(r.lc());
    r = r.scaled(blc) - t;
  }
  return r;
}

}  // namespace

QPoly gcd_monic(const QPoly& a, const QPoly& b) {
  if (a.is_zero() && b.is_zero()) return QPoly();
  QPoly A = primitive_part(a), B = primitive_part(b);
  if (A.is_zero()) std::swap(A, B);
  while (!B.is_zero()) {
    QPoly R = primitive_part(pseudo_rem(A, B));
    A = B;
    B = R;
  }
  return A.scaled(Q(1) / A.lc());
}

SquarefreeDecomposition squarefree_decomposition(const QPoly& a) {
  SquarefreeDecomposition out;
  if (a.is_zero()) {
    out.unit = Q(0);
    return out;
  }
  out.unit = a.lc();
  QPoly f = a.scaled(Q(1) / a.lc());
  if (f.deg() == 0) return out;
  QPoly fp = f.derivative();
  QPoly u = gcd_monic(f, fp);
  QPoly v = exact_div(f, u);
  QPoly w = exact_div(fp, u);
  int i = 1;
  while (v.deg() > 0) {
    QPoly z = w - v.derivative();
    QPoly h = gcd_monic(v, z);
    if (h.deg() > 0) out.parts.push_back({h, i});
    v = exact_div(v, h);
    w = exact_div(z, h);
    ++i;
  }
  return out;
}

unsigned long squarefree_exponent_gcd(const QPoly& a) {
  auto sq = squarefree_decomposition(a);
  Z g(0);
  for (auto& [part, e] : sq.parts) g = z_gcd(g, Z(e));
  return g.get_ui();
}

std::optional<QPoly> monic_nth_root(const QPoly& a, unsigned long n) {
  if (n == 0 || a.is_zero() || a.lc() != 1) return std::nullopt;
  if (n == 1) return a;
  if (a.deg() % (long)n != 0) return std::nullopt;
  auto sq = squarefree_decomposition(a);
  QPoly root(Q(1));
  for (auto& [part, e] : sq.parts) {
    if (e % (int)n != 0) return std::nullopt;
    root = root * part.pow((unsigned long)(e / (int)n));
  }
  if (root.pow(n) != a) return std::nullopt;
  return root;
}

// ---------------------------------------------------------------------------
// Factorization over Z: Berlekamp mod a small prime, quadratic Hensel lifting
// and subset recombination. Inputs here are monic squarefree integer
// polynomials; factor() below reduces the general case to this one.

namespace {

using FpPoly = std::vector<long>;  // coefficient i of w^i, reduced mod p

long fp_norm(long v, long p) {
  v %= p;
  return v < 0 ? v + p : v;
}

long fp_mul(long a, long b, long p) { return (long)((__int128)a * b % p); }

long fp_inv(long a, long p) {
  long t = 0, nt = 1, r = p, nr = fp_norm(a, p);
  while (nr != 0) {
    long q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  return fp_norm(t, p);
}

void fp_trim(FpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int fp_deg(const FpPoly& f) { return (int)f.size() - 1; }

FpPoly fp_mulp(const FpPoly& a, const FpPoly& b, long p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + (__int128)a[i] * b[j]) % p;
  }
  fp_trim(r);
  return r;
}

FpPoly fp_sub(FpPoly a, const FpPoly& b, long p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] = fp_norm(a[i] - b[i], p);
  fp_trim(a);
  return a;
}

// remainder of a by monic-normalizable b
FpPoly fp_rem(FpPoly a, const FpPoly& b, long p) {
  long inv = fp_inv(b.back(), p);
  while (fp_deg(a) >= fp_deg(b)) {
    long c = fp_mul(a.back(), inv, p);
    size_t off = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i)
      a[off + i] = fp_norm(a[off + i] - fp_mul(c, b[i], p), p);
    fp_trim(a);
    if (a.empty()) break;
  }
  return a;
}

FpPoly fp_quo(FpPoly a, const FpPoly& b, long p) {
  if (fp_deg(a) < fp_deg(b)) return {};
  FpPoly q(a.size() - b.size() + 1, 0);
  long inv = fp_inv(b.back(), p);
  while (fp_deg(a) >= fp_deg(b)) {
    long c = fp_mul(a.back(), inv, p);
    size_t off = a.size() - b.size();
    q[off] = c;
    for (size_t i = 0; i < b.size(); ++i)
      a[off + i] = fp_norm(a[off + i] - fp_mul(c, b[i], p), p);
    fp_trim(a);
    if (a.empty()) break;
  }
  fp_trim(q);
  return q;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, long p) {
  while (!b.empty()) {
    FpPoly r = fp_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() != 1) {
    long inv = fp_inv(a.back(), p);
    for (auto& c : a) c = fp_mul(c, inv, p);
  }
  return a;
}

FpPoly fp_deriv(const FpPoly& f, long p) {
  FpPoly r;
  for (size_t i = 1; i < f.size(); ++i) r.push_back((long)((__int128)f[i] * i % p));
  fp_trim(r);
  return r;
}

// x^e mod f
FpPoly fp_xpow_mod(unsigned long e, const FpPoly& f, long p) {
  FpPoly result{1};
  FpPoly base{0, 1};
  base = fp_rem(base, f, p);
  while (e) {
    if (e & 1) result = fp_rem(fp_mulp(result, base, p), f, p);
    base = fp_rem(fp_mulp(base, base, p), f, p);
    e >>= 1;
  }
  return result;
}

// Monic squarefree factorization over F_p via Berlekamp's algorithm.
std::vector<FpPoly> berlekamp(const FpPoly& f, long p) {
  int n = fp_deg(f);
  if (n <= 1) return {f};
  // columns of the Frobenius matrix: x^(i*p) mod f
  FpPoly xp = fp_xpow_mod((unsigned long)p, f, p);
  std::vector<FpPoly> cols(n);
  cols[0] = {1};
  for (int i = 1; i < n; ++i) cols[i] = fp_rem(fp_mulp(cols[i - 1], xp, p), f, p);
  // A = Frobenius - I, stored row major
  std::vector<std::vector<long>> A(n, std::vector<long>(n, 0));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      A[i][j] = fp_norm((i < (int)cols[j].size() ? cols[j][i] : 0) - (i == j ? 1 : 0), p);
  // nullspace basis by Gaussian elimination
  std::vector<int> pivot_col_of_row;
  int row = 0;
  std::vector<int> col_pivot(n, -1);
  for (int col = 0; col < n && row < n; ++col) {
    int pr = -1;
    for (int i = row; i < n; ++i)
      if (A[i][col] != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(A[row], A[pr]);
    long inv = fp_inv(A[row][col], p);
    for (int j = 0; j < n; ++j) A[row][j] = fp_mul(A[row][j], inv, p);
    for (int i = 0; i < n; ++i)
      if (i != row && A[i][col] != 0) {
        long c = A[i][col];
        for (int j = 0; j < n; ++j) A[i][j] = fp_norm(A[i][j] - fp_mul(c, A[row][j], p), p);
      }
    col_pivot[col] = row;
    ++row;
  }
  std::vector<FpPoly> basis;
  for (int col = 0; col < n; ++col) {
    if (col_pivot[col] >= 0) continue;
    FpPoly v(n, 0);
    v[col] = 1;
    for (int c2 = 0; c2 < n; ++c2)
      if (col_pivot[c2] >= 0) v[c2] = fp_norm(-A[col_pivot[c2]][col], p);
    fp_trim(v);
    basis.push_back(v);
  }
  size_t r = basis.size();
  std::vector<FpPoly> factors{f};
  if (r <= 1) return factors;
  for (const FpPoly& v : basis) {
    if (fp_deg(v) < 1) continue;  // skip the constant vector
    for (long s = 0; s < p && factors.size() < r; ++s) {
      FpPoly vs = v;
      vs[0] = fp_norm(vs[0] - s, p);
      fp_trim(vs);
      std::vector<FpPoly> next;
      for (const FpPoly& g : factors) {
        if (fp_deg(g) <= 1) {
          next.push_back(g);
          continue;
        }
        FpPoly h = fp_gcd(g, vs, p);
        if (fp_deg(h) > 0 && fp_deg(h) < fp_deg(g)) {
          next.push_back(fp_quo(g, h, p));
          next.push_back(std::move(h));
        } else {
          next.push_back(g);
        }
      }
      factors = std::move(next);
    }
    if (factors.size() >= r) break;
  }
  return factors;
}

using ZPoly = std::vector<Z>;

void zp_trim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int zp_deg(const ZPoly& f) { return (int)f.size() - 1; }

ZPoly zp_mod(ZPoly f, const Z& m) {
  for (auto& c : f) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  }
  zp_trim(f);
  return f;
}

ZPoly zp_mul_mod(const ZPoly& a, const ZPoly& b, const Z& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Z(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return zp_mod(std::move(r), m);
}

ZPoly zp_add_mod(ZPoly a, const ZPoly& b, const Z& m) {
  if (a.size() < b.size()) a.resize(b.size(), Z(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return zp_mod(std::move(a), m);
}

ZPoly zp_sub_mod(ZPoly a, const ZPoly& b, const Z& m) {
  if (a.size() < b.size()) a.resize(b.size(), Z(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return zp_mod(std::move(a), m);
}

// divrem by a monic divisor, coefficients mod m
std::pair<ZPoly, ZPoly> zp_divrem_monic_mod(ZPoly a, const ZPoly& b, const Z& m) {
  if (zp_deg(a) < zp_deg(b)) return {{}, std::move(a)};
  ZPoly q(a.size() - b.size() + 1, Z(0));
  for (int k = zp_deg(a) - zp_deg(b); k >= 0; --k) {
    Z c = a[k + zp_deg(b)];
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    q[k] = c;
    if (c != 0)
      for (size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
    a[k + zp_deg(b)] = 0;
  }
  return {zp_mod(std::move(q), m), zp_mod(std::move(a), m)};
}

ZPoly zp_from_fp(const FpPoly& f) {
  ZPoly r;
  for (long c : f) r.push_back(Z(c));
  return r;
}

// centers coefficients into (-m/2, m/2]
ZPoly zp_symmetric(ZPoly f, const Z& m) {
  Z half = m / 2;
  for (auto& c : f) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  zp_trim(f);
  return f;
}

// extended Euclid over F_p: s*a + t*b = 1 for coprime a, b
void fp_bezout(const FpPoly& a, const FpPoly& b, long p, FpPoly& s, FpPoly& t) {
  FpPoly r0 = a, r1 = b;
  FpPoly s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    // r0 = q*r1 + r2
    FpPoly q;
    FpPoly rem = r0;
    long inv = fp_inv(r1.back(), p);
    q.assign(std::max<int>(fp_deg(r0) - fp_deg(r1) + 1, 0), 0);
    while (fp_deg(rem) >= fp_deg(r1)) {
      long c = fp_mul(rem.back(), inv, p);
      q[rem.size() - r1.size()] = c;
      size_t off = rem.size() - r1.size();
      for (size_t i = 0; i < r1.size(); ++i)
        rem[off + i] = fp_norm(rem[off + i] - fp_mul(c, r1[i], p), p);
      fp_trim(rem);
      if (rem.empty()) break;
    }
    fp_trim(q);
    FpPoly s2 = fp_sub(s0, fp_mulp(q, s1, p), p);
    FpPoly t2 = fp_sub(t0, fp_mulp(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  // r0 is a nonzero constant for coprime inputs
  long inv = fp_inv(r0.empty() ? 1 : r0[0], p);
  s = s0;
  t = t0;
  for (auto& c : s) c = fp_mul(c, inv, p);
  for (auto& c : t) c = fp_mul(c, inv, p);
}

// One quadratic Hensel step: from f = g*h (mod m), s*g + t*h = 1 (mod m)
// to the same relations mod m^2. f, g, h monic.
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const Z& m) {
  Z m2 = m * m;
  ZPoly e = zp_sub_mod(f, zp_mul_mod(g, h, m2), m2);
  auto [q, r] = zp_divrem_monic_mod(zp_mul_mod(s, e, m2), h, m2);
  ZPoly g1 = zp_add_mod(zp_add_mod(g, zp_mul_mod(t, e, m2), m2), zp_mul_mod(q, g, m2), m2);
  ZPoly h1 = zp_add_mod(h, r, m2);
  ZPoly b = zp_sub_mod(
      zp_add_mod(zp_mul_mod(s, g1, m2), zp_mul_mod(t, h1, m2), m2), ZPoly{Z(1)}, m2);
  auto [c, d] = zp_divrem_monic_mod(zp_mul_mod(s, b, m2), h1, m2);
  ZPoly s1 = zp_sub_mod(s, d, m2);
  ZPoly t1 = zp_sub_mod(zp_sub_mod(t, zp_mul_mod(t, b, m2), m2), zp_mul_mod(c, g1, m2), m2);
  g = std::move(g1);
  h = std::move(h1);
  s = std::move(s1);
  t = std::move(t1);
}

// Lifts the factor list (coprime monic, mod p) of monic F to modulus target;
// the product of the result equals F mod target.
std::vector<ZPoly> hensel_lift_tree(const ZPoly& F, const std::vector<FpPoly>& fs, long p,
                                    const Z& target) {
  if (fs.size() == 1) return {zp_mod(F, target)};
  size_t half = fs.size() / 2;
  FpPoly g0{1}, h0{1};
  for (size_t i = 0; i < half; ++i) g0 = fp_mulp(g0, fs[i], p);
  for (size_t i = half; i < fs.size(); ++i) h0 = fp_mulp(h0, fs[i], p);
  FpPoly s0, t0;
  fp_bezout(g0, h0, p, s0, t0);
  ZPoly g = zp_from_fp(g0), h = zp_from_fp(h0), s = zp_from_fp(s0), t = zp_from_fp(t0);
  Z m(p);
  while (m < target) {
    hensel_step(zp_mod(F, m * m), g, h, s, t, m);
    m = m * m;
  }
  std::vector<FpPoly> left(fs.begin(), fs.begin() + half);
  std::vector<FpPoly> right(fs.begin() + half, fs.end());
  std::vector<ZPoly> out = hensel_lift_tree(zp_mod(g, target), left, p, target);
  std::vector<ZPoly> rr = hensel_lift_tree(zp_mod(h, target), right, p, target);
  out.insert(out.end(), rr.begin(), rr.end());
  return out;
}

QPoly qpoly_from_z(const ZPoly& f) {
  std::vector<Q> c;
  c.reserve(f.size());
  for (const Z& z : f) c.push_back(Q(z));
  return QPoly::from_coeffs(std::move(c));
}

ZPoly zpoly_from_q(const QPoly& f) {
  ZPoly r;
  for (const Q& q : f.coeffs()) r.push_back(q.get_num());
  return r;
}

// Irreducible factors of a monic squarefree integer polynomial.
std::vector<QPoly> factor_monic_squarefree_z(const QPoly& G) {
  if (G.deg() <= 1) return {G};
  // pick a prime keeping G squarefree
  long p = 0;
  Z candidate(1);
  for (int tries = 0; tries < 10000; ++tries) {
    mpz_nextprime(candidate.get_mpz_t(), candidate.get_mpz_t());
    long pc = candidate.get_si();
    FpPoly gp;
    for (const Q& q : G.coeffs()) {
      Z c = q.get_num() % pc;
      gp.push_back(fp_norm(c.get_si(), pc));
    }
    fp_trim(gp);
    if (fp_deg(gp) != G.deg()) continue;  // cannot happen for monic G, kept as a guard
    FpPoly d = fp_deriv(gp, pc);
    if (fp_deg(fp_gcd(gp, d, pc)) == 0) {
      p = pc;
      break;
    }
  }
  if (p == 0) fail(Errc::bad_input, "no usable prime for factorization");
  FpPoly gp;
  for (const Q& q : G.coeffs()) {
    Z c = q.get_num() % p;
    gp.push_back(fp_norm(c.get_si(), p));
  }
  std::vector<FpPoly> modular = berlekamp(gp, p);
  if (modular.size() == 1) return {G};
  std::sort(modular.begin(), modular.end());
  // coefficient bound for monic factors: 2^n * (1 + sum |coeff|)
  Z bound(1);
  for (const Q& q : G.coeffs()) bound += abs(q.get_num());
  bound <<= (unsigned long)(G.deg() + 1);
  Z target(p);
  while (target <= 2 * bound) target = target * target;
  std::vector<ZPoly> lifted = hensel_lift_tree(zpoly_from_q(G), modular, p, target);

  std::vector<QPoly> out;
  QPoly remaining = G;
  std::vector<ZPoly> pool = std::move(lifted);
  size_t take = 1;
  while (!pool.empty() && take <= pool.size()) {
    bool found = false;
    std::vector<size_t> idx(take);
    for (size_t i = 0; i < take; ++i) idx[i] = i;
    while (true) {
      ZPoly prod{Z(1)};
      for (size_t i : idx) prod = zp_mul_mod(prod, pool[i], target);
      QPoly cand = qpoly_from_z(zp_symmetric(prod, target));
      if (cand.deg() <= remaining.deg() && divides_poly(cand, remaining)) {
        out.push_back(cand);
        remaining = exact_div(remaining, cand);
        std::vector<ZPoly> next_pool;
        for (size_t i = 0; i < pool.size(); ++i)
          if (std::find(idx.begin(), idx.end(), i) == idx.end())
            next_pool.push_back(std::move(pool[i]));
        pool = std::move(next_pool);
        found = true;
        break;
      }
      // next combination
      size_t i = take;
      while (i-- > 0) {
        if (idx[i] + (take - i) < pool.size() + 0) {
          ++idx[i];
          for (size_t j = i + 1; j < take; ++j) idx[j] = idx[j - 1] + 1;
          break;
        }
        if (i == 0) {
          i = SIZE_MAX;
          break;
        }
      }
      if (i == SIZE_MAX) break;
    }
    if (!found) ++take;
    if (remaining.deg() == 0) break;
  }
  if (remaining.deg() > 0) out.push_back(remaining);
  return out;
}

bool qpoly_less(const QPoly& a, const QPoly& b) {
  if (a.deg() != b.deg()) return a.deg() < b.deg();
  for (int i = a.deg(); i >= 0; --i) {
    int c = cmp(a.coeff(i), b.coeff(i));
    if (c != 0) return c < 0;
  }
  return false;
}

}  // namespace

Factorization factor(const QPoly& a) {
  Factorization out;
  out.unit = a.is_zero() ? Q(0) : a.lc();
  if (a.deg() <= 0) return out;
  auto sq = squarefree_decomposition(a);
  std::map<int, std::vector<QPoly>> grouped;
  for (auto& [part, e] : sq.parts) {
    if (part.deg() == 0) continue;
    // scale to a monic integer polynomial: L^(n-1) * part(w / L)
    QPoly prim = primitive_part(part);
    Q L(prim.lc());
    QPoly monic_z = prim.compose_scale(Q(1) / L).scaled(q_pow(L, prim.deg() - 1));
    // clear remaining denominators (none remain, but keep it exact)
    monic_z = primitive_part(monic_z);
    if (monic_z.lc() != 1) monic_z = monic_z.scaled(Q(1) / monic_z.lc());
    for (const QPoly& fz : factor_monic_squarefree_z(monic_z)) {
      QPoly back = fz.compose_scale(L);
      back = back.scaled(Q(1) / back.lc());
      grouped[e].push_back(back);
    }
  }
  for (auto& [e, fs] : grouped) {
    std::sort(fs.begin(), fs.end(), qpoly_less);
    for (auto& f : fs) out.factors.push_back({f, e});
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& l, const auto& r) { return qpoly_less(l.first, r.first); });
  return out;
}

Q resultant(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return Q(0);
  int m = a.deg(), n = b.deg();
  if (m == 0) return q_pow(a.coeff(0), n);
  if (n == 0) return q_pow(b.coeff(0), m);
  // Sylvester matrix, scaled row-wise to integers, Bareiss determinant.
  size_t dim = (size_t)(m + n);
  std::vector<std::vector<Z>> M(dim, std::vector<Z>(dim, Z(0)));
  Q scale(1);
  auto fill_row = [&](size_t row, const QPoly& f, int fdeg, size_t offset) {
    Z l(1);
    for (int j = 0; j <= fdeg; ++j) l = z_lcm(l, f.coeff((size_t)j).get_den());
    scale *= Q(l);
    for (int j = 0; j <= fdeg; ++j) {
      Q v = f.coeff((size_t)(fdeg - j)) * Q(l);
      M[row][offset + (size_t)j] = v.get_num();
    }
  };
  for (int i = 0; i < n; ++i) fill_row((size_t)i, a, m, (size_t)i);
  for (int i = 0; i < m; ++i) fill_row((size_t)(n + i), b, n, (size_t)i);
  // fraction-free elimination
  Z det_sign(1), prev(1);
  for (size_t k = 0; k + 1 < dim; ++k) {
    if (M[k][k] == 0) {
      size_t swap_row = k + 1;
      while (swap_row < dim && M[swap_row][k] == 0) ++swap_row;
      if (swap_row == dim) return Q(0);
      std::swap(M[k], M[swap_row]);
      det_sign = -det_sign;
    }
    for (size_t i = k + 1; i < dim; ++i) {
      for (size_t j = k + 1; j < dim; ++j) {
        M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;
      }
      M[i][k] = 0;
    }
    prev = M[k][k];
  }
  Q det = Q(det_sign * M[dim - 1][dim - 1]);
  return det / scale;
}

std::string to_string(const QPoly& a, const std::string& var) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = a.deg(); i >= 0; --i) {
    const Q& c = a.coeff((size_t)i);
    if (c == 0) continue;
    Q mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool unit_coeff = (mag == 1 && i > 0);
    if (!unit_coeff) os << q_str(mag);
    if (i > 0) {
      if (!unit_coeff) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace jnp
