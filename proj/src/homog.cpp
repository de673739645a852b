#include "jnp/homog.hpp"

#include <algorithm>

#include "jnp/linsolve.hpp"

namespace jnp {

LaurentPoly to_poly(const HomogForm& h) {
  LaurentPoly p;
  for (int j = 0; j <= h.fhat.deg(); ++j) {
    const Q& c = h.fhat.coeff((size_t)j);
    if (c == 0) continue;
    p.add_term(c, Q(h.alpha + Z(j) * (-h.d.sigma)), h.beta + Z(j) * h.d.rho);
  }
  return p;
}

HomogForm from_poly(const LaurentPoly& p, const Dir& d) {
  if (d.rho < 1 || d.sigma > -1) fail(Errc::bad_direction, "needs rho >= 1 and sigma <= -1");
  if (p.is_zero()) fail(Errc::not_homogeneous, "zero polynomial");
  if (p.level() != 1) fail(Errc::not_in_l, "fractional x-exponents");
  if (leading_form(d, p) != p) fail(Errc::not_homogeneous, "mixed valuations");
  auto [st, en] = st_en(d, p);
  Z alpha(st.x.get_num());
  Z beta(st.y.get_num());
  if (alpha < 0) fail(Errc::not_in_l, "negative x-exponents");
  Z span = Z(Q(en.y - st.y).get_num()) / d.rho;
  std::vector<Q> coeffs((size_t)span.get_ui() + 1, Q(0));
  for (const auto& [k, c] : p.terms()) {
    Z j = (k.ye - beta) / d.rho;
    coeffs[j.get_ui()] = c;
  }
  return HomogForm{d, alpha, beta, QPoly::from_coeffs(std::move(coeffs))};
}

Z u_of(const HomogForm& h) { return h.d.rho * h.alpha + h.d.sigma * h.beta; }

Point st_of(const HomogForm& h) { return Point{Q(h.alpha), Q(h.beta)}; }

Point en_of(const HomogForm& h) {
  Z n(h.fhat.deg());
  return Point{Q(h.alpha + n * (-h.d.sigma)), Q(h.beta + n * h.d.rho)};
}

Z n1_of(const HomogForm& h) { return Z(h.fhat.deg()); }

Z n2_of(const HomogForm& h) { return z_gcd(h.alpha, h.beta); }

QPoly z_poly(const HomogForm& h) {
  return h.fhat.compose_power((unsigned long)h.d.rho.get_ui()).shifted(h.beta.get_ui());
}

bool homog_equal(const HomogForm& a, const HomogForm& b) {
  return a.d == b.d && a.alpha == b.alpha && a.beta == b.beta && a.fhat == b.fhat;
}

QPoly central_residual(const HomogForm& R, const HomogForm& G, unsigned long i) {
  if (R.d != G.d) fail(Errc::direction_mismatch, "forms graded by different directions");
  if (R.fhat.is_zero() || G.fhat.is_zero()) fail(Errc::bad_input, "zero form");
  QPoly r = z_poly(R), g = z_poly(G);
  Q u(u_of(R)), v(u_of(G));
  QPoly lhs = QPoly(Q(R.d.rho)) * r.pow(i);
  QPoly rhs = r.derivative().scaled(v) * g - g.derivative().scaled(u) * r;
  return lhs - rhs;
}

std::optional<HomogForm> solve_companion(const HomogForm& R, unsigned long i) {
  if (!in_lower_arc(R.d))
    fail(Errc::bad_direction, "companion solving needs the open lower arc");
  const Z rho = R.d.rho, sigma = R.d.sigma;
  const Z u = u_of(R);
  const Z v = u * Z(i - 1) + rho + sigma;
  const Z a = R.beta;                                // z-order of r
  const QPoly f = R.fhat;
  const Z deg_r = a + rho * Z(f.deg());
  const Z m_cap = Z(i - 1) * deg_r + 1;
  // admissible z-orders m: rho | (v - sigma m) and v - sigma m >= 0
  Z m_min(-1);
  for (Z m(0); m <= m_cap; ++m) {
    Z num = v - sigma * m;
    if (num >= 0 && divides(rho, num)) {
      m_min = m;
      break;
    }
  }
  if (m_min < 0) return std::nullopt;
  const long dh = to_long(Z((m_cap - m_min) / rho));

  // g = z^m_min h(z^rho); the z-level equation rho r^i = v r' g - u g' r
  // collapses to W(h) = rho w^k0 f^i with
  //   W(h) = v (a f + rho w f') h - u f (m_min h + rho w h')
  // and k0 = ((i-1)a - m_min + 1)/rho, shifted to the h side when negative.
  QPoly F1 = f.scaled(Q(a)) + f.derivative().shifted(1).scaled(Q(rho));
  Z k0z = (Z(i - 1) * a - m_min + 1) / rho;
  size_t lshift = k0z < 0 ? (size_t)Z(-k0z).get_ui() : 0;
  size_t rshift = k0z > 0 ? (size_t)k0z.get_ui() : 0;
  QPoly rhs = f.pow(i).scaled(Q(rho)).shifted(rshift);

  std::vector<QPoly> colpoly;
  int max_deg = rhs.deg();
  for (long j = 0; j <= dh; ++j) {
    QPoly col =
        (F1.scaled(Q(v)) - f.scaled(Q(u) * Q(m_min + rho * Z(j)))).shifted((size_t)j + lshift);
    max_deg = std::max(max_deg, col.deg());
    colpoly.push_back(std::move(col));
  }
  size_t rows = (size_t)max_deg + 1;
  std::vector<std::vector<Q>> A(rows, std::vector<Q>(colpoly.size(), Q(0)));
  std::vector<Q> b(rows, Q(0));
  for (size_t r = 0; r < rows; ++r) {
    for (size_t j = 0; j < colpoly.size(); ++j) A[r][j] = colpoly[j].coeff(r);
    b[r] = rhs.coeff(r);
  }
  auto sol = solve_linear(std::move(A), std::move(b));
  if (!sol) return std::nullopt;
  QPoly h = QPoly::from_coeffs(std::move(*sol));
  if (h.is_zero()) return std::nullopt;
  long ord = h.ord();
  QPoly fg = QPoly::from_coeffs(
      std::vector<Q>(h.coeffs().begin() + ord, h.coeffs().end()));
  Z beta_g = m_min + rho * Z(ord);
  Z alpha_g = (v - sigma * beta_g) / rho;
  HomogForm G{R.d, alpha_g, beta_g, fg};
  if (!central_residual(R, G, i).is_zero()) fail(Errc::bad_input, "companion verification failed");
  return G;
}

std::pair<HomogForm, unsigned long> power_free_root(const LaurentPoly& F, const Dir& d) {
  HomogForm h = from_poly(F, d);
  Q c = h.fhat.is_zero() ? Q(0) : h.fhat.lc();
  QPoly monic = h.fhat.scaled(Q(1) / c);
  Z kf = h.fhat.deg() == 0 ? Z(0) : Z(squarefree_exponent_gcd(monic));
  Z g0 = z_gcd(z_gcd(h.alpha, h.beta), kf);
  if (g0 == 0) return {h, 1};
  for (Z k = g0; k >= 1; --k) {
    if (!divides(k, g0)) continue;
    unsigned long ku = k.get_ui();
    auto croot = q_nth_root(c, ku);
    if (!croot) continue;
    auto froot = monic_nth_root(monic, ku);
    if (!froot) continue;
    HomogForm root{d, h.alpha / k, h.beta / k, froot->scaled(*croot)};
    return {root, ku};
  }
  return {h, 1};
}

std::vector<MultiplicityRecord> multiplicity_classify(const HomogForm& R, const HomogForm& G,
                                                      unsigned long i) {
  if (R.d != G.d) fail(Errc::direction_mismatch, "forms graded by different directions");
  if (!central_residual(R, G, i).is_zero())
    fail(Errc::not_companion, "G is not an order-i companion of R");
  const Z u = u_of(R), v = u_of(G);
  auto tag_of = [&](const Z& s, const Z& t) {
    bool b = (u * t == v * s);
    bool a = (t == s * Z(i - 1) + 1);
    if (b) return 'B';
    if (a) return 'A';
    fail(Errc::bad_input, "multiplicity dichotomy failed");
  };
  std::vector<MultiplicityRecord> out;
  if (R.beta > 0) {
    MultiplicityRecord rec;
    rec.factor_is_z = true;
    rec.s = R.beta;
    rec.t = G.beta;
    rec.tag = tag_of(rec.s, rec.t);
    out.push_back(std::move(rec));
  }
  auto fac = factor(R.fhat);
  for (auto& [q, s] : fac.factors) {
    Z t(0);
    QPoly rest = G.fhat;
    while (divides_poly(q, rest)) {
      rest = exact_div(rest, q);
      ++t;
    }
    MultiplicityRecord rec;
    rec.factor = q;
    rec.s = Z(s);
    rec.t = t;
    rec.tag = tag_of(rec.s, rec.t);
    out.push_back(std::move(rec));
  }
  return out;
}

Z closure_factor_count(const HomogForm& h) {
  Z count = h.beta > 0 ? 1 : 0;
  if (h.fhat.deg() > 0) {
    auto sq = squarefree_decomposition(h.fhat);
    Z sqdeg(0);
    for (auto& [part, e] : sq.parts) sqdeg += part.deg();
    count += h.d.rho * sqdeg;
  }
  return count;
}

HomogForm reduce_exponent(const HomogForm& R, const HomogForm& G1, unsigned long i,
                          unsigned long n) {
  if (R.d != G1.d) fail(Errc::direction_mismatch, "forms graded by different directions");
  if (!central_residual(R, G1, i).is_zero())
    fail(Errc::not_companion, "G1 is not an order-i companion of R");
  const Z u = u_of(R);
  if (n >= i) {
    unsigned long k = n - i;
    HomogForm G2{R.d, G1.alpha + Z(k) * R.alpha, G1.beta + Z(k) * R.beta,
                 G1.fhat * R.fhat.pow(k)};
    return G2;
  }
  if (Z(n - 1) * u + R.d.rho + R.d.sigma < 0)
    fail(Errc::hypothesis_violated, "(n-1)u + rho + sigma < 0");
  unsigned long k = i - n;
  Z beta2 = G1.beta - Z(k) * R.beta;
  if (beta2 < 0) fail(Errc::non_divisible, "y-order of G1 too small for division by R^k");
  QPoly dk = R.fhat.pow(k);
  if (!divides_poly(dk, G1.fhat)) fail(Errc::non_divisible, "fhat of G1 not divisible");
  HomogForm G2{R.d, G1.alpha - Z(k) * R.alpha, beta2, exact_div(G1.fhat, dk)};
  return G2;
}

std::vector<DirCandidate> candidate_directions(const Point& st, const Z& m_max,
                                               const std::optional<Dir>& prev,
                                               const DirWindow& window) {
  if (!is_integer(st.x) || !is_integer(st.y)) fail(Errc::bad_start, "corner off the lattice");
  Z alpha = st.x.get_num(), beta = st.y.get_num();
  if (beta < 0 || alpha <= beta) fail(Errc::bad_start, "corner needs alpha > beta >= 0");
  Z n2 = z_gcd(alpha, beta);
  std::vector<DirCandidate> out;
  for (Z rho(1); rho <= window.rho_max; ++rho) {
    for (Z span(1); span <= window.span_max; ++span) {
      Z sigma = -rho - span;
      if (z_gcd(rho, sigma) != 1) continue;
      Dir d{rho, sigma};
      if (prev && !dir_lt(*prev, d)) continue;
      Z u = rho * alpha + sigma * beta;
      if (u < rho) continue;
      if (beta == 0 && rho == 1) out.push_back({d, CaseTag::case1, Z(0), Z(0), Z(0)});
      Z g = z_gcd(u, span);
      Z s_min = u / g;
      Z tp = span / g;
      if (s_min <= m_max) out.push_back({d, CaseTag::case2, s_min, tp, Z(0)});
      if (n2 > 0 && divides(s_min, n2)) out.push_back({d, CaseTag::case3, Z(0), tp, s_min});
    }
  }
  std::sort(out.begin(), out.end(), [](const DirCandidate& a, const DirCandidate& b) {
    Z c = cross(a.d, b.d);
    if (c != 0) return c > 0;
    return (int)a.tag < (int)b.tag;
  });
  return out;
}

SearchConfig::SearchConfig() : pool{Q(-1), Q(1), Q(-2), Q(2), Q(1, 2)}, i_max(4) {}

namespace {

HomogForm intro_family_r(const Z& a, const Z& b) {
  return HomogForm{Dir{1, -1}, a - b, Z(0), QPoly::from_coeffs({Q(1), Q(1)}).pow(b.get_ui())};
}

// fhat = prod over (lambda, s) of (w - lambda)^s
QPoly pool_product(const std::vector<std::pair<Q, unsigned long>>& shape) {
  QPoly f(Q(1));
  for (const auto& [lambda, s] : shape)
    f = f * QPoly::from_coeffs({-lambda, Q(1)}).pow(s);
  return f;
}

// Order dichotomy for fhat split into distinct nonzero linear factors: at a
// root of multiplicity s any companion carries multiplicity s(i-1)+1 or
// v s / u, with the matching options for the order at zero and the degree;
// the minimal demands must fit the maximal degree budget on the rho-grid.
// False here implies solve_companion has no solution for any such R.
bool companion_shape_feasible(const Z& u, const Dir& d, const Z& beta,
                              const std::vector<unsigned long>& mults, unsigned long i) {
  const Z rho = d.rho;
  const Z v = u * Z(i - 1) + rho + d.sigma;
  Z f_deg(0);
  for (auto s : mults) f_deg += Z(s);
  const Z deg_r = beta + rho * f_deg;
  // v = 0 kills the coefficient forcing t >= 1, so roots of r may avoid g
  Z need(0);
  if (v != 0) {
    for (auto s : mults) {
      Z tmin = Z(s) * Z(i - 1) + 1;
      Z vs = v * Z(s);
      if (divides(u, vs)) {
        Z tb = vs / u;
        if (tb >= 1 && tb < tmin) tmin = tb;
      }
      need += tmin;
    }
  }
  std::vector<Z> m_opts{beta * Z(i - 1) + 1};
  if (v == 0) {
    m_opts.push_back(Z(0));
  } else {
    Z vb = v * beta;
    if (divides(u, vb)) {
      Z mb = vb / u;
      if (beta == 0 ? mb == 0 : mb >= 1) m_opts.push_back(mb);
    }
  }
  std::vector<Z> d_opts{deg_r * Z(i - 1) + 1};
  Z vd = v * deg_r;
  if (divides(u, vd)) d_opts.push_back(vd / u);
  for (const Z& m : m_opts)
    for (const Z& dg : d_opts)
      if (m + rho * need <= dg && divides(rho, dg - m)) return true;
  return false;
}

// lexicographic successor among compositions into positive parts
bool next_composition(std::vector<unsigned long>& parts) {
  size_t t = parts.size();
  size_t k = t;
  for (size_t i = t; i-- > 0;)
    if (parts[i] >= 2) {
      k = i;
      break;
    }
  if (k == t || k == 0) return false;
  unsigned long suffix = 0;
  for (size_t i = k; i < t; ++i) suffix += parts[i];
  parts[k - 1] += 1;
  for (size_t i = k; i < t; ++i) parts[i] = 1;
  parts[t - 1] = suffix - 1 - (unsigned long)(t - 1 - k);
  return true;
}

}  // namespace

std::tuple<HomogForm, HomogForm, unsigned long> family_witness(
    const std::string& name, const std::map<std::string, Q>& params) {
  auto get_int = [&](const char* key, const Z& lo) {
    auto it = params.find(key);
    if (it == params.end() || !is_integer(it->second))
      fail(Errc::bad_params, std::string("integer parameter '") + key + "' required");
    Z v = it->second.get_num();
    if (v < lo) fail(Errc::bad_params, std::string("parameter '") + key + "' out of range");
    return v;
  };
  auto expect_keys = [&](std::initializer_list<const char*> keys) {
    if (params.size() != keys.size()) fail(Errc::bad_params, "unexpected parameter set");
    for (const char* k : keys)
      if (!params.count(k)) fail(Errc::bad_params, std::string("missing parameter '") + k + "'");
  };
  if (name == "intro") {
    expect_keys({"a", "b"});
    Z a = get_int("a", Z(2)), b = get_int("b", Z(1));
    if (a - b < 1) fail(Errc::bad_params, "needs a - b >= 1");
    HomogForm R = intro_family_r(a, b);
    HomogForm G{R.d, a - b + 1, Z(1), R.fhat.scaled(Q(-1) / Q(a - b))};
    return {R, G, 2};
  }
  if (name == "ejemplo") {
    expect_keys({"k", "j"});
    Z k = get_int("k", Z(1)), j = get_int("j", Z(1));
    QPoly onew = QPoly::from_coeffs({Q(1), Q(1)});
    HomogForm R{Dir{1, -2}, k, Z(0), onew.pow(j.get_ui())};
    HomogForm G{R.d, k - 1, Z(0), onew.pow(j.get_ui() + 1).scaled(Q(-1) / Q(j + k))};
    return {R, G, 2};
  }
  if (name == "caso2") {
    expect_keys({"n"});
    Z n = get_int("n", Z(1));
    HomogForm R{Dir{n, -(n + 1)}, Z(1), Z(0),
                QPoly::from_coeffs({Q(1), Q(1)}).pow(n.get_ui())};
    auto G = solve_companion(R, 2);
    if (!G) fail(Errc::bad_params, "family construction failed");
    return {R, *G, 2};
  }
  if (name == "case1") {
    expect_keys({"u", "j", "i", "sigma", "lambda"});
    Z u = get_int("u", Z(1)), j = get_int("j", Z(1)), i = get_int("i", Z(2));
    auto its = params.find("sigma");
    if (!is_integer(its->second)) fail(Errc::bad_params, "integer parameter 'sigma' required");
    Z sigma = its->second.get_num();
    if (sigma > -2) fail(Errc::bad_params, "needs sigma <= -2");
    Q lambda = params.at("lambda");
    if (lambda == 0) fail(Errc::bad_params, "lambda must be nonzero");
    Z pi = j * ((j - 1) * u * (i - 1) - j * (sigma + 1));
    if (pi <= 0) fail(Errc::bad_params, "normalization constant must be positive");
    Z v = u * (i - 1) + 1 + sigma;
    if (v < 0) fail(Errc::bad_params, "companion would leave the algebra: u(i-1)+1+sigma < 0");
    QPoly base = QPoly::from_coeffs({-lambda, Q(1)});
    HomogForm R{Dir{1, sigma}, u, Z(0), base.pow(j.get_ui())};
    Q c = Q(1) / Q(j * (sigma + 1) - u);
    HomogForm G{R.d, v, Z(0),
                base.pow(Z(j * (i - 1) + 1).get_ui()).scaled(c)};
    if (!central_residual(R, G, i.get_ui()).is_zero())
      fail(Errc::bad_input, "family verification failed");
    return {R, G, i.get_ui()};
  }
  if (name == "case3") {
    expect_keys({});
    HomogForm R{Dir{5, -8}, Z(14), Z(8), QPoly::from_coeffs({Q(9), Q(9)})};
    HomogForm G{R.d, Z(7), Z(4),
                QPoly::from_coeffs({Q(-1), Q(-2), Q(-1)})};
    return {R, G, 2};
  }
  fail(Errc::bad_params, "unknown family '" + name + "'");
}

std::optional<std::tuple<HomogForm, HomogForm, unsigned long>> witness_search(
    const Point& st, const Dir& d, const Z& steps, const SearchConfig& cfg) {
  if (!is_integer(st.x) || !is_integer(st.y) || st.y < 0 || st.x <= st.y)
    fail(Errc::edge_rejected, "corner needs integer alpha > beta >= 0");
  if (!in_lower_arc(d)) fail(Errc::edge_rejected, "direction outside the open lower arc");
  if (steps < 1) fail(Errc::edge_rejected, "needs at least one step");
  Z alpha = st.x.get_num(), beta = st.y.get_num();
  Z u = d.rho * alpha + d.sigma * beta;
  if (u < d.rho) fail(Errc::edge_rejected, "valuation below rho");
  Z span = -d.rho - d.sigma;
  Z g = z_gcd(u, span);
  Z s_min = u / g;
  Z n2 = z_gcd(alpha, beta);
  bool case1 = (beta == 0 && d.rho == 1);
  bool case2 = (s_min <= steps);
  bool case3 = (n2 > 0 && divides(s_min, n2));
  if (!case1 && !case2 && !case3) fail(Errc::edge_rejected, "no feasibility case applies");

  unsigned long m = steps.get_ui();
  size_t pool_n = cfg.pool.size();
  // factor subsets in pool order, smaller subsets first, multiplicity
  // compositions in lexicographic order
  for (size_t t = 1; t <= std::min<size_t>(pool_n, m); ++t) {
    std::vector<size_t> idx(t);
    for (size_t i2 = 0; i2 < t; ++i2) idx[i2] = i2;
    while (true) {
      // compositions of m into t positive parts
      std::vector<unsigned long> parts(t, 1);
      parts[t - 1] = m - (t - 1);
      while (true) {
        std::optional<HomogForm> R;
        for (unsigned long i = 2; i <= cfg.i_max; ++i) {
          if (!companion_shape_feasible(u, d, beta, parts, i)) continue;
          if (!R) {
            std::vector<std::pair<Q, unsigned long>> shape;
            for (size_t i2 = 0; i2 < t; ++i2) shape.push_back({cfg.pool[idx[i2]], parts[i2]});
            R = HomogForm{d, alpha, beta, pool_product(shape)};
          }
          auto G = solve_companion(*R, i);
          if (G) return std::make_tuple(*R, *G, i);
        }
        if (!next_composition(parts)) break;
      }
      // next index combination
      size_t i2 = t;
      bool advanced = false;
      while (i2-- > 0) {
        if (idx[i2] + (t - i2) < pool_n) {
          ++idx[i2];
          for (size_t j2 = i2 + 1; j2 < t; ++j2) idx[j2] = idx[j2 - 1] + 1;
          advanced = true;
          break;
        }
        if (i2 == 0) break;
      }
      if (!advanced) break;
    }
  }
  return std::nullopt;
}

}  // namespace jnp
