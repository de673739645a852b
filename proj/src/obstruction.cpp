#include "jnp/obstruction.hpp"

#include <algorithm>

namespace jnp {

namespace {

std::string pt_str(const Point& p) { return "(" + q_str(p.x) + "," + q_str(p.y) + ")"; }

std::string dir_str(const Dir& d) { return "(" + z_str(d.rho) + "," + z_str(d.sigma) + ")"; }

HomogForm hf_pow(const HomogForm& h, unsigned long e) {
  return {h.d, h.alpha * Z(e), h.beta * Z(e), h.fhat.pow(e)};
}

// collapse a d-homogeneous form to a polynomial in z by y-exponent
QPoly dehomogenize_y(const LaurentPoly& form) {
  Z dmax(0);
  for (const auto& [k, c] : form.terms())
    if (k.ye > dmax) dmax = k.ye;
  std::vector<Q> coeffs(dmax.get_ui() + 1, Q(0));
  for (const auto& [k, c] : form.terms()) coeffs[k.ye.get_ui()] += c;
  return QPoly::from_coeffs(coeffs);
}

}  // namespace

LaurentPoly tilde_j(const LaurentPoly& p, const LaurentPoly& q) {
  LaurentPoly qdxp = q * differentiate(p, Axis::x);
  LaurentPoly out = integrate(bracket(p, q), Axis::y);
  out.add_term(qdxp.coeff_at(Q(-1), Z(0)), Q(-1), Z(0));
  return out;
}

LaurentPoly exact_primitive(const LaurentPoly& g, const LaurentPoly& f) {
  if (differentiate(g, Axis::y) != differentiate(f, Axis::x))
    fail(Errc::not_closed, "D_y of the x-part differs from D_x of the y-part");
  LaurentPoly yfree;
  for (const auto& [k, c] : g.terms())
    if (k.ye == 0) yfree.add_term(c, k.xe, k.ye);
  return integrate(f, Axis::y) + integrate(yfree, Axis::x);
}

std::vector<HullEdge> slope_one_audit(const LaurentPoly& p) {
  if (p.is_zero()) fail(Errc::zero_polynomial, "zero polynomial has no polygon");
  auto corners = newton_polygon(p.support());
  const Dir up{Z(1), Z(-1)}, down{Z(-1), Z(1)};
  bool segment = corners.size() == 2;
  std::vector<HullEdge> out;
  for (const HullEdge& e : hull_edges(corners)) {
    if (!(e.dir == up || e.dir == down)) continue;
    if (segment && !(e.dir == up)) continue;
    out.push_back(e);
  }
  return out;
}

ObstructionResult edge_obstruction_test(const LaurentPoly& p, const LaurentPoly& q,
                                        const Dir& d) {
  if (d.rho == 0) fail(Errc::hypothesis_unmet, "direction needs rho != 0");
  auto ds = dir_set(p);
  if (std::find(ds.begin(), ds.end(), d) == ds.end())
    fail(Errc::hypothesis_unmet, "direction " + dir_str(d) + " is not an edge normal of P");
  LaurentPoly jt = tilde_j(p, q);
  if (jt.is_zero() || v_deg(d, jt) != Q(-d.rho))
    fail(Errc::hypothesis_unmet, "valuation of the corrected antiderivative is not -rho");
  Q r = resultant(dehomogenize_y(leading_form(d, p)), dehomogenize_y(leading_form(d, jt)));
  return {r, r != 0};
}

PairRoot pair_leading_root(const LaurentPoly& p, const LaurentPoly& q, const Dir& d) {
  Q vp = v_deg(d, p), vq = v_deg(d, q);
  if (vq == 0) fail(Errc::ratio_mismatch, "Q has valuation zero along " + dir_str(d));
  Q ratio = vp / vq;
  if (ratio <= 0)
    fail(Errc::ratio_mismatch, "valuation ratio along " + dir_str(d) + " is not positive");
  Z m = ratio.get_num(), n = ratio.get_den();
  auto extract = [&](const LaurentPoly& poly, const Z& e, const char* which) {
    auto [r0, k] = power_free_root(leading_form(d, poly), d);
    if (!divides(e, Z(k)))
      fail(Errc::no_common_root, std::string("leading form of ") + which +
                                     " is not an exact power of index " + z_str(e));
    HomogForm s = hf_pow(r0, Z(Z(k) / e).get_ui());
    Q lc = s.fhat.lc();
    return std::pair<HomogForm, Q>{HomogForm{s.d, s.alpha, s.beta, s.fhat.scaled(Q(1) / lc)},
                                   q_pow(lc, to_long(e))};
  };
  auto [rp, lp] = extract(p, m, "P");
  auto [rq, lq] = extract(q, n, "Q");
  if (!homog_equal(rp, rq))
    fail(Errc::no_common_root, "leading forms of P and Q have different roots");
  return {rp, m.get_ui(), n.get_ui(), lp, lq};
}

std::vector<std::string> pair_polygon_audit(const LaurentPoly& p, const LaurentPoly& q) {
  std::vector<std::string> out;
  if (p.is_zero() || q.is_zero()) {
    out.push_back("zero polynomial in the pair");
    return out;
  }
  LaurentPoly br = bracket(p, q);
  if (br.is_zero())
    out.push_back("bracket of the pair vanishes");
  else if (br.term_count() != 1 || br.coeff_at(Q(0), Z(0)) == 0)
    out.push_back("bracket of the pair is not a nonzero constant");
  const char* names[2] = {"P", "Q"};
  const LaurentPoly* polys[2] = {&p, &q};
  for (int s = 0; s < 2; ++s)
    for (const HullEdge& e : slope_one_audit(*polys[s]))
      out.push_back(std::string(names[s]) + " has a slope-one polygon edge " + pt_str(e.a) +
                    " to " + pt_str(e.b));
  for (const Dir& d : dir_set(p)) {
    if (!(d.sigma <= -1 && d.rho + d.sigma >= 1)) continue;
    Point en = st_en(d, p).second;
    if (en.x > en.y && en.y > 0)
      out.push_back("direction " + dir_str(d) + ": corner " + pt_str(en) +
                    " is forbidden strictly between (1,-1) and (1,0)");
  }
  for (const Dir& d : dir_set(p)) {
    if (!in_lower_arc(d)) continue;
    try {
      PairRoot pr = pair_leading_root(p, q, d);
      if (Q(Z(pr.m) * d.rho) > v_deg(d, p))
        out.push_back("direction " + dir_str(d) + ": common-root power " +
                      std::to_string(pr.m) + " exceeds the valuation budget");
    } catch (const Error&) {
    }
  }
  return out;
}

}  // namespace jnp
