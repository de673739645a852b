#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "jnp/qpoly.hpp"

using namespace jnp;

namespace {
QPoly P(std::vector<Q> c) { return QPoly::from_coeffs(std::move(c)); }
}  // namespace

TEST_CASE("construction trims and reports degree") {
  CHECK(QPoly().is_zero());
  CHECK(QPoly(Q(0)).is_zero());
  CHECK(P({Q(1), Q(2), Q(0)}).deg() == 1);
  CHECK(P({Q(0), Q(0)}).is_zero());
  CHECK(QPoly::monomial(Q(3), 4).deg() == 4);
  CHECK(QPoly::monomial(Q(3), 4).coeff(4) == 3);
  CHECK(QPoly::monomial(Q(0), 4).is_zero());
  CHECK(P({Q(0), Q(0), Q(5)}).ord() == 2);
  CHECK(P({Q(2)}).ord() == 0);
  CHECK(QPoly().ord() == -1);
  CHECK(QPoly().deg() == -1);
}

TEST_CASE("ring operations") {
  QPoly a = P({Q(1), Q(1)});   // 1 + w
  QPoly b = P({Q(1), Q(-1)});  // 1 - w
  CHECK(a * b == P({Q(1), Q(0), Q(-1)}));
  CHECK(a + b == P({Q(2)}));
  CHECK(a - a == QPoly());
  CHECK(-a == P({Q(-1), Q(-1)}));
  CHECK(a.pow(0) == P({Q(1)}));
  CHECK(a.pow(3) == P({Q(1), Q(3), Q(3), Q(1)}));
  CHECK(a.shifted(2) == P({Q(0), Q(0), Q(1), Q(1)}));
  CHECK(a.scaled(Q(1, 2)) == P({Q(1, 2), Q(1, 2)}));
  CHECK(QPoly().pow(0) == P({Q(1)}));
  CHECK(QPoly() * a == QPoly());
}

TEST_CASE("derivative and evaluation") {
  QPoly f = P({Q(5), Q(-2), Q(0), Q(1, 3)});  // 5 - 2w + w^3/3
  CHECK(f.derivative() == P({Q(-2), Q(0), Q(1)}));
  CHECK(f.eval(Q(3)) == Q(5) - Q(6) + Q(9));
  CHECK(QPoly().derivative().is_zero());
  CHECK(P({Q(7)}).derivative().is_zero());
}

TEST_CASE("composition helpers") {
  QPoly f = P({Q(1), Q(0), Q(1)});  // 1 + w^2
  CHECK(f.compose_scale(Q(2)) == P({Q(1), Q(0), Q(4)}));
  CHECK(f.compose_power(3) == P({Q(1), Q(0), Q(0), Q(0), Q(0), Q(0), Q(1)}));
  CHECK(P({Q(2), Q(3)}).compose_scale(Q(-1, 2)) == P({Q(2), Q(-3, 2)}));
}

TEST_CASE("division") {
  QPoly num = P({Q(1), Q(0), Q(0), Q(1)});  // 1 + w^3
  QPoly den = P({Q(1), Q(1)});
  auto [q, r] = divrem(num, den);
  CHECK(r.is_zero());
  CHECK(q == P({Q(1), Q(-1), Q(1)}));
  CHECK(exact_div(num, den) == q);
  CHECK(divides_poly(den, num));
  CHECK(!divides_poly(P({Q(1), Q(2)}), num));
  CHECK_THROWS_AS(exact_div(P({Q(1), Q(0), Q(1)}), den), Error);
  auto [q2, r2] = divrem(P({Q(1), Q(0), Q(1)}), den);
  CHECK(q2 == P({Q(-1), Q(1)}));
  CHECK(r2 == P({Q(2)}));
}

TEST_CASE("monic gcd") {
  QPoly a = P({Q(1), Q(1)}).pow(2) * P({Q(2), Q(-1)});
  QPoly b = P({Q(1), Q(1)}) * P({Q(3), Q(1)});
  CHECK(gcd_monic(a, b) == P({Q(1), Q(1)}));
  CHECK(gcd_monic(a, QPoly()) == a.scaled(Q(1) / a.lc()));
  CHECK(gcd_monic(QPoly(), QPoly()).is_zero());
  CHECK(gcd_monic(P({Q(2)}), a) == P({Q(1)}));
}

TEST_CASE("content and primitive part") {
  QPoly f = P({Q(2), Q(4, 3)});  // 2 + (4/3) w
  CHECK(content(f) == Q(2, 3));
  CHECK(primitive_part(f) == P({Q(3), Q(2)}));
  CHECK(content(QPoly()) == 0);
  QPoly g = P({Q(-2), Q(-4)});
  CHECK(content(g) == Q(-2));
  CHECK(primitive_part(g) == P({Q(1), Q(2)}));
  CHECK(primitive_part(g).scaled(content(g)) == g);
}

TEST_CASE("squarefree decomposition") {
  QPoly f = P({Q(1), Q(1)}).pow(2) * P({Q(-2), Q(1)});
  auto dec = squarefree_decomposition(f);
  CHECK(dec.unit == Q(1));
  REQUIRE(dec.parts.size() == 2);
  CHECK(dec.parts[0].first == P({Q(-2), Q(1)}));
  CHECK(dec.parts[0].second == 1);
  CHECK(dec.parts[1].first == P({Q(1), Q(1)}));
  CHECK(dec.parts[1].second == 2);

  auto dec2 = squarefree_decomposition(P({Q(3), Q(6), Q(3)}));
  CHECK(dec2.unit == Q(3));
  REQUIRE(dec2.parts.size() == 1);
  CHECK(dec2.parts[0].first == P({Q(1), Q(1)}));
  CHECK(dec2.parts[0].second == 2);

  CHECK(squarefree_exponent_gcd(P({Q(1), Q(1)}).pow(2) * P({Q(-1), Q(1)}).pow(4)) == 2);
  CHECK(squarefree_exponent_gcd(P({Q(1), Q(1)}).pow(2) * P({Q(-1), Q(1)}).pow(3)) == 1);
  CHECK(squarefree_exponent_gcd(P({Q(5)})) == 0);
}

TEST_CASE("rational factorization") {
  // w^4 - 1
  auto f = factor(P({Q(-1), Q(0), Q(0), Q(0), Q(1)}));
  CHECK(f.unit == Q(1));
  REQUIRE(f.factors.size() == 3);
  CHECK(f.factors[0].first == P({Q(-1), Q(1)}));
  CHECK(f.factors[1].first == P({Q(1), Q(1)}));
  CHECK(f.factors[2].first == P({Q(1), Q(0), Q(1)}));
  for (const auto& [p, e] : f.factors) CHECK(e == 1);

  auto g = factor(P({Q(-4), Q(2), Q(2)}));  // 2(w-1)(w+2)
  CHECK(g.unit == Q(2));
  REQUIRE(g.factors.size() == 2);
  CHECK(g.factors[0].first == P({Q(-1), Q(1)}));
  CHECK(g.factors[1].first == P({Q(2), Q(1)}));

  auto irr = factor(P({Q(-2), Q(0), Q(1)}));  // w^2 - 2
  REQUIRE(irr.factors.size() == 1);
  CHECK(irr.factors[0].first == P({Q(-2), Q(0), Q(1)}));

  // w^4 + w^2 + 1 = (w^2+w+1)(w^2-w+1)
  auto h = factor(P({Q(1), Q(0), Q(1), Q(0), Q(1)}));
  REQUIRE(h.factors.size() == 2);
  CHECK(h.factors[0].first * h.factors[1].first == P({Q(1), Q(0), Q(1), Q(0), Q(1)}));

  auto neg = factor(P({Q(1), Q(0), Q(-1)}));  // -(w-1)(w+1)
  CHECK(neg.unit == Q(-1));
  REQUIRE(neg.factors.size() == 2);

  // multiplicity: (w+1)^2 (w^2+1)^3
  QPoly big = P({Q(1), Q(1)}).pow(2) * P({Q(1), Q(0), Q(1)}).pow(3);
  auto fb = factor(big);
  REQUIRE(fb.factors.size() == 2);
  CHECK(fb.factors[0].first == P({Q(1), Q(1)}));
  CHECK(fb.factors[0].second == 2);
  CHECK(fb.factors[1].first == P({Q(1), Q(0), Q(1)}));
  CHECK(fb.factors[1].second == 3);

  // rational roots with denominators: (2w-1)(3w+2) = 6w^2+w-2
  auto fr = factor(P({Q(-2), Q(1), Q(6)}));
  CHECK(fr.unit == Q(6));
  REQUIRE(fr.factors.size() == 2);
  CHECK(fr.factors[0].first == P({Q(-1, 2), Q(1)}));
  CHECK(fr.factors[1].first == P({Q(2, 3), Q(1)}));
}

TEST_CASE("resultant") {
  QPoly f = P({Q(-1), Q(0), Q(1)});  // w^2 - 1
  QPoly g = P({Q(-4), Q(0), Q(1)});  // w^2 - 4
  CHECK(resultant(f, g) == Q(9));
  CHECK(resultant(f, f) == 0);
  CHECK(resultant(P({Q(-2), Q(1)}), P({Q(-3), Q(1)})) != 0);
  // shared root kills it
  CHECK(resultant(f, P({Q(-1), Q(1)})) == 0);
  // res(aw+b, c) = c^1
  CHECK(resultant(P({Q(5), Q(1)}), P({Q(7)})) == Q(7));
}

TEST_CASE("monic nth root") {
  QPoly cube = P({Q(1), Q(1)}).pow(3);
  auto r3 = monic_nth_root(cube, 3);
  REQUIRE(r3.has_value());
  CHECK(*r3 == P({Q(1), Q(1)}));
  CHECK(!monic_nth_root(cube, 2).has_value());
  auto r2 = monic_nth_root(P({Q(1), Q(2), Q(1)}), 2);
  REQUIRE(r2.has_value());
  CHECK(*r2 == P({Q(1), Q(1)}));
  auto r1 = monic_nth_root(P({Q(3), Q(1)}), 1);
  REQUIRE(r1.has_value());
  CHECK(*r1 == P({Q(3), Q(1)}));
  CHECK(!monic_nth_root(P({Q(1), Q(1), Q(1)}), 2).has_value());
}

TEST_CASE("printing") {
  CHECK(to_string(QPoly()) == "0");
  CHECK(to_string(P({Q(1), Q(-1), Q(1)})) == "w^2 - w + 1");
  CHECK(to_string(P({Q(-1, 2), Q(0), Q(2)})) == "2*w^2 - 1/2");
  CHECK(to_string(P({Q(0), Q(1)}), "z") == "z");
}
