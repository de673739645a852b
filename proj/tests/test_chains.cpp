#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "doctest.h"
#include "jnp/chains.hpp"
#include "jnp/laurent.hpp"

using namespace jnp;

namespace {

LaurentPoly T(const Q& c, const Q& xe, long ye) { return LaurentPoly::term(c, xe, Z(ye)); }
const LaurentPoly x = T(Q(1), Q(1), 0);
LaurentPoly C(const Q& c) { return LaurentPoly::constant(c); }

template <class F>
Errc code_of(F f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::ok;
}

template <class F>
std::string what_of(F f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

bool has_sub(const std::string& s, const std::string& sub) {
  return s.find(sub) != std::string::npos;
}

bool any_has(const std::vector<std::string>& v, const std::string& sub) {
  return std::any_of(v.begin(), v.end(), [&](const std::string& s) { return has_sub(s, sub); });
}

Point P2(long a, long b) { return Point{Q(a), Q(b)}; }

HomogForm scaled_form(const HomogForm& h, const Q& c) {
  return HomogForm{h.d, h.alpha, h.beta, h.fhat.scaled(c)};
}

AdmissibleChain mk(std::vector<Point> pts, std::vector<Dir> dirs,
                   std::vector<EdgeWitness> wits) {
  AdmissibleChain c;
  c.points = std::move(pts);
  c.dirs = std::move(dirs);
  c.witnesses = std::move(wits);
  return c;
}

const CandidateReport* find_pt(const EnumerationReport& r, long a, long b) {
  for (const CandidateReport& cr : r.candidates)
    if (cr.point == P2(a, b)) return &cr;
  return nullptr;
}

bool same_chain(const AdmissibleChain& l, const AdmissibleChain& r) {
  if (l.points.size() != r.points.size() || l.dirs.size() != r.dirs.size() ||
      l.witnesses.size() != r.witnesses.size())
    return false;
  for (size_t i = 0; i < l.points.size(); ++i)
    if (!(l.points[i] == r.points[i])) return false;
  for (size_t i = 0; i < l.dirs.size(); ++i)
    if (!(l.dirs[i] == r.dirs[i])) return false;
  for (size_t i = 0; i < l.witnesses.size(); ++i) {
    const EdgeWitness& a = l.witnesses[i];
    const EdgeWitness& b = r.witnesses[i];
    if (a.R.has_value() != b.R.has_value() || a.G.has_value() != b.G.has_value() ||
        a.i.has_value() != b.i.has_value())
      return false;
    if (a.R && !homog_equal(*a.R, *b.R)) return false;
    if (a.G && !homog_equal(*a.G, *b.G)) return false;
    if (a.i && *a.i != *b.i) return false;
  }
  return true;
}

bool same_report(const EnumerationReport& l, const EnumerationReport& r) {
  if (l.bound != r.bound || l.candidates.size() != r.candidates.size()) return false;
  for (size_t i = 0; i < l.candidates.size(); ++i) {
    const CandidateReport& a = l.candidates[i];
    const CandidateReport& b = r.candidates[i];
    if (!(a.point == b.point) || a.v11 != b.v11 || a.status != b.status ||
        a.reasons != b.reasons || a.chain.has_value() != b.chain.has_value())
      return false;
    if (a.chain && !same_chain(*a.chain, *b.chain)) return false;
  }
  return true;
}

// definition-chasing feasibility screen: loops instead of gcd arithmetic
bool brute_tier1(const Point& q, const Dir& d, const Z& m) {
  Z alpha = q.x.get_num(), beta = q.y.get_num();
  Z u = d.rho * alpha + d.sigma * beta;
  if (u < d.rho) return false;
  if (beta == 0 && d.rho == 1) return true;
  Z span = -d.rho - d.sigma;
  for (Z s(1); s <= m; ++s)
    if (divides(u, s * span)) return true;
  Z n2 = z_gcd(alpha, beta);
  for (Z g(1); g <= n2; ++g)
    if (divides(g, n2) && divides(u, g * span)) return true;
  return false;
}

// from-scratch reachability sweep over the report universe
std::vector<Point> brute_discarded(unsigned long bound) {
  Z nb(bound);
  std::vector<Point> order;
  for (Z t(1); t < nb; ++t) {
    order.push_back(Point{Q(t), Q(0)});
    Z bcap = Z((t - 1) * (t - 1));
    if (bcap < nb - 1) bcap = Z(nb - 1);
    for (Z b(1); b <= bcap; ++b) order.push_back(Point{Q(Z(t + b)), Q(b)});
  }
  std::sort(order.begin(), order.end(), [](const Point& a, const Point& b) {
    Q sa = a.x - a.y, sb = b.x - b.y;
    if (sa != sb) return sa < sb;
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  });
  auto key = [](const Point& p) {
    return std::pair<long, long>{p.x.get_num().get_si(), p.y.get_num().get_si()};
  };
  std::map<std::pair<long, long>, Dir> arrival;
  std::vector<Point> out;
  for (size_t pi = 0; pi < order.size(); ++pi) {
    const Point& p = order[pi];
    if (p.y == 0) {
      arrival.emplace(key(p), Dir{Z(0), Z(-1)});
      continue;
    }
    std::optional<Dir> best;
    for (size_t qi = 0; qi < pi; ++qi) {
      const Point& q = order[qi];
      auto it = arrival.find(key(q));
      if (it == arrival.end()) continue;
      Z dx = Q(p.x - q.x).get_num(), dy = Q(p.y - q.y).get_num();
      if (dy < 1 || dx <= dy) continue;
      Z g = z_gcd(dx, dy);
      Dir d{Z(dy / g), Z(-(dx / g))};
      if (!brute_tier1(q, d, g)) continue;
      if (!dir_lt(it->second, d)) continue;
      if (!best || dir_lt(d, *best)) best = d;
    }
    if (best)
      arrival.emplace(key(p), *best);
    else
      out.push_back(p);
  }
  return out;
}

}  // namespace

TEST_CASE("chain validation accepts the reference chains") {
  auto [R, G, i] = family_witness("caso2", {{"n", Q(2)}});

  ChainCheck full = validate_chain(
      mk({P2(1, 0), P2(7, 4)}, {Dir{2, -3}}, {EdgeWitness{R, G, i}}));
  CHECK(full.ok);
  CHECK(!full.skeleton);
  CHECK(full.violations.empty());

  ChainCheck skel = validate_chain(
      mk({P2(1, 0), P2(7, 4)}, {Dir{2, -3}}, {EdgeWitness{R, std::nullopt, std::nullopt}}));
  CHECK(skel.ok);
  CHECK(skel.skeleton);

  ChainCheck bare = validate_chain(mk({P2(1, 0), P2(7, 4)}, {Dir{2, -3}}, {EdgeWitness{}}));
  CHECK(bare.ok);
  CHECK(bare.skeleton);

  ChainCheck seed = validate_chain(mk({P2(3, 0)}, {}, {}));
  CHECK(seed.ok);
  CHECK(!seed.skeleton);
}

TEST_CASE("chain validation flags each violation class") {
  auto [R, G, i] = family_witness("caso2", {{"n", Q(2)}});
  auto [Re, Ge, ie] = family_witness("ejemplo", {{"k", Q(1)}, {"j", Q(1)}});
  (void)Re;
  (void)ie;

  CHECK(validate_chain(mk({}, {}, {})).violations ==
        std::vector<std::string>{"chain has no corners"});
  CHECK(validate_chain(mk({P2(1, 0), P2(3, 1)}, {Dir{1, -2}}, {})).violations ==
        std::vector<std::string>{"corner, direction and witness counts do not line up"});

  auto frac = validate_chain(
      mk({P2(1, 0), Point{make_q(Z(3), Z(2)), Q(1)}}, {Dir{1, -2}}, {EdgeWitness{}}));
  CHECK(any_has(frac.violations, "corner (3/2,1) is off the integer lattice"));

  auto start = validate_chain(mk({Point{Q(0), Q(1)}}, {}, {}));
  CHECK(any_has(start.violations, "chain must start at (l,0) with l >= 1"));

  auto negy = validate_chain(mk({P2(2, 0), P2(4, -1)}, {Dir{1, -2}}, {EdgeWitness{}}));
  CHECK(any_has(negy.violations, "corner (4,-1) has negative y"));

  auto skew = validate_chain(mk({P2(3, 0), P2(5, 5)}, {Dir{5, -2}}, {EdgeWitness{}}));
  CHECK(any_has(skew.violations, "corner (5,5) has nonpositive skew degree"));

  auto arc = validate_chain(mk({P2(1, 0), P2(2, 1)}, {Dir{1, -1}}, {EdgeWitness{}}));
  CHECK(arc.violations ==
        std::vector<std::string>{"edge 1 along (1,-1): direction outside the open lower arc"});
  auto arc2 = validate_chain(mk({P2(1, 0), P2(5, 2)}, {Dir{2, -4}}, {EdgeWitness{}}));
  CHECK(any_has(arc2.violations, "direction outside the open lower arc"));

  auto mono = validate_chain(mk({P2(2, 0), P2(5, 2), P2(7, 3)}, {Dir{2, -3}, Dir{1, -2}},
                                {EdgeWitness{}, EdgeWitness{}}));
  CHECK(mono.violations ==
        std::vector<std::string>{"edge 2 along (1,-2): directions do not strictly increase"});

  auto monoval = validate_chain(mk({P2(1, 0), P2(4, 2), P2(6, 3)}, {Dir{2, -3}, Dir{1, -2}},
                                   {EdgeWitness{}, EdgeWitness{}}));
  CHECK(monoval.violations.size() == 2);
  CHECK(any_has(monoval.violations, "edge 2 along (1,-2): directions do not strictly increase"));
  CHECK(any_has(monoval.violations, "edge 2 along (1,-2): valuation below rho at the start corner"));

  auto step = validate_chain(mk({P2(1, 0), P2(4, 1)}, {Dir{1, -2}}, {EdgeWitness{}}));
  CHECK(step.violations ==
        std::vector<std::string>{
            "edge 1 along (1,-2): step is not a positive multiple of (-sigma, rho)"});

  auto triple = validate_chain(
      mk({P2(1, 0), P2(7, 4)}, {Dir{2, -3}}, {EdgeWitness{R, G, std::nullopt}}));
  CHECK(triple.violations ==
        std::vector<std::string>{
            "edge 1 along (2,-3): companion data without a complete (R, G, i) triple"});
  auto triple2 = validate_chain(
      mk({P2(1, 0), P2(7, 4)}, {Dir{2, -3}}, {EdgeWitness{std::nullopt, G, i}}));
  CHECK(any_has(triple2.violations, "companion data without a complete (R, G, i) triple"));

  auto rdir = validate_chain(
      mk({P2(1, 0), P2(3, 1)}, {Dir{1, -2}}, {EdgeWitness{R, std::nullopt, std::nullopt}}));
  CHECK(rdir.violations ==
        std::vector<std::string>{"edge 1 along (1,-2): leading form graded by a different direction"});

  auto mono1 = validate_chain(mk({P2(1, 0), P2(3, 1)}, {Dir{1, -2}},
                                 {EdgeWitness{from_poly(T(Q(1), Q(3), 1), Dir{1, -2}),
                                              std::nullopt, std::nullopt}}));
  CHECK(any_has(mono1.violations, "a monomial leading form cannot span an edge"));

  HomogForm wfhat{Dir{1, -2}, Z(1), Z(0), QPoly::monomial(Q(1), 1)};
  auto wdiv = validate_chain(
      mk({P2(1, 0), P2(3, 1)}, {Dir{1, -2}}, {EdgeWitness{wfhat, std::nullopt, std::nullopt}}));
  CHECK(wdiv.violations ==
        std::vector<std::string>{"edge 1 along (1,-2): leading form with w | fhat"});

  auto span = validate_chain(
      mk({P2(1, 0), P2(4, 2)}, {Dir{2, -3}}, {EdgeWitness{R, std::nullopt, std::nullopt}}));
  CHECK(span.violations ==
        std::vector<std::string>{"edge 1 along (2,-3): leading form does not span the edge"});

  auto gdir = validate_chain(
      mk({P2(1, 0), P2(7, 4)}, {Dir{2, -3}}, {EdgeWitness{R, Ge, i}}));
  CHECK(gdir.violations ==
        std::vector<std::string>{"edge 1 along (2,-3): companion graded by a different direction"});

  auto order0 = validate_chain(
      mk({P2(1, 0), P2(7, 4)}, {Dir{2, -3}}, {EdgeWitness{R, G, 0ul}}));
  CHECK(order0.violations ==
        std::vector<std::string>{"edge 1 along (2,-3): companion order must be at least 1"});

  auto uval = validate_chain(mk({P2(1, 0), P2(7, 4)}, {Dir{2, -3}}, {EdgeWitness{R, R, i}}));
  CHECK(any_has(uval.violations, "edge 1 along (2,-3): companion valuation off the forced value"));

  auto badg = validate_chain(
      mk({P2(1, 0), P2(7, 4)}, {Dir{2, -3}}, {EdgeWitness{R, scaled_form(G, Q(2)), i}}));
  CHECK(badg.violations ==
        std::vector<std::string>{"edge 1 along (2,-3): bracket equation fails in the edge variable"});
}

TEST_CASE("chain extraction from a polygon") {
  LaurentPoly w = T(Q(1), Q(3), 1) + x;
  AdmissibleChain c1 = chain_from_polygon(w.pow(2) + C(Q(1)), 2);
  REQUIRE(c1.points.size() == 2);
  CHECK(c1.points[0] == P2(1, 0));
  CHECK(c1.points[1] == P2(3, 1));
  REQUIRE(c1.dirs.size() == 1);
  CHECK((c1.dirs[0] == Dir{1, -2}));
  REQUIRE(c1.witnesses.size() == 1);
  REQUIRE(c1.witnesses[0].R.has_value());
  CHECK(homog_equal(*c1.witnesses[0].R, from_poly(w, Dir{1, -2})));
  CHECK(!c1.witnesses[0].G.has_value());
  ChainCheck ck1 = validate_chain(c1);
  CHECK(ck1.ok);
  CHECK(ck1.skeleton);

  auto [re, ge, ie] = family_witness("ejemplo", {{"k", Q(1)}, {"j", Q(1)}});
  c1.witnesses[0].G = ge;
  c1.witnesses[0].i = ie;
  ChainCheck ck1f = validate_chain(c1);
  CHECK(ck1f.ok);
  CHECK(!ck1f.skeleton);

  LaurentPoly v = x * (C(Q(1)) + T(Q(1), Q(3), 2)).pow(2);
  AdmissibleChain c2 = chain_from_polygon(v.pow(3) + C(Q(1)), 3);
  REQUIRE(c2.points.size() == 2);
  CHECK(c2.points[0] == P2(1, 0));
  CHECK(c2.points[1] == P2(7, 4));
  CHECK((c2.dirs[0] == Dir{2, -3}));
  REQUIRE(c2.witnesses[0].R.has_value());
  CHECK(homog_equal(*c2.witnesses[0].R, from_poly(v, Dir{2, -3})));
  CHECK(validate_chain(c2).skeleton);

  AdmissibleChain flat = chain_from_polygon(x * x + C(Q(1)), 2);
  CHECK(flat.points.size() == 1);
  CHECK(flat.points[0] == P2(1, 0));
  CHECK(flat.dirs.empty());
  CHECK(validate_chain(flat).ok);

  CHECK(code_of([&] { chain_from_polygon(w, 1); }) == Errc::not_anchored);
  CHECK(has_sub(what_of([&] { chain_from_polygon(w, 1); }), "constant term absent"));
  CHECK(code_of([] { chain_from_polygon(LaurentPoly{}, 1); }) == Errc::zero_polynomial);
  CHECK(code_of([] { chain_from_polygon(C(Q(1)), 0); }) == Errc::bad_input);

  CHECK(code_of([] { chain_from_polygon(x.pow(3) + C(Q(1)), 2); }) == Errc::not_divisible);
  CHECK(has_sub(what_of([] { chain_from_polygon(x.pow(3) + C(Q(1)), 2); }),
                "corner (3,0) is not divisible by 2"));

  LaurentPoly np = x * x + T(Q(3), Q(4), 1) + T(Q(2), Q(6), 2) + C(Q(1));
  CHECK(code_of([&] { chain_from_polygon(np, 2); }) == Errc::power_root_failed);
  CHECK(has_sub(what_of([&] { chain_from_polygon(np, 2); }),
                "leading form along (1,-2) is not an exact power of index 2"));
}

TEST_CASE("bounded enumeration pins the small table") {
  EnumerationReport rep = enumerate_corners(6, {});
  CHECK(rep.bound == 6);
  REQUIRE(rep.candidates.size() == 45);

  struct Row {
    long a, b;
    CandidateStatus st;
  };
  const CandidateStatus W = CandidateStatus::witnessed;
  const CandidateStatus D = CandidateStatus::discarded;
  const CandidateStatus U = CandidateStatus::unresolved;
  std::vector<Row> table = {
      {1, 0, W},  {2, 0, W},  {3, 0, W},   {4, 0, W},   {5, 0, W},   {2, 1, D},  {3, 2, D},
      {4, 3, D},  {5, 4, D},  {6, 5, D},   {3, 1, W},   {4, 2, D},   {5, 3, D},  {6, 4, D},
      {7, 5, D},  {4, 1, W},  {5, 2, W},   {6, 3, D},   {7, 4, W},   {8, 5, D},  {5, 1, W},
      {6, 2, W},  {7, 3, W},  {8, 4, D},   {9, 5, D},   {10, 6, W},  {11, 7, D}, {12, 8, D},
      {13, 9, W}, {6, 1, W},  {7, 2, W},   {8, 3, W},   {9, 4, W},   {10, 5, D}, {11, 6, D},
      {12, 7, W}, {13, 8, W}, {14, 9, D},  {15, 10, D}, {16, 11, D}, {17, 12, U}, {18, 13, D},
      {19, 14, D}, {20, 15, D}, {21, 16, W}};
  REQUIRE(table.size() == 45);
  for (const Row& row : table) {
    const CandidateReport* cr = find_pt(rep, row.a, row.b);
    REQUIRE_MESSAGE(cr != nullptr, row.a, ",", row.b);
    CHECK_MESSAGE(cr->status == row.st, row.a, ",", row.b);
    CHECK(cr->v11 == Z(row.a - row.b));
  }

  CHECK(audit_report(rep).empty());
  CHECK(same_report(rep, enumerate_corners(6, {})));

  const CandidateReport* seed = find_pt(rep, 2, 0);
  REQUIRE(seed->chain.has_value());
  CHECK(seed->chain->points.size() == 1);
  CHECK(seed->chain->dirs.empty());

  const CandidateReport* e31 = find_pt(rep, 3, 1);
  REQUIRE(e31->chain.has_value());
  CHECK((e31->chain->points == std::vector<Point>{P2(1, 0), P2(3, 1)}));
  CHECK((e31->chain->dirs == std::vector<Dir>{Dir{1, -2}}));
  REQUIRE(e31->chain->witnesses[0].i.has_value());
  CHECK(*e31->chain->witnesses[0].i == 2);

  const CandidateReport* e74 = find_pt(rep, 7, 4);
  REQUIRE(e74->chain.has_value());
  CHECK((e74->chain->points == std::vector<Point>{P2(1, 0), P2(7, 4)}));
  CHECK((e74->chain->dirs == std::vector<Dir>{Dir{2, -3}}));
  REQUIRE(e74->chain->witnesses[0].R.has_value());
  CHECK(homog_equal(*e74->chain->witnesses[0].R,
                    from_poly(x * (C(Q(1)) + T(Q(1), Q(3), 2)).pow(2), Dir{2, -3})));
  CHECK(*e74->chain->witnesses[0].i == 2);
  CHECK(e74->reasons.empty());

  const CandidateReport* open = find_pt(rep, 17, 12);
  CHECK(!open->reasons.empty());
  REQUIRE(open->chain.has_value());
  ChainCheck oc = validate_chain(*open->chain);
  CHECK(oc.ok);
  CHECK(oc.skeleton);

  for (const CandidateReport& cr : rep.candidates) {
    if (cr.status == CandidateStatus::witnessed && cr.point.y > 0) {
      REQUIRE(cr.chain.has_value());
      ChainCheck ck = validate_chain(*cr.chain);
      CHECK(ck.ok);
      CHECK(!ck.skeleton);
    }
    if (cr.status != CandidateStatus::discarded && cr.point.y > 0) {
      Z a = cr.point.x.get_num(), b = cr.point.y.get_num();
      CHECK(b < a);
      CHECK(b <= (a - b - 1) * (a - b - 1));
    }
    if (cr.chain) {
      const auto& pts = cr.chain->points;
      for (size_t j = 1; j < pts.size(); ++j) {
        CHECK(pts[j - 1].x < pts[j].x);
        CHECK(pts[j - 1].y < pts[j].y);
        CHECK(pts[j - 1].x - pts[j - 1].y < pts[j].x - pts[j].y);
      }
    }
  }

  const CandidateReport* e42 = find_pt(rep, 4, 2);
  CHECK((e42->reasons ==
         std::vector<std::string>{
             "edge from (2,1) along (1,-2): valuation below rho",
             "edge from (1,0) along (2,-3): no feasibility case applies"}));
  CHECK(!e42->chain.has_value());
}

TEST_CASE("tiny bounds and candidate order") {
  CHECK(enumerate_corners(1, {}).candidates.empty());

  EnumerationReport r2 = enumerate_corners(2, {});
  REQUIRE(r2.candidates.size() == 2);
  CHECK(r2.candidates[0].point == P2(1, 0));
  CHECK(r2.candidates[0].status == CandidateStatus::witnessed);
  CHECK(r2.candidates[1].point == P2(2, 1));
  CHECK(r2.candidates[1].status == CandidateStatus::discarded);
  CHECK(r2.candidates[1].reasons ==
        std::vector<std::string>{"no predecessor corner admits an edge into this point"});

  EnumerationReport r3 = enumerate_corners(3, {});
  REQUIRE(r3.candidates.size() == 6);
  CHECK(r3.candidates[0].point == P2(1, 0));
  CHECK(r3.candidates[1].point == P2(2, 1));
  CHECK(r3.candidates[2].point == P2(3, 2));
  CHECK(r3.candidates[3].point == P2(2, 0));
  CHECK(r3.candidates[4].point == P2(3, 1));
  CHECK(r3.candidates[5].point == P2(4, 2));
  CHECK(r3.candidates[4].status == CandidateStatus::witnessed);
  CHECK(audit_report(r3).empty());
}

TEST_CASE("reachability agrees with a definition chase") {
  for (unsigned long bound : {4ul, 6ul}) {
    EnumerationReport rep = enumerate_corners(bound, {});
    std::vector<Point> want = brute_discarded(bound);
    std::vector<Point> got;
    for (const CandidateReport& cr : rep.candidates)
      if (cr.status == CandidateStatus::discarded) got.push_back(cr.point);
    auto lt = [](const Point& a, const Point& b) {
      if (a.x != b.x) return a.x < b.x;
      return a.y < b.y;
    };
    std::sort(want.begin(), want.end(), lt);
    std::sort(got.begin(), got.end(), lt);
    REQUIRE(want.size() == got.size());
    for (size_t i = 0; i < want.size(); ++i) CHECK(want[i] == got[i]);
  }
}

TEST_CASE("report audit catches tampering") {
  EnumerationReport rep = enumerate_corners(4, {});
  CHECK(audit_report(rep).empty());

  EnumerationReport fake = rep;
  CandidateReport bogus;
  bogus.point = P2(5, 4);
  bogus.v11 = 1;
  bogus.status = CandidateStatus::witnessed;
  fake.candidates.push_back(bogus);
  auto v = audit_report(fake);
  CHECK(any_has(v, "staircase corner not discarded"));
  CHECK(any_has(v, "corner above the square bound not discarded"));
  CHECK(any_has(v, "witnessed corner without a chain"));
  CHECK(any_has(v, "candidates out of order"));
  CHECK(any_has(v, "corner outside the report universe"));

  EnumerationReport skel = rep;
  for (CandidateReport& cr : skel.candidates)
    if (cr.point == P2(3, 1)) {
      cr.chain->witnesses[0].G.reset();
      cr.chain->witnesses[0].i.reset();
    }
  CHECK(any_has(audit_report(skel), "witnessed corner with incomplete edge witnesses"));

  EnumerationReport flip = rep;
  for (CandidateReport& cr : flip.candidates)
    if (cr.point == P2(2, 1)) cr.status = CandidateStatus::unresolved;
  CHECK(any_has(audit_report(flip), "staircase corner not discarded"));
}
