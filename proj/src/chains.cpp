#include "jnp/chains.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace jnp {

namespace {

std::string pt_str(const Point& p) { return "(" + q_str(p.x) + "," + q_str(p.y) + ")"; }

std::string dir_str(const Dir& d) { return "(" + z_str(d.rho) + "," + z_str(d.sigma) + ")"; }

HomogForm hf_pow(const HomogForm& h, unsigned long e) {
  return {h.d, h.alpha * Z(e), h.beta * Z(e), h.fhat.pow(e)};
}

}  // namespace

ChainCheck validate_chain(const AdmissibleChain& chain) {
  ChainCheck out;
  auto flag = [&](const std::string& m) { out.violations.push_back(m); };
  if (chain.points.empty()) {
    flag("chain has no corners");
    return out;
  }
  if (chain.dirs.size() + 1 != chain.points.size() ||
      chain.witnesses.size() != chain.dirs.size()) {
    flag("corner, direction and witness counts do not line up");
    return out;
  }
  bool lattice_ok = true;
  for (const Point& p : chain.points)
    if (!is_integer(p.x) || !is_integer(p.y)) {
      flag("corner " + pt_str(p) + " is off the integer lattice");
      lattice_ok = false;
    }
  const Point& c0 = chain.points.front();
  if (c0.y != 0 || c0.x < 1) flag("chain must start at (l,0) with l >= 1");
  for (const Point& p : chain.points) {
    if (p.y < 0) flag("corner " + pt_str(p) + " has negative y");
    if (p.x - p.y < 1) flag("corner " + pt_str(p) + " has nonpositive skew degree");
  }
  bool full = true;
  for (size_t j = 0; j < chain.dirs.size(); ++j) {
    const Dir& d = chain.dirs[j];
    std::string here = "edge " + std::to_string(j + 1) + " along " + dir_str(d);
    if (!in_lower_arc(d) || z_gcd(d.rho, d.sigma) != 1) {
      flag(here + ": direction outside the open lower arc");
      continue;
    }
    if (j > 0 && in_lower_arc(chain.dirs[j - 1]) && !dir_lt(chain.dirs[j - 1], d))
      flag(here + ": directions do not strictly increase");
    const Point& a = chain.points[j];
    const Point& b = chain.points[j + 1];
    if (lattice_ok) {
      Z dx = Q(b.x - a.x).get_num(), dy = Q(b.y - a.y).get_num();
      if (dy < 1 || !divides(d.rho, dy) || dx * d.rho != -d.sigma * dy)
        flag(here + ": step is not a positive multiple of (-sigma, rho)");
    }
    if (val(d, a) < Q(d.rho)) flag(here + ": valuation below rho at the start corner");
    const EdgeWitness& w = chain.witnesses[j];
    bool has_r = w.R.has_value(), has_g = w.G.has_value(), has_i = w.i.has_value();
    if (!(has_r && has_g && has_i)) full = false;
    if ((has_g || has_i) && !(has_r && has_g && has_i)) {
      flag(here + ": companion data without a complete (R, G, i) triple");
      continue;
    }
    if (!has_r) continue;
    const HomogForm& R = *w.R;
    if (R.d != d) {
      flag(here + ": leading form graded by a different direction");
      continue;
    }
    if (R.fhat.deg() < 1) flag(here + ": a monomial leading form cannot span an edge");
    if (R.fhat.coeff(0) == 0) flag(here + ": leading form with w | fhat");
    if (!(st_of(R) == a) || !(en_of(R) == b))
      flag(here + ": leading form does not span the edge");
    if (!has_g) continue;
    const HomogForm& G = *w.G;
    unsigned long i = *w.i;
    if (G.d != d) {
      flag(here + ": companion graded by a different direction");
      continue;
    }
    if (i < 1) {
      flag(here + ": companion order must be at least 1");
      continue;
    }
    try {
      if (u_of(G) != u_of(R) * Z(i - 1) + d.rho + d.sigma)
        flag(here + ": companion valuation off the forced value");
      if (!central_residual(R, G, i).is_zero())
        flag(here + ": bracket equation fails in the edge variable");
      else if (bracket(to_poly(G), to_poly(R)) != to_poly(R).pow(i))
        flag(here + ": bracket equation fails as Laurent polynomials");
    } catch (const Error& e) {
      flag(here + ": " + e.what());
    }
  }
  out.ok = out.violations.empty();
  out.skeleton = out.ok && !full;
  return out;
}

AdmissibleChain chain_from_polygon(const LaurentPoly& p, unsigned long m) {
  if (m < 1) fail(Errc::bad_input, "root index must be at least 1");
  if (p.is_zero()) fail(Errc::zero_polynomial, "zero polynomial has no polygon");
  if (p.coeff_at(Q(0), Z(0)) == 0)
    fail(Errc::not_anchored, "constant term absent, polygon does not reach the origin");
  Q qm(m);
  auto scale_pt = [&](const Point& v) {
    Point s{v.x / qm, v.y / qm};
    if (!is_integer(s.x) || !is_integer(s.y))
      fail(Errc::not_divisible, "corner " + pt_str(v) + " is not divisible by " + std::to_string(m));
    return s;
  };
  auto corners = newton_polygon(p.support());
  auto edges = lower_side_edges(corners);
  AdmissibleChain out;
  if (edges.empty()) {
    LaurentPoly base = leading_form(Dir{Z(0), Z(-1)}, p);
    out.points.push_back(scale_pt(st_en(Dir{Z(0), Z(-1)}, base).second));
    return out;
  }
  out.points.push_back(scale_pt(edges.front().a));
  Point cur = edges.front().a;
  for (const HullEdge& e : edges) {
    if (!(e.a == cur)) fail(Errc::bad_input, "lower side edges are not contiguous");
    HomogForm f = from_poly(leading_form(e.dir, p), e.dir);
    auto [root, k] = power_free_root(to_poly(f), e.dir);
    if (k % m != 0)
      fail(Errc::power_root_failed,
           "leading form along " + dir_str(e.dir) + " is not an exact power of index " +
               std::to_string(m));
    EdgeWitness w;
    w.R = hf_pow(root, k / m);
    out.dirs.push_back(e.dir);
    out.witnesses.push_back(std::move(w));
    out.points.push_back(scale_pt(e.b));
    cur = e.b;
  }
  return out;
}

namespace {

struct PointCmp {
  bool operator()(const Point& a, const Point& b) const {
    int c = cmp(a.x, b.x);
    if (c != 0) return c < 0;
    return cmp(a.y, b.y) < 0;
  }
};

struct InEdge {
  Point q;
  Dir d;
  Z m;
};

struct NodeState {
  std::optional<Dir> skel_dir;
  AdmissibleChain skel_chain;
  std::optional<Dir> wit_dir;
  AdmissibleChain wit_chain;
  std::vector<InEdge> usable;
};

// feasibility screen, the same arithmetic witness_search rejects on
std::optional<std::string> screen_edge(const Point& q, const Dir& d, const Z& m) {
  Z alpha = q.x.get_num(), beta = q.y.get_num();
  Z u = d.rho * alpha + d.sigma * beta;
  if (u < d.rho) return "valuation below rho";
  Z span = -d.rho - d.sigma;
  Z g = z_gcd(u, span);
  Z s_min = u / g;
  Z n2 = z_gcd(alpha, beta);
  if (beta == 0 && d.rho == 1) return std::nullopt;
  if (s_min <= m) return std::nullopt;
  if (n2 > 0 && divides(s_min, n2)) return std::nullopt;
  return "no feasibility case applies";
}

struct Sweep {
  const SearchConfig& cfg;
  std::map<Point, NodeState, PointCmp> nodes;
  std::map<std::string, std::optional<std::tuple<HomogForm, HomogForm, unsigned long>>> searched;

  static std::string edge_key(const InEdge& e) {
    return q_str(e.q.x) + "," + q_str(e.q.y) + ";" + z_str(e.d.rho) + "," + z_str(e.d.sigma) +
           ";" + z_str(e.m);
  }

  const std::optional<std::tuple<HomogForm, HomogForm, unsigned long>>& search(const InEdge& e) {
    std::string key = edge_key(e);
    auto it = searched.find(key);
    if (it == searched.end())
      it = searched.emplace(key, witness_search(e.q, e.d, e.m, cfg)).first;
    return it->second;
  }

  // fully witnessed chain into p arriving strictly below target, if any
  std::optional<AdmissibleChain> demand(const Point& p, const Dir& target) {
    NodeState& ns = nodes.at(p);
    if (ns.wit_dir && dir_lt(*ns.wit_dir, target)) return ns.wit_chain;
    for (const InEdge& e : ns.usable) {
      if (!dir_lt(e.d, target)) break;
      if (ns.wit_dir && !dir_lt(e.d, *ns.wit_dir)) continue;
      const auto& found = search(e);
      if (!found) continue;
      auto prefix = demand(e.q, e.d);
      if (!prefix) continue;
      AdmissibleChain c = *prefix;
      c.points.push_back(p);
      c.dirs.push_back(e.d);
      c.witnesses.push_back(
          EdgeWitness{std::get<0>(*found), std::get<1>(*found), std::get<2>(*found)});
      ns.wit_dir = e.d;
      ns.wit_chain = c;
      return c;
    }
    return std::nullopt;
  }
};

const size_t kReasonCap = 16;

void push_reason(std::vector<std::string>& reasons, const std::string& line) {
  if (reasons.size() < kReasonCap)
    reasons.push_back(line);
  else if (reasons.size() == kReasonCap)
    reasons.push_back("further edges omitted");
}

}  // namespace

EnumerationReport enumerate_corners(unsigned long bound, const EnumerateConfig& cfg) {
  EnumerationReport report;
  report.bound = bound;
  report.config = cfg;
  if (bound < 2) return report;
  Z nb(bound);

  std::vector<Point> order;
  for (Z t(1); t < nb; ++t) {
    order.push_back(Point{Q(t), Q(0)});
    Z bcap = (t - 1) * (t - 1);
    if (bcap < nb - 1) bcap = nb - 1;
    for (Z b(1); b <= bcap; ++b) order.push_back(Point{Q(t + b), Q(b)});
  }
  std::sort(order.begin(), order.end(), [](const Point& a, const Point& b) {
    int c = cmp(a.x - a.y, b.x - b.y);
    if (c != 0) return c < 0;
    c = cmp(a.x, b.x);
    if (c != 0) return c < 0;
    return cmp(a.y, b.y) < 0;
  });

  Sweep sweep{cfg.search, {}, {}};
  const Dir sentinel{Z(0), Z(-1)};
  const Dir top{Z(1), Z(-1)};

  for (size_t pi = 0; pi < order.size(); ++pi) {
    const Point& p = order[pi];
    Z a = p.x.get_num(), b = p.y.get_num();
    CandidateReport cr;
    cr.point = p;
    cr.v11 = a - b;
    NodeState& ns = sweep.nodes[p];

    if (b == 0) {
      ns.skel_dir = sentinel;
      ns.skel_chain.points.push_back(p);
      ns.wit_dir = sentinel;
      ns.wit_chain = ns.skel_chain;
      cr.status = CandidateStatus::witnessed;
      cr.chain = ns.wit_chain;
      report.candidates.push_back(std::move(cr));
      continue;
    }

    struct GeomEdge {
      InEdge e;
      std::string verdict;  // empty when usable
    };
    std::vector<GeomEdge> geom;
    for (size_t qi = 0; qi < pi; ++qi) {
      const Point& q = order[qi];
      Z dx = Q(p.x - q.x).get_num(), dy = Q(p.y - q.y).get_num();
      if (dy < 1 || dx <= dy) continue;
      Z g = z_gcd(dx, dy);
      InEdge e{q, Dir{dy / g, -(dx / g)}, g};
      GeomEdge ge{e, ""};
      if (auto why = screen_edge(q, e.d, e.m)) {
        ge.verdict = *why;
      } else {
        const NodeState& qs = sweep.nodes.at(q);
        if (!qs.skel_dir)
          ge.verdict = "predecessor corner is not reachable";
        else if (!dir_lt(*qs.skel_dir, e.d))
          ge.verdict = "chains into the predecessor arrive at or above this direction";
      }
      geom.push_back(std::move(ge));
    }
    std::sort(geom.begin(), geom.end(), [](const GeomEdge& l, const GeomEdge& r) {
      Z c = cross(l.e.d, r.e.d);
      if (c != 0) return c > 0;
      int cx = cmp(l.e.q.x, r.e.q.x);
      if (cx != 0) return cx < 0;
      return cmp(l.e.q.y, r.e.q.y) < 0;
    });

    for (const GeomEdge& ge : geom) {
      if (!ge.verdict.empty()) continue;
      ns.usable.push_back(ge.e);
      if (!ns.skel_dir) {
        ns.skel_dir = ge.e.d;
        ns.skel_chain = sweep.nodes.at(ge.e.q).skel_chain;
        ns.skel_chain.points.push_back(p);
        ns.skel_chain.dirs.push_back(ge.e.d);
        ns.skel_chain.witnesses.push_back(EdgeWitness{});
      }
    }

    if (a - 2 * b >= 1) {
      auto [r, g, i] = family_witness("ejemplo", {{"k", Q(a - 2 * b)}, {"j", Q(b)}});
      ns.wit_dir = Dir{Z(1), Z(-2)};
      ns.wit_chain.points = {Point{Q(a - 2 * b), Q(0)}, p};
      ns.wit_chain.dirs = {Dir{Z(1), Z(-2)}};
      ns.wit_chain.witnesses = {EdgeWitness{r, g, i}};
    }

    if (!ns.skel_dir) {
      cr.status = CandidateStatus::discarded;
      if (geom.empty())
        cr.reasons.push_back("no predecessor corner admits an edge into this point");
      for (const GeomEdge& ge : geom)
        push_reason(cr.reasons, "edge from " + pt_str(ge.e.q) + " along " + dir_str(ge.e.d) +
                                    ": " + ge.verdict);
    } else if (auto wc = sweep.demand(p, top)) {
      cr.status = CandidateStatus::witnessed;
      cr.chain = *wc;
    } else {
      cr.status = CandidateStatus::unresolved;
      cr.chain = ns.skel_chain;
      for (const InEdge& e : ns.usable) {
        const auto& found = sweep.search(e);
        push_reason(cr.reasons,
                    "edge from " + pt_str(e.q) + " along " + dir_str(e.d) +
                        (found ? ": witnessed, but no fully witnessed chain reaches the "
                                 "predecessor below it"
                               : ": no companion found within the search pool"));
      }
    }
    report.candidates.push_back(std::move(cr));
  }
  return report;
}

std::vector<std::string> audit_report(const EnumerationReport& report) {
  std::vector<std::string> out;
  auto flag = [&](const Point& p, const std::string& m) { out.push_back(pt_str(p) + ": " + m); };
  Z nb(report.bound);
  const CandidateReport* prev = nullptr;
  for (const CandidateReport& cr : report.candidates) {
    const Point& p = cr.point;
    if (!is_integer(p.x) || !is_integer(p.y)) {
      flag(p, "corner off the integer lattice");
      continue;
    }
    Z a = p.x.get_num(), b = p.y.get_num();
    if (cr.v11 != a - b) flag(p, "stored skew degree disagrees with the corner");
    if (b < 0 || a <= b) flag(p, "corner outside the admissible quadrant");
    if (a - b >= nb) flag(p, "skew degree at or above the bound");
    if (b > 0) {
      Z bcap = (a - b - 1) * (a - b - 1);
      if (bcap < nb - 1) bcap = nb - 1;
      if (b > bcap) flag(p, "corner outside the report universe");
    } else if (a < 1) {
      flag(p, "start corner needs x >= 1");
    }
    if (prev) {
      Z pv = prev->v11;
      int c = cmp(Q(pv), Q(cr.v11));
      if (c == 0) c = cmp(prev->point.x, p.x);
      if (c == 0) c = cmp(prev->point.y, p.y);
      if (c >= 0) flag(p, "candidates out of order");
    }
    prev = &cr;
    bool discarded = cr.status == CandidateStatus::discarded;
    if (!discarded && b > 0) {
      if (a == b + 1) flag(p, "staircase corner not discarded");
      if (b > (a - b - 1) * (a - b - 1)) flag(p, "corner above the square bound not discarded");
    }
    if (discarded) {
      if (cr.chain) flag(p, "discarded corner carries a chain");
      if (cr.reasons.empty()) flag(p, "discarded corner without reasons");
      continue;
    }
    if (cr.status == CandidateStatus::witnessed) {
      if (!cr.chain) {
        flag(p, "witnessed corner without a chain");
        continue;
      }
      ChainCheck ck = validate_chain(*cr.chain);
      if (!ck.ok)
        for (const std::string& v : ck.violations) flag(p, v);
      else if (ck.skeleton)
        flag(p, "witnessed corner with incomplete edge witnesses");
      if (!(cr.chain->points.back() == p)) flag(p, "chain does not end at the corner");
    } else {
      if (cr.reasons.empty()) flag(p, "unresolved corner without reasons");
      if (cr.chain) {
        ChainCheck ck = validate_chain(*cr.chain);
        if (!ck.ok)
          for (const std::string& v : ck.violations) flag(p, v);
        if (!(cr.chain->points.back() == p)) flag(p, "chain does not end at the corner");
      }
    }
  }
  return out;
}

}  // namespace jnp
