// Admissible corner chains, chain extraction from Newton polygons, and the
// bounded enumeration that classifies candidate corners.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jnp/homog.hpp"

namespace jnp {

struct EdgeWitness {
  std::optional<HomogForm> R;
  std::optional<HomogForm> G;
  std::optional<unsigned long> i;
};

// points C_0..C_k, dirs d_1..d_k, one witness slot per edge
struct AdmissibleChain {
  std::vector<Point> points;
  std::vector<Dir> dirs;
  std::vector<EdgeWitness> witnesses;
};

struct ChainCheck {
  bool ok = false;        // no violations
  bool skeleton = false;  // ok, but some witness data absent
  std::vector<std::string> violations;
};

// Checks the admissibility conditions: start (l,0) with l >= 1, integer
// corners, strictly increasing lower-arc directions, positive (1,-1)
// valuation at every corner, valuation >= rho on every edge, geometric step
// consistency, and for present witnesses: R homogeneous non-monomial
// spanning the edge and [G,R] = R^i verified both through the one-variable
// residual and the full bracket.
ChainCheck validate_chain(const AdmissibleChain& chain);

// Lower-side skeleton of P scaled by 1/m, with the m-th root of each edge
// leading form attached. Errors: NotAnchored (P(0,0) = 0), NotDivisible
// (corner not in m Z x m Z), PowerRootFailed (leading form is not an exact
// m-th power).
AdmissibleChain chain_from_polygon(const LaurentPoly& p, unsigned long m);

enum class CandidateStatus { discarded, witnessed, unresolved };

struct CandidateReport {
  Point point;
  Z v11;
  CandidateStatus status;
  std::optional<AdmissibleChain> chain;  // full witness chain when witnessed
  std::vector<std::string> reasons;      // discard analysis or open leads
};

struct EnumerateConfig {
  SearchConfig search;
};

struct EnumerationReport {
  unsigned long bound = 0;
  EnumerateConfig config;
  std::vector<CandidateReport> candidates;  // sorted by (v11, x, y)
};

// Classifies every candidate corner with v_{1,-1} < bound in the report
// universe: starts (l,0) with 1 <= l < bound, and corners (a,b) with
// a > b >= 1, a-b < bound, b <= max(bound-1, (a-b-1)^2). Deterministic.
EnumerationReport enumerate_corners(unsigned long bound, const EnumerateConfig& cfg = {});

// Consistency audit of a finished report: staircase corners (n', n'-1) with
// n' >= 2 must be discarded, every non-discarded (a,b) needs b < a and
// b <= (a-b-1)^2, witnessed chains must re-validate with full witnesses,
// and the candidate order must be (v11, x, y). Returns violation messages.
std::vector<std::string> audit_report(const EnumerationReport& report);

}  // namespace jnp
