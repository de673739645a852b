// Text front end: the polynomial expression grammar, canonical
// serialization, and JSON/CSV encodings of chains and enumeration reports.
#pragma once

#include <string>

#include "jnp/chains.hpp"

namespace jnp {

// Grammar: poly := term (('+'|'-') term)*, term := factors with optional
// '*', factors are rationals, x[^rational], y[^integer >= 0], or
// parenthesized subexpressions with an optional nonnegative integer power.
// Whitespace is insignificant. Errors: ParseError with offset and the
// expected token set.
LaurentPoly parse_poly(const std::string& text);

// Canonical text: terms by decreasing y-exponent then decreasing
// x-exponent, lowest-terms rationals, '*' between printed pieces.
// parse_poly(serialize(p)) == p.
std::string serialize(const LaurentPoly& p);

std::string serialize(const HomogForm& h);

const char* status_name(CandidateStatus s);

std::string chain_to_json_text(const AdmissibleChain& c, int indent = 2);
AdmissibleChain chain_from_json_text(const std::string& text);

std::string report_to_json_text(const EnumerationReport& r, int indent = 2);

// header a,b,v11,status and one row per candidate
std::string report_to_csv(const EnumerationReport& r);

}  // namespace jnp
