#include "jnp/textio.hpp"

#include <cctype>

#include "json.hpp"

namespace jnp {

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;

  [[noreturn]] void err(size_t at, const std::string& expected) {
    fail(Errc::parse_error,
         "parse error at offset " + std::to_string(at) + ": expected " + expected);
  }

  void skip_ws() {
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
  }

  bool factor_ahead() {
    skip_ws();
    if (pos >= s.size()) return false;
    char c = s[pos];
    return c == 'x' || c == 'y' || c == '(' || std::isdigit((unsigned char)c);
  }

  bool caret() {
    skip_ws();
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      return true;
    }
    return false;
  }

  Z parse_integer(bool allow_sign) {
    skip_ws();
    size_t at = pos;
    bool neg = false;
    if (allow_sign && pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      neg = s[pos] == '-';
      ++pos;
    }
    size_t start = pos;
    while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
    if (pos == start) err(at, "an integer");
    Z v(s.substr(start, pos - start));
    return neg ? Z(-v) : v;
  }

  Q parse_rational(bool allow_sign) {
    Z num = parse_integer(allow_sign);
    size_t save = pos;
    skip_ws();
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      skip_ws();
      size_t at = pos;
      Z den = parse_integer(false);
      if (den < 1) err(at, "a positive integer");
      return make_q(num, den);
    }
    pos = save;
    return Q(num);
  }

  LaurentPoly parse_factor() {
    skip_ws();
    char c = s[pos];
    if (std::isdigit((unsigned char)c)) return LaurentPoly::constant(parse_rational(false));
    if (c == 'x') {
      ++pos;
      Q e(1);
      if (caret()) e = parse_rational(true);
      return LaurentPoly::term(Q(1), e, Z(0));
    }
    if (c == 'y') {
      ++pos;
      Z e(1);
      if (caret()) {
        skip_ws();
        size_t at = pos;
        e = parse_integer(true);
        if (e < 0) err(at, "a nonnegative integer");
      }
      return LaurentPoly::term(Q(1), Q(0), e);
    }
    // '(' guaranteed by factor_ahead
    ++pos;
    LaurentPoly sub = parse_expr();
    skip_ws();
    if (pos >= s.size() || s[pos] != ')') err(pos, "')'");
    ++pos;
    unsigned long e = 1;
    if (caret()) {
      skip_ws();
      size_t at = pos;
      Z z = parse_integer(true);
      if (z < 0) err(at, "a nonnegative integer");
      e = z.get_ui();
    }
    return sub.pow(e);
  }

  LaurentPoly parse_term() {
    LaurentPoly prod = LaurentPoly::constant(Q(1));
    if (!factor_ahead()) err(pos, "a number, 'x', 'y' or '('");
    while (true) {
      prod = prod * parse_factor();
      size_t save = pos;
      skip_ws();
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        if (!factor_ahead()) err(pos, "a number, 'x', 'y' or '('");
        continue;
      }
      pos = save;
      if (!factor_ahead()) break;
    }
    return prod;
  }

  LaurentPoly parse_expr() {
    LaurentPoly acc;
    skip_ws();
    int sign = 1;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    }
    while (true) {
      LaurentPoly t = parse_term();
      acc = acc + (sign < 0 ? t.scaled(Q(-1)) : t);
      skip_ws();
      if (pos >= s.size() || s[pos] == ')') break;
      if (s[pos] == '+')
        sign = 1;
      else if (s[pos] == '-')
        sign = -1;
      else
        err(pos, "'+' or '-'");
      ++pos;
    }
    return acc;
  }
};

}  // namespace

LaurentPoly parse_poly(const std::string& text) {
  Parser p{text};
  LaurentPoly out = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) p.err(p.pos, "end of input");
  return out;
}

std::string serialize(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : p.terms()) {
    Q a = c;
    bool neg = a < 0;
    if (neg) a = -a;
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    first = false;
    bool hasx = k.xe != 0, hasy = k.ye != 0;
    std::string piece;
    if (!hasx && !hasy) {
      piece = q_str(a);
    } else {
      if (a != 1) piece = q_str(a);
      if (hasx) {
        if (!piece.empty()) piece += "*";
        piece += "x";
        if (k.xe != 1) piece += "^" + q_str(k.xe);
      }
      if (hasy) {
        if (!piece.empty()) piece += "*";
        piece += "y";
        if (k.ye != 1) piece += "^" + z_str(k.ye);
      }
    }
    out += piece;
  }
  return out;
}

std::string serialize(const HomogForm& h) { return serialize(to_poly(h)); }

const char* status_name(CandidateStatus s) {
  switch (s) {
    case CandidateStatus::discarded: return "discarded";
    case CandidateStatus::witnessed: return "witnessed";
    case CandidateStatus::unresolved: return "unresolved";
  }
  return "?";
}

namespace {

using nlohmann::json;

json point_json(const Point& p) {
  return json::array({to_long(p.x.get_num()), to_long(p.y.get_num())});
}

json dir_json(const Dir& d) { return json::array({to_long(d.rho), to_long(d.sigma)}); }

json chain_json(const AdmissibleChain& c) {
  json jc;
  jc["points"] = json::array();
  for (const Point& p : c.points) jc["points"].push_back(point_json(p));
  jc["dirs"] = json::array();
  for (const Dir& d : c.dirs) jc["dirs"].push_back(dir_json(d));
  jc["witnesses"] = json::array();
  for (const EdgeWitness& w : c.witnesses) {
    if (!w.R && !w.G && !w.i) {
      jc["witnesses"].push_back(nullptr);
      continue;
    }
    json jw = json::object();
    if (w.R) jw["R"] = serialize(*w.R);
    if (w.G) jw["G"] = serialize(*w.G);
    if (w.i) jw["i"] = *w.i;
    jc["witnesses"].push_back(jw);
  }
  return jc;
}

AdmissibleChain chain_of_json(const json& jc) {
  if (!jc.is_object() || !jc.contains("points") || !jc.contains("dirs") ||
      !jc.contains("witnesses"))
    fail(Errc::parse_error, "chain object needs points, dirs and witnesses");
  AdmissibleChain c;
  for (const json& jp : jc.at("points")) {
    if (!jp.is_array() || jp.size() != 2) fail(Errc::parse_error, "point must be [a,b]");
    c.points.push_back(Point{Q(Z(jp[0].get<long>())), Q(Z(jp[1].get<long>()))});
  }
  for (const json& jd : jc.at("dirs")) {
    if (!jd.is_array() || jd.size() != 2) fail(Errc::parse_error, "dir must be [rho,sigma]");
    c.dirs.push_back(Dir{Z(jd[0].get<long>()), Z(jd[1].get<long>())});
  }
  const json& jws = jc.at("witnesses");
  if (c.dirs.size() + 1 != c.points.size() || jws.size() != c.dirs.size())
    fail(Errc::parse_error, "chain lengths do not line up");
  for (size_t j = 0; j < jws.size(); ++j) {
    EdgeWitness w;
    const json& jw = jws[j];
    if (!jw.is_null()) {
      if (!jw.is_object()) fail(Errc::parse_error, "witness must be an object or null");
      if (jw.contains("R")) w.R = from_poly(parse_poly(jw.at("R").get<std::string>()), c.dirs[j]);
      if (jw.contains("G")) w.G = from_poly(parse_poly(jw.at("G").get<std::string>()), c.dirs[j]);
      if (jw.contains("i")) w.i = jw.at("i").get<unsigned long>();
    }
    c.witnesses.push_back(std::move(w));
  }
  return c;
}

}  // namespace

std::string chain_to_json_text(const AdmissibleChain& c, int indent) {
  return chain_json(c).dump(indent);
}

AdmissibleChain chain_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(Errc::parse_error, std::string("invalid JSON: ") + e.what());
  }
  try {
    return chain_of_json(j);
  } catch (const json::exception& e) {
    fail(Errc::parse_error, std::string("invalid chain JSON: ") + e.what());
  }
}

std::string report_to_json_text(const EnumerationReport& r, int indent) {
  json jr;
  jr["bound"] = r.bound;
  json pool = json::array();
  for (const Q& v : r.config.search.pool) pool.push_back(q_str(v));
  jr["config"] = {{"pool", pool}, {"imax", r.config.search.i_max}};
  jr["candidates"] = json::array();
  for (const CandidateReport& cr : r.candidates) {
    json jc;
    jc["point"] = point_json(cr.point);
    jc["v11"] = to_long(cr.v11);
    jc["status"] = status_name(cr.status);
    jc["chain"] = cr.chain ? chain_json(*cr.chain) : json(nullptr);
    jc["reasons"] = cr.reasons;
    jr["candidates"].push_back(std::move(jc));
  }
  return jr.dump(indent);
}

std::string report_to_csv(const EnumerationReport& r) {
  std::string out = "a,b,v11,status\n";
  for (const CandidateReport& cr : r.candidates) {
    out += z_str(cr.point.x.get_num()) + "," + z_str(cr.point.y.get_num()) + "," +
           z_str(cr.v11) + "," + status_name(cr.status);
    out += "\n";
  }
  return out;
}

}  // namespace jnp
