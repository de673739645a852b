#include "jnpoly.h"

#include <cstdlib>
#include <cstring>
#include <sstream>

#include "jnp/chains.hpp"
#include "jnp/obstruction.hpp"
#include "jnp/textio.hpp"

struct jnp_poly {
  jnp::LaurentPoly v;
};

namespace {

thread_local std::string t_last_error;

char* dup_string(const std::string& s) {
  char* out = (char*)std::malloc(s.size() + 1);
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string pt_str(const jnp::Point& p) {
  return "(" + jnp::q_str(p.x) + ", " + jnp::q_str(p.y) + ")";
}

std::string dir_str(const jnp::Dir& d) {
  return "(" + jnp::z_str(d.rho) + "," + jnp::z_str(d.sigma) + ")";
}

template <typename F>
int guarded(F&& body) {
  try {
    body();
    return JNP_OK;
  } catch (const jnp::Error& e) {
    t_last_error = e.what();
    return (int)e.code();
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return JNP_E_INTERNAL;
  }
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

jnp::Q parse_q(const std::string& text) {
  std::string t = strip(text);
  if (t.empty()) jnp::fail(jnp::Errc::bad_params, "empty number");
  try {
    jnp::Q q(t);
    q.canonicalize();
    return q;
  } catch (const std::exception&) {
    jnp::fail(jnp::Errc::bad_params, "not a rational: '" + t + "'");
  }
}

std::pair<jnp::Q, jnp::Q> parse_q_pair(const char* text, const char* what) {
  if (!text) jnp::fail(jnp::Errc::bad_params, std::string(what) + " is required");
  auto parts = split_csv(text);
  if (parts.size() != 2)
    jnp::fail(jnp::Errc::bad_params, std::string(what) + " must be two comma-separated numbers");
  return {parse_q(parts[0]), parse_q(parts[1])};
}

jnp::Dir parse_dir(const char* text) {
  auto [r, s] = parse_q_pair(text, "direction");
  if (!jnp::is_integer(r) || !jnp::is_integer(s))
    jnp::fail(jnp::Errc::bad_params, "direction entries must be integers");
  return jnp::make_dir(r.get_num(), s.get_num());
}

void list_points(std::ostringstream& os, const std::vector<jnp::Point>& pts) {
  for (const auto& p : pts) os << "  " << pt_str(p) << "\n";
}

}  // namespace

extern "C" {

const char* jnp_status_name(int code) {
  if (code == JNP_E_INTERNAL) return "internal_error";
  if (code < 0 || code > (int)jnp::Errc::bad_input) return "unknown";
  return jnp::errc_name((jnp::Errc)code);
}

const char* jnp_last_error(void) { return t_last_error.c_str(); }

void jnp_string_free(char* s) { std::free(s); }

int jnp_poly_parse(const char* text, jnp_poly** out) {
  return guarded([&] {
    if (!text || !out) jnp::fail(jnp::Errc::bad_input, "null argument");
    *out = new jnp_poly{jnp::parse_poly(text)};
  });
}

void jnp_poly_free(jnp_poly* p) { delete p; }

int jnp_poly_serialize(const jnp_poly* p, char** out) {
  return guarded([&] {
    if (!p || !out) jnp::fail(jnp::Errc::bad_input, "null argument");
    *out = dup_string(jnp::serialize(p->v));
  });
}

int jnp_poly_bracket(const jnp_poly* p, const jnp_poly* q, jnp_poly** out) {
  return guarded([&] {
    if (!p || !q || !out) jnp::fail(jnp::Errc::bad_input, "null argument");
    *out = new jnp_poly{jnp::bracket(p->v, q->v)};
  });
}

int jnp_poly_tilde_j(const jnp_poly* p, const jnp_poly* q, jnp_poly** out) {
  return guarded([&] {
    if (!p || !q || !out) jnp::fail(jnp::Errc::bad_input, "null argument");
    *out = new jnp_poly{jnp::tilde_j(p->v, q->v)};
  });
}

int jnp_poly_equals(const jnp_poly* p, const jnp_poly* q, int* equal) {
  return guarded([&] {
    if (!p || !q || !equal) jnp::fail(jnp::Errc::bad_input, "null argument");
    *equal = p->v == q->v ? 1 : 0;
  });
}

int jnp_cmd_poly_show(const char* expr, const char* dir, char** out) {
  return guarded([&] {
    if (!expr || !out) jnp::fail(jnp::Errc::bad_input, "null argument");
    jnp::LaurentPoly p = jnp::parse_poly(expr);
    std::ostringstream os;
    os << "polynomial: " << jnp::serialize(p) << "\n";
    if (p.is_zero()) {
      os << "support: empty\n";
      *out = dup_string(os.str());
      return;
    }
    os << "level: " << jnp::z_str(p.level()) << "\n";
    auto supp = p.support();
    os << "support (" << supp.size() << " points):\n";
    list_points(os, supp);
    auto corners = jnp::newton_polygon(supp);
    os << "hull corners (counterclockwise):\n";
    list_points(os, corners);
    auto lower = jnp::lower_side_edges(corners);
    os << "lower-side edges:\n";
    if (lower.empty()) os << "  (none)\n";
    for (const auto& e : lower)
      os << "  " << pt_str(e.a) << " -> " << pt_str(e.b) << "  dir " << dir_str(e.dir) << "\n";
    auto dirs = jnp::dir_set(p);
    os << "direction set:";
    if (dirs.empty()) os << " (empty)";
    for (size_t i = 0; i < dirs.size(); ++i) os << (i ? ", " : " ") << dir_str(dirs[i]);
    os << "\n";
    if (dir) {
      jnp::Dir d = parse_dir(dir);
      os << "direction " << dir_str(d) << ":\n";
      os << "  v-degree: " << jnp::q_str(jnp::v_deg(d, p)) << "\n";
      os << "  leading form: " << jnp::serialize(jnp::leading_form(d, p)) << "\n";
      auto [st, en] = jnp::st_en(d, p);
      os << "  st: " << pt_str(st) << "\n";
      os << "  en: " << pt_str(en) << "\n";
    }
    *out = dup_string(os.str());
  });
}

int jnp_cmd_pair_audit(const char* p_expr, const char* q_expr, char** out, int* flagged) {
  return guarded([&] {
    if (!p_expr || !q_expr || !out || !flagged) jnp::fail(jnp::Errc::bad_input, "null argument");
    jnp::LaurentPoly p = jnp::parse_poly(p_expr);
    jnp::LaurentPoly q = jnp::parse_poly(q_expr);
    std::ostringstream os;
    bool bad = false;
    os << "bracket: " << jnp::serialize(jnp::bracket(p, q)) << "\n";
    auto violations = jnp::pair_polygon_audit(p, q);
    os << "violations (" << violations.size() << "):\n";
    if (violations.empty()) os << "  (none)\n";
    for (const auto& v : violations) {
      os << "  - " << v << "\n";
      bad = true;
    }
    const char* names[2] = {"P", "Q"};
    const jnp::LaurentPoly* polys[2] = {&p, &q};
    for (int k = 0; k < 2; ++k) {
      os << "slope-one edges of " << names[k] << ":";
      if (polys[k]->is_zero()) {
        os << " (zero polynomial)\n";
        continue;
      }
      auto edges = jnp::slope_one_audit(*polys[k]);
      if (edges.empty()) os << " (none)";
      os << "\n";
      for (const auto& e : edges) os << "  " << pt_str(e.a) << " -> " << pt_str(e.b) << "\n";
    }
    os << "tilde-J: " << jnp::serialize(jnp::tilde_j(p, q)) << "\n";
    os << "edge obstruction:\n";
    size_t tested = 0;
    if (!p.is_zero()) {
      for (const auto& d : jnp::dir_set(p)) {
        try {
          auto r = jnp::edge_obstruction_test(p, q, d);
          ++tested;
          if (r.obstructed) {
            os << "  dir " << dir_str(d) << ": OBSTRUCTED (resultant " << jnp::q_str(r.resultant)
               << ")\n";
            bad = true;
          } else {
            os << "  dir " << dir_str(d) << ": consistent (resultant 0)\n";
          }
        } catch (const jnp::Error& e) {
          if (e.code() != jnp::Errc::hypothesis_unmet) throw;
        }
      }
    }
    if (tested == 0) os << "  (no qualifying directions)\n";
    *out = dup_string(os.str());
    *flagged = bad ? 1 : 0;
  });
}

int jnp_cmd_enumerate(unsigned long bound, const char* pool, unsigned long imax, int csv,
                      char** out, char** audit_out) {
  return guarded([&] {
    if (!out || !audit_out) jnp::fail(jnp::Errc::bad_input, "null argument");
    jnp::EnumerateConfig cfg;
    if (pool) {
      cfg.search.pool.clear();
      for (const auto& part : split_csv(pool)) cfg.search.pool.push_back(parse_q(part));
      if (cfg.search.pool.empty()) jnp::fail(jnp::Errc::bad_params, "empty pool");
    }
    if (imax) cfg.search.i_max = imax;
    auto report = jnp::enumerate_corners(bound, cfg);
    *out = dup_string(csv ? jnp::report_to_csv(report) : jnp::report_to_json_text(report));
    std::string audit;
    for (const auto& v : jnp::audit_report(report)) {
      audit += v;
      audit += "\n";
    }
    *audit_out = dup_string(audit);
  });
}

int jnp_cmd_witness_verify(const char* chain_json, char** out, int* fully_witnessed) {
  return guarded([&] {
    if (!chain_json || !out || !fully_witnessed)
      jnp::fail(jnp::Errc::bad_input, "null argument");
    jnp::AdmissibleChain c = jnp::chain_from_json_text(chain_json);
    jnp::ChainCheck ck = jnp::validate_chain(c);
    std::ostringstream os;
    os << "points:";
    for (const auto& p : c.points) os << " " << pt_str(p);
    os << "\ndirs:";
    if (c.dirs.empty()) os << " (none)";
    for (const auto& d : c.dirs) os << " " << dir_str(d);
    os << "\nstatus: " << (ck.ok ? (ck.skeleton ? "skeleton" : "witnessed") : "invalid") << "\n";
    if (!ck.violations.empty()) {
      os << "violations:\n";
      for (const auto& v : ck.violations) os << "  - " << v << "\n";
    }
    *out = dup_string(os.str());
    *fully_witnessed = (ck.ok && !ck.skeleton) ? 1 : 0;
  });
}

int jnp_cmd_witness_search(const char* st, const char* dir, long steps, char** out, int* found) {
  return guarded([&] {
    if (!out || !found) jnp::fail(jnp::Errc::bad_input, "null argument");
    auto [a, b] = parse_q_pair(st, "start corner");
    jnp::Dir d = parse_dir(dir);
    std::ostringstream os;
    try {
      auto res = jnp::witness_search(jnp::Point{a, b}, d, jnp::Z(steps), jnp::SearchConfig{});
      if (res) {
        const auto& [R, G, i] = *res;
        os << "R: " << jnp::serialize(R) << "\n";
        os << "G: " << jnp::serialize(G) << "\n";
        os << "i: " << i << "\n";
        *found = 1;
      } else {
        os << "no witness found over the default pool\n";
        *found = 0;
      }
    } catch (const jnp::Error& e) {
      if (e.code() != jnp::Errc::edge_rejected) throw;
      os << "edge infeasible: " << e.what() << "\n";
      *found = 0;
    }
    *out = dup_string(os.str());
  });
}

int jnp_cmd_family_emit(const char* name, const char* params, char** out) {
  return guarded([&] {
    if (!name || !out) jnp::fail(jnp::Errc::bad_input, "null argument");
    std::map<std::string, jnp::Q> kv;
    if (params && *params) {
      for (const auto& part : split_csv(params)) {
        size_t eq = part.find('=');
        if (eq == std::string::npos)
          jnp::fail(jnp::Errc::bad_params, "param must look like key=value: '" + part + "'");
        std::string key = strip(part.substr(0, eq));
        if (key.empty()) jnp::fail(jnp::Errc::bad_params, "empty param name");
        kv[key] = parse_q(part.substr(eq + 1));
      }
    }
    auto [R, G, i] = jnp::family_witness(name, kv);
    std::ostringstream os;
    os << "family: " << name << "\n";
    os << "R: " << jnp::serialize(R) << "\n";
    os << "G: " << jnp::serialize(G) << "\n";
    os << "i: " << i << "\n";
    bool ok = jnp::bracket(jnp::to_poly(G), jnp::to_poly(R)) == jnp::to_poly(R).pow(i) &&
              jnp::central_residual(R, G, i).is_zero();
    os << "bracket audit: " << (ok ? "[G,R] = R^i holds" : "FAILED") << "\n";
    *out = dup_string(os.str());
  });
}

}  // extern "C"
