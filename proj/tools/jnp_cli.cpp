// jnp: Newton-polygon toolkit front end. All computation goes through the
// jnpoly C API; this file only handles flags, files and exit codes.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "jnpoly.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFlagged = 1;
constexpr int kExitUsage = 2;

int report_api_error(int code) {
  std::cerr << "error (" << jnp_status_name(code) << "): " << jnp_last_error() << "\n";
  return kExitUsage;
}

struct OwnedString {
  char* p = nullptr;
  ~OwnedString() { jnp_string_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

int run_poly_show(const std::string& expr, const std::string& dir) {
  OwnedString out;
  int rc = jnp_cmd_poly_show(expr.c_str(), dir.empty() ? nullptr : dir.c_str(), &out.p);
  if (rc != JNP_OK) return report_api_error(rc);
  std::cout << out.str();
  return kExitOk;
}

int run_pair_audit(const std::string& p, const std::string& q) {
  OwnedString out;
  int flagged = 0;
  int rc = jnp_cmd_pair_audit(p.c_str(), q.c_str(), &out.p, &flagged);
  if (rc != JNP_OK) return report_api_error(rc);
  std::cout << out.str();
  return flagged ? kExitFlagged : kExitOk;
}

int run_enumerate(unsigned long bound, const std::string& pool, unsigned long imax,
                  const std::string& format, const std::string& out_path) {
  OwnedString out, audit;
  int rc = jnp_cmd_enumerate(bound, pool.empty() ? nullptr : pool.c_str(), imax,
                             format == "csv" ? 1 : 0, &out.p, &audit.p);
  if (rc != JNP_OK) return report_api_error(rc);
  if (out_path.empty()) {
    std::cout << out.str();
    if (format == "json") std::cout << "\n";
  } else {
    std::ofstream f(out_path);
    if (!f) {
      std::cerr << "error: cannot open '" << out_path << "' for writing\n";
      return kExitUsage;
    }
    f << out.str();
    if (format == "json") f << "\n";
  }
  std::string violations = audit.str();
  if (!violations.empty()) {
    std::cerr << "audit violations:\n" << violations;
    return kExitFlagged;
  }
  return kExitOk;
}

int run_witness_verify(const std::string& path) {
  std::ifstream f(path);
  if (!f) {
    std::cerr << "error: cannot read '" << path << "'\n";
    return kExitUsage;
  }
  std::ostringstream buf;
  buf << f.rdbuf();
  OwnedString out;
  int fully = 0;
  int rc = jnp_cmd_witness_verify(buf.str().c_str(), &out.p, &fully);
  if (rc != JNP_OK) return report_api_error(rc);
  std::cout << out.str();
  return fully ? kExitOk : kExitFlagged;
}

int run_witness_search(const std::string& st, const std::string& dir, long steps) {
  OwnedString out;
  int found = 0;
  int rc = jnp_cmd_witness_search(st.c_str(), dir.c_str(), steps, &out.p, &found);
  if (rc != JNP_OK) return report_api_error(rc);
  std::cout << out.str();
  return found ? kExitOk : kExitFlagged;
}

int run_family_emit(const std::string& name, const std::string& params) {
  OwnedString out;
  int rc = jnp_cmd_family_emit(name.c_str(), params.c_str(), &out.p);
  if (rc != JNP_OK) return report_api_error(rc);
  std::cout << out.str();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Newton-polygon corner and witness toolkit"};
  app.require_subcommand(1);
  int rc = kExitOk;

  auto* poly = app.add_subcommand("poly", "single-polynomial reports");
  poly->require_subcommand(1);
  {
    auto* show = poly->add_subcommand("show", "support, hull, lower edges, directions");
    auto expr = std::make_shared<std::string>();
    auto dir = std::make_shared<std::string>();
    show->add_option("--expr", *expr, "polynomial expression")->required();
    show->add_option("--dir", *dir, "direction R,S for leading-form details");
    show->callback([=, &rc] { rc = run_poly_show(*expr, *dir); });
  }

  auto* pair = app.add_subcommand("pair", "two-polynomial audits");
  pair->require_subcommand(1);
  {
    auto* audit = pair->add_subcommand("audit", "Jacobian-pair necessary conditions");
    auto p = std::make_shared<std::string>();
    auto q = std::make_shared<std::string>();
    audit->add_option("--p", *p, "first polynomial")->required();
    audit->add_option("--q", *q, "second polynomial")->required();
    audit->callback([=, &rc] { rc = run_pair_audit(*p, *q); });
  }

  auto* corners = app.add_subcommand("corners", "candidate corner enumeration");
  corners->require_subcommand(1);
  {
    auto* en = corners->add_subcommand("enumerate", "classify corners below a bound");
    auto bound = std::make_shared<unsigned long>(0);
    auto pool = std::make_shared<std::string>();
    auto imax = std::make_shared<unsigned long>(0);
    auto format = std::make_shared<std::string>("json");
    auto out_path = std::make_shared<std::string>();
    en->add_option("--bound", *bound, "strict bound on the (1,-1)-degree")->required();
    en->add_option("--pool", *pool, "comma-separated root pool for the witness search");
    en->add_option("--imax", *imax, "largest companion exponent to try");
    en->add_option("--format", *format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    en->add_option("--out", *out_path, "write the report to a file");
    en->callback([=, &rc] { rc = run_enumerate(*bound, *pool, *imax, *format, *out_path); });
  }

  auto* witness = app.add_subcommand("witness", "edge witness tools");
  witness->require_subcommand(1);
  {
    auto* verify = witness->add_subcommand("verify", "validate a serialized chain");
    auto file = std::make_shared<std::string>();
    verify->add_option("--file", *file, "chain JSON file")->required();
    verify->callback([=, &rc] { rc = run_witness_verify(*file); });

    auto* search = witness->add_subcommand("search", "search one edge for a witness");
    auto st = std::make_shared<std::string>();
    auto dir = std::make_shared<std::string>();
    auto steps = std::make_shared<long>(0);
    search->add_option("--st", *st, "start corner A,B")->required();
    search->add_option("--dir", *dir, "direction R,S")->required();
    search->add_option("--steps", *steps, "number of primitive steps")->required();
    search->callback([=, &rc] { rc = run_witness_search(*st, *dir, *steps); });
  }

  auto* family = app.add_subcommand("family", "named witness families");
  family->require_subcommand(1);
  {
    auto* emit = family->add_subcommand("emit", "print a family witness");
    auto name = std::make_shared<std::string>();
    auto params = std::make_shared<std::string>();
    emit->add_option("--name", *name, "family name")->required();
    emit->add_option("--params", *params, "comma-separated key=value parameters");
    emit->callback([=, &rc] { rc = run_family_emit(*name, *params); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  return rc;
}
