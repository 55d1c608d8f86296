// partperm: exact partial-permutation statistics, Catalan matrices
// built from seed sequences, the bijections relating the statistics,
// truncated EGFs, and the identity verification suite.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "pperm/bijections.hpp"
#include "pperm/catalan.hpp"
#include "pperm/series.hpp"
#include "pperm/statistics.hpp"
#include "pperm/verify.hpp"

namespace {

using nlohmann::json;
using namespace pperm;

json poly_json(const MultiPoly& p) {
  json arr = json::array();
  const auto& terms = p.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it)
    arr.push_back({{"monomial", it->first.str()}, {"coeff", it->second.str()}});
  return arr;
}

json perm_json(const PartialPerm& p) {
  json image = json::array();
  for (int v : p.image()) {
    if (v == 0)
      image.push_back(nullptr);
    else
      image.push_back(v);
  }
  return {{"n", p.order()}, {"image", image}};
}

json set_json(const std::vector<int>& s) { return json(s); }

ParamMap parse_params(const std::vector<std::string>& kvs) {
  ParamMap pm;
  for (const auto& kv : kvs) {
    auto eq = kv.find('=');
    if (eq == std::string::npos)
      throw CLI::ValidationError("--param", "expected name=value, got '" + kv + "'");
    std::string name = kv.substr(0, eq);
    std::string val = kv.substr(eq + 1);
    bool numeric = false;
    try {
      std::size_t pos = 0;
      long num = std::stol(val, &pos);
      if (pos == val.size()) {
        pm[name] = MultiPoly(static_cast<int>(num));
        numeric = true;
      }
    } catch (const std::exception&) {
    }
    if (!numeric) pm[name] = MultiPoly::var(val);  // symbolic binding
  }
  return pm;
}

ClassFilter parse_filter(const std::string& name) {
  if (name.empty() || name == "none") return ClassFilter::All;
  if (name == "connected") return ClassFilter::Connected;
  if (name == "cud") return ClassFilter::CycleUpDown;
  if (name == "both") return ClassFilter::ConnectedCycleUpDown;
  throw CLI::ValidationError("--filter", "must be one of connected|cud|both");
}

int run_matrix(const std::string& seeds, const std::vector<std::string>& params, int nmax,
               const std::string& format) {
  ParamMap pm = parse_params(params);
  bool extended = is_builtin_extended(seeds);
  if (nmax < 0) nmax = extended ? 6 : 8;
  CatalanMatrix m = extended ? build_extended_matrix(builtin_extended_seeds(seeds, pm), nmax)
                             : build_catalan_matrix(builtin_scalar_seeds(seeds, pm), nmax);
  if (format == "json") {
    std::cout << m.json() << "\n";
  } else if (format == "csv") {
    std::cout << m.csv();
  } else {
    for (int n = 0; n <= m.order(); ++n) {
      for (int k = 0; k <= n; ++k) std::cout << (k ? " | " : "") << m.at(n, k).str();
      std::cout << "\n";
    }
  }
  return 0;
}

int run_stats(const std::string& perm) {
  PartialPerm p = PartialPerm::parse(perm);
  StatBundle b = stat_core(p);
  SetStatBundle s = stat_sets(p);
  json j = perm_json(p);
  j["k"] = p.gaps();
  j["stats"] = {{"fix", b.fix},
                {"cyc", b.cyc},
                {"cyc_ge2", b.cyc_ge2},
                {"inv", b.inv},
                {"exc", b.exc},
                {"wex", b.wex},
                {"rlmin", b.rlmin},
                {"rlmin_star", b.rlmin_star},
                {"des", b.des},
                {"sfix", b.sfix},
                {"scyc", b.scyc},
                {"scyc_ge2", b.scyc_ge2()}};
  j["sets"] = {{"Fix", set_json(s.Fix)},         {"Sfix", set_json(s.Sfix)},
               {"Cyc", set_json(s.Cyc)},         {"Cyc_ge2", set_json(s.Cyc_ge2)},
               {"Scyc", set_json(s.Scyc)},       {"Scyc_ge2", set_json(s.Scyc_ge2)},
               {"Excl", set_json(s.Excl)},       {"Rlmip", set_json(s.Rlmip)},
               {"connectivity", set_json(s.connectivity)}};
  j["cycle_form"] = to_cycle_form(p).str();
  j["connected"] = p.order() >= 1 ? json(is_connected(p)) : json(nullptr);
  j["cycle_up_down"] = is_cycle_up_down(p);
  std::cout << j.dump() << "\n";
  return 0;
}

int run_gf(int n, int k, const std::string& weights, const std::string& filter,
           const std::string& format) {
  MultiPoly g = generating_function(n, k, parse_weight_spec(weights), parse_filter(filter));
  if (format == "json")
    std::cout << poly_json(g).dump() << "\n";
  else
    std::cout << g.str() << "\n";
  return 0;
}

int run_bijection(const std::string& map, const std::string& perm) {
  PartialPerm p = PartialPerm::parse(perm);
  PartialPerm out;
  if (map == "fundamental") {
    if (p.gaps() != 0)
      throw CLI::ValidationError("--map", "fundamental expects a gap-free permutation");
    out = from_cycle_form(fundamental(p.image()), p.order());
  } else if (map == "gen-fundamental") {
    out = gen_fundamental(p);
  } else if (map == "gen-fundamental-inv") {
    out = gen_fundamental_inverse(p);
  } else if (map == "des-exc") {
    out = des_exc_map(p);
  } else if (map == "rotate180") {
    out = rotate180(p);
  } else if (map == "reflect-anti") {
    out = reflect_antidiagonal(p);
  } else {
    throw CLI::ValidationError("--map", "unknown map '" + map + "'");
  }
  std::cout << out.str() << "\n";
  return 0;
}

int run_series(int lambda, int order, const std::string& qv, const std::string& tv,
               const std::string& format) {
  auto parse_rat = [](const std::string& s, const char* def) -> RatPoly {
    std::string v = s.empty() ? def : s;
    try {
      std::size_t pos = 0;
      long num = std::stol(v, &pos);
      if (pos == v.size()) return RatPoly(Rat(num));
    } catch (const std::exception&) {
    }
    return RatPoly::var(v);
  };
  PowerSeries s = lambda_k(lambda, order, parse_rat(qv, "q"), parse_rat(tv, "t"));
  if (format == "json") {
    json arr = json::array();
    for (int m = 0; m <= s.order(); ++m) arr.push_back(s.coeff(m).str());
    std::cout << arr.dump() << "\n";
  } else {
    std::cout << s.str();
  }
  return 0;
}

int run_verify(const std::string& id, int nmax, bool as_json) {
  std::vector<verify::Report> reports;
  if (id.empty()) {
    auto budgets = verify::default_budgets();
    if (nmax >= 0)
      for (auto& [cid, b] : budgets) b = nmax;
    reports = verify::run_all(budgets);
  } else {
    reports.push_back(verify::run(id, nmax));
  }
  bool all = true;
  json arr = json::array();
  for (const auto& r : reports) {
    all = all && r.pass;
    if (as_json) {
      arr.push_back({{"id", r.id},
                     {"description", r.description},
                     {"n_max", r.n_max},
                     {"pass", r.pass},
                     {"detail", r.detail},
                     {"seconds", r.seconds}});
    } else {
      std::printf("%-7s %-4s  n_max=%-3d  %6.2fs  %s%s\n", r.id.c_str(),
                  r.pass ? "pass" : "FAIL", r.n_max, r.seconds, r.detail.c_str(),
                  r.detail.empty() ? r.description.c_str() : "");
    }
  }
  if (as_json) std::cout << arr.dump() << "\n";
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"partial permutation statistics, Catalan matrices and verification"};
  app.require_subcommand(1);

  auto* matrix = app.add_subcommand("matrix", "build a Catalan matrix from a seed family");
  std::string seeds, format = "text";
  std::vector<std::string> params;
  int nmax = -1;
  matrix->add_option("--seeds", seeds, "seed family name")->required();
  matrix->add_option("--param", params, "parameter binding name=value (repeatable)");
  matrix->add_option("--nmax", nmax, "matrix order (default 8 scalar, 6 extended)");
  matrix->add_option("--format", format, "text|json|csv");

  auto* stats = app.add_subcommand("stats", "statistics of one partial permutation");
  std::string perm;
  stats->add_option("--perm", perm, "one-line notation, X for gaps")->required();

  auto* gf = app.add_subcommand("gf", "brute-force generating function");
  int gf_n = 0, gf_k = 0;
  std::string gf_weights, gf_filter, gf_format = "text";
  gf->add_option("--n", gf_n, "order")->required();
  gf->add_option("--k", gf_k, "number of gaps")->required();
  gf->add_option("--weights", gf_weights, "e.g. rlmin=w,wex=p,inv=q or Rlmip=w")->required();
  gf->add_option("--filter", gf_filter, "connected|cud|both");
  gf->add_option("--format", gf_format, "text|json");

  auto* bij = app.add_subcommand("bijection", "apply one of the bijections");
  std::string bij_map, bij_perm;
  bij->add_option("--map", bij_map,
                  "fundamental|gen-fundamental|gen-fundamental-inv|des-exc|rotate180|reflect-anti")
      ->required();
  bij->add_option("--perm", bij_perm, "one-line notation")->required();

  auto* series = app.add_subcommand("series", "closed-form column EGF coefficients");
  int lambda = 0, order = 12;
  std::string series_q, series_t, series_format = "text";
  series->add_option("--lambda", lambda, "column index k")->required();
  series->add_option("--order", order, "truncation order (default 12)");
  series->add_option("--q", series_q, "value or symbol for q (default q)");
  series->add_option("--t", series_t, "value or symbol for t (default t)");
  series->add_option("--format", series_format, "text|json");

  auto* verify_cmd = app.add_subcommand("verify", "run the identity verification suite");
  std::string verify_id;
  int verify_nmax = -1;
  bool verify_json = false;
  verify_cmd->add_option("--id", verify_id, "check id (default: all)");
  verify_cmd->add_option("--nmax", verify_nmax, "budget override");
  verify_cmd->add_flag("--json", verify_json, "JSON report array");

  try {
    app.parse(argc, argv);
    if (*matrix) return run_matrix(seeds, params, nmax, format);
    if (*stats) return run_stats(perm);
    if (*gf) return run_gf(gf_n, gf_k, gf_weights, gf_filter, gf_format);
    if (*bij) return run_bijection(bij_map, bij_perm);
    if (*series) return run_series(lambda, order, series_q, series_t, series_format);
    if (*verify_cmd) return run_verify(verify_id, verify_nmax, verify_json);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError&) {
    std::cerr << app.help() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
