#include "pperm/seeds.hpp"

#include <algorithm>
#include <stdexcept>

#include "pperm/qanalog.hpp"

namespace pperm {

SeedSpec shift_seeds(const SeedSpec& spec) {
  SeedSpec out;
  out.name = spec.name + "+shift";
  out.params = spec.params;
  out.s = [s = spec.s](int l) { return s(l + 1); };
  out.t = [t = spec.t](int l) { return t(l + 1); };
  return out;
}

ExtendedSeedSpec shift_seeds(const ExtendedSeedSpec& spec) {
  ExtendedSeedSpec out;
  out.name = spec.name + "+shift";
  out.params = spec.params;
  out.s = [s = spec.s](int i, int l) { return s(i + 1, l + 1); };
  out.t = [t = spec.t](int i, int l) { return t(i + 1, l + 1); };
  return out;
}

namespace {

MultiPoly param_or_var(const ParamMap& pm, const std::string& name) {
  auto it = pm.find(name);
  return it == pm.end() ? MultiPoly::var(name) : it->second;
}

// family binder: w_i by default, the bound value for every i otherwise
std::function<MultiPoly(int)> family_or(const ParamMap& pm, const std::string& name) {
  auto it = pm.find(name);
  if (it == pm.end())
    return [name](int i) { return MultiPoly::var(name, i); };
  return [v = it->second](int) { return v; };
}

// l(l-1)/2, always integral
MultiPoly half_pochhammer(int l) { return MultiPoly(l * (l - 1) / 2); }

SeedSpec make_catalan(const ParamMap&) {
  return {"catalan", {}, [](int) { return MultiPoly(0); }, [](int) { return MultiPoly(1); }};
}

SeedSpec make_partial_count(const ParamMap&) {
  return {"partial-count",
          {},
          [](int l) { return MultiPoly(2 * l + 1); },
          [](int l) { return MultiPoly(l * l); }};
}

SeedSpec make_triple(const ParamMap& pm) {
  Variable qv = Variable::scalar("q");
  // seeds are stated in the scalar variables; parameter bindings are
  // substituted afterwards so the q-bracket helpers stay simple
  auto subst = [pm](MultiPoly poly) {
    std::map<std::string, MultiPoly> bind;
    for (const auto& [k, v] : pm) bind.emplace(k, v);
    return substitute_scalars(poly, bind);
  };
  auto s = [subst, qv](int l) {
    if (l == 0) return subst(MultiPoly::var("w") * MultiPoly::var("p"));
    MultiPoly base = qw_integer(l) + MultiPoly::var("p") * q_integer(l + 1);
    return subst(base * MultiPoly(Monomial::of(qv, l)));
  };
  auto t = [subst, qv](int l) {
    MultiPoly base = MultiPoly::var("p") * qw_integer(l) * q_integer(l);
    return subst(base * MultiPoly(Monomial::of(qv, 2 * l - 1)));
  };
  return {"triple", pm, s, t};
}

SeedSpec make_inv(const ParamMap& pm) {
  auto subst = [pm](MultiPoly poly) {
    std::map<std::string, MultiPoly> bind;
    for (const auto& [k, v] : pm) bind.emplace(k, v);
    return substitute_scalars(poly, bind);
  };
  Variable qv = Variable::scalar("q");
  auto s = [subst, qv](int l) {
    return subst(2 * (q_integer(l) * MultiPoly(Monomial::of(qv, l))) +
                 MultiPoly(Monomial::of(qv, 2 * l)));
  };
  auto t = [subst, qv](int l) {
    return subst(q_integer(l) * q_integer(l) * MultiPoly(Monomial::of(qv, 2 * l - 1)));
  };
  return {"inv", pm, s, t};
}

SeedSpec make_rlmin(const ParamMap& pm) {
  MultiPoly w = param_or_var(pm, "w");
  auto s = [w](int l) { return l == 0 ? w : MultiPoly(2 * l) + w; };
  auto t = [w](int l) { return MultiPoly(l) * (MultiPoly(l - 1) + w); };
  return {"rlmin", pm, s, t};
}

SeedSpec make_setvalued_scalar(const ParamMap& pm) {
  MultiPoly a = param_or_var(pm, "a"), b = param_or_var(pm, "b"), w = param_or_var(pm, "w"),
            p = param_or_var(pm, "p"), u = param_or_var(pm, "u"), v = param_or_var(pm, "v");
  auto s = [a, w, u, p](int l) {
    if (l == 0) return a * w * u;
    return MultiPoly(l - 1) + a + w + MultiPoly(l) * p;
  };
  auto t = [b, w, p, v](int l) {
    if (l == 1) return b * w * p * v;
    return (MultiPoly(l - 1) + b) * (MultiPoly(l - 1) + w) * p;
  };
  return {"setvalued-scalar", pm, s, t};
}

SeedSpec make_cud_fix_cyc(const ParamMap& pm) {
  MultiPoly q = param_or_var(pm, "q"), t = param_or_var(pm, "t");
  // (1/2) l (l-1+2t) expanded as l(l-1)/2 + l t, exact over the integers
  auto sfn = [q](int l) { return MultiPoly(l) + q; };
  auto tfn = [t](int l) { return half_pochhammer(l) + MultiPoly(l) * t; };
  return {"cud-fix-cyc", pm, sfn, tfn};
}

SeedSpec make_cud_cycle(const ParamMap& pm) {
  ParamMap inner = pm;
  inner["t"] = param_or_var(pm, "q");
  SeedSpec spec = make_cud_fix_cyc(inner);
  spec.name = "cud-cycle";
  spec.params = pm;
  return spec;
}

SeedSpec rename(SeedSpec spec, const std::string& name) {
  spec.name = name;
  return spec;
}

ExtendedSeedSpec make_rlmip(const ParamMap& pm) {
  auto w = family_or(pm, "w");
  auto s = [w](int i, int l) { return l == 0 ? w(i) : MultiPoly(2 * l) + w(i); };
  auto t = [w](int i, int l) { return MultiPoly(l) * (MultiPoly(l - 1) + w(i)); };
  return {"rlmip", pm, s, t};
}

ExtendedSeedSpec make_setvalued(const ParamMap& pm) {
  auto a = family_or(pm, "a");
  auto b = family_or(pm, "b");
  auto w = family_or(pm, "w");
  auto p = family_or(pm, "p");
  auto u = family_or(pm, "u");
  auto v = family_or(pm, "v");
  auto s = [a, w, u, p](int i, int l) {
    if (l == 0) return a(i) * w(i) * u(i);
    return MultiPoly(l - 1) + a(i) + w(i) + MultiPoly(l) * p(i);
  };
  auto t = [b, w, p, v](int i, int l) {
    if (l == 1) return b(i) * w(i) * p(i) * v(i);
    return (MultiPoly(l - 1) + b(i)) * (MultiPoly(l - 1) + w(i)) * p(i);
  };
  return {"setvalued", pm, s, t};
}

ExtendedSeedSpec make_cyc_rlmip(const ParamMap& pm) {
  ExtendedSeedSpec spec = make_setvalued(pm);
  auto a = family_or(pm, "a");
  auto w = family_or(pm, "w");
  auto p = family_or(pm, "p");
  auto v = family_or(pm, "v");
  // b_i := a_i throughout
  spec.t = [a, w, p, v](int i, int l) {
    if (l == 1) return a(i) * w(i) * p(i) * v(i);
    return (MultiPoly(l - 1) + a(i)) * (MultiPoly(l - 1) + w(i)) * p(i);
  };
  spec.name = "cyc-rlmip";
  return spec;
}

ExtendedSeedSpec rename(ExtendedSeedSpec spec, const std::string& name) {
  spec.name = name;
  return spec;
}

}  // namespace

static const std::vector<std::string> kScalarNames = {
    "catalan",      "partial-count", "connected-count", "triple",
    "connected-triple", "inv",       "rlmin",           "setvalued-scalar",
    "cud-fix-cyc",  "cud-cycle",     "connected-cud"};

static const std::vector<std::string> kExtendedNames = {
    "rlmip", "setvalued", "cyc-rlmip", "connected-setvalued", "connected-cyc-rlmip"};

std::vector<std::string> builtin_seed_names() {
  std::vector<std::string> all = kScalarNames;
  all.insert(all.end(), kExtendedNames.begin(), kExtendedNames.end());
  return all;
}

bool is_builtin_seed(const std::string& name) {
  auto all = builtin_seed_names();
  return std::find(all.begin(), all.end(), name) != all.end();
}

bool is_builtin_extended(const std::string& name) {
  return std::find(kExtendedNames.begin(), kExtendedNames.end(), name) != kExtendedNames.end();
}

SeedSpec builtin_scalar_seeds(const std::string& name, const ParamMap& params) {
  if (name == "catalan") return make_catalan(params);
  if (name == "partial-count") return make_partial_count(params);
  if (name == "connected-count")
    return rename(shift_seeds(make_partial_count(params)), "connected-count");
  if (name == "triple") return make_triple(params);
  if (name == "connected-triple")
    return rename(shift_seeds(make_triple(params)), "connected-triple");
  if (name == "inv") return make_inv(params);
  if (name == "rlmin") return make_rlmin(params);
  if (name == "setvalued-scalar") return make_setvalued_scalar(params);
  if (name == "cud-fix-cyc") return make_cud_fix_cyc(params);
  if (name == "cud-cycle") return make_cud_cycle(params);
  if (name == "connected-cud")
    return rename(shift_seeds(make_cud_fix_cyc(params)), "connected-cud");
  throw std::invalid_argument("unknown seed family '" + name + "'");
}

ExtendedSeedSpec builtin_extended_seeds(const std::string& name, const ParamMap& params) {
  if (name == "rlmip") return make_rlmip(params);
  if (name == "setvalued") return make_setvalued(params);
  if (name == "cyc-rlmip") return make_cyc_rlmip(params);
  if (name == "connected-setvalued")
    return rename(shift_seeds(make_setvalued(params)), "connected-setvalued");
  if (name == "connected-cyc-rlmip")
    return rename(shift_seeds(make_cyc_rlmip(params)), "connected-cyc-rlmip");
  throw std::invalid_argument("unknown extended seed family '" + name + "'");
}

}  // namespace pperm
