#include "pperm/verify.hpp"

#include <chrono>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "pperm/bijections.hpp"
#include "pperm/catalan.hpp"
#include "pperm/enumerate.hpp"
#include "pperm/qanalog.hpp"
#include "pperm/series.hpp"
#include "pperm/statistics.hpp"

namespace pperm::verify {

Int euler_number(int n) {
  // boustrophedon: T(n,k) = T(n,k-1) + T(n-1,n-k), E_n = T(n,n)
  std::vector<Int> row{1};
  for (int m = 1; m <= n; ++m) {
    std::vector<Int> next(m + 1);
    next[0] = 0;
    for (int k = 1; k <= m; ++k) next[k] = next[k - 1] + row[m - k];
    row = std::move(next);
  }
  return row.back();
}

namespace {

using WT = WeightTerm;

Variable var(const std::string& f) { return Variable::scalar(f); }

std::string fail_at(int n, int k, const MultiPoly& expected, const MultiPoly& actual) {
  std::ostringstream out;
  out << "(n=" << n << ", k=" << k << "): expected " << expected.str() << ", got "
      << actual.str();
  return out.str();
}

// Compares matrix entries against the brute-force aggregator; stops at
// the smallest counterexample.
bool matrix_vs_bruteforce(const CatalanMatrix& m, const std::vector<WT>& weights,
                          ClassFilter filter, int order_shift, std::string& detail) {
  for (int n = 0; n <= m.order(); ++n) {
    for (int k = 0; k <= n; ++k) {
      MultiPoly brute = generating_function(n + order_shift, k + order_shift, weights, filter);
      if (!(m.at(n, k) == brute)) {
        detail = fail_at(n, k, brute, m.at(n, k));
        return false;
      }
    }
  }
  return true;
}

bool check_t31(int n_max, std::string& detail) {
  auto m = build_catalan_matrix(builtin_scalar_seeds("triple"), n_max);
  std::vector<WT> w{WT::of(ScalarStat::rlmin, var("w")), WT::of(ScalarStat::wex, var("p")),
                    WT::of(ScalarStat::inv, var("q"))};
  return matrix_vs_bruteforce(m, w, ClassFilter::All, 0, detail);
}

bool check_t32(int n_max, std::string& detail) {
  for (int n = 0; n <= n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      MultiPoly brute = generating_function(
          n, k, {WT::of(ScalarStat::rlmin, var("w")), WT::of(ScalarStat::inv, var("q"))});
      MultiPoly closed = q_binomial(n, k);
      for (int m = k + 1; m <= n; ++m) closed *= qw_integer(m);
      if (!(closed == brute)) {
        detail = fail_at(n, k, closed, brute);
        return false;
      }
    }
  }
  return true;
}

bool check_c33(int n_max, std::string& detail) {
  for (int n = 0; n <= n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      MultiPoly brute = generating_function(n, k, {WT::of(ScalarStat::inv, var("q"))});
      MultiPoly closed = q_binomial(n, k) * q_binomial(n, k) * q_factorial(n - k);
      if (!(closed == brute)) {
        detail = fail_at(n, k, closed, brute);
        return false;
      }
    }
  }
  return true;
}

bool check_c34(int n_max, std::string& detail) {
  for (int n = 0; n <= n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      MultiPoly brute = generating_function(n, k, {WT::of(ScalarStat::rlmin, var("w"))});
      MultiPoly closed(binomial(n, k));
      for (int j = k; j <= n - 1; ++j) closed *= MultiPoly::var("w") + MultiPoly(j);
      if (!(closed == brute)) {
        detail = fail_at(n, k, closed, brute);
        return false;
      }
    }
  }
  return true;
}

bool check_t41(int n_max, std::string& detail) {
  bool zero_case = true;
  for (int n = 0; n <= n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      MultiPoly f = generating_function(n, k, {WT::of(ScalarStat::exc, var("q"))});
      MultiPoly g = generating_function(n, k, {WT::of(ScalarStat::wex, var("q"))});
      Variable q = var("q");
      for (int i = 1; i <= n - k; ++i) {
        Int lhs = f.coefficient(Monomial::of(q, i));
        Int rhs = g.coefficient(Monomial::of(q, n - k - i));
        if (lhs != rhs) {
          detail = "(n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                   ", i=" + std::to_string(i) + "): " + lhs.str() + " != " + rhs.str();
          return false;
        }
      }
      if (f.coefficient(Monomial::unit()) != g.coefficient(Monomial::of(q, n - k)))
        zero_case = false;
    }
  }
  detail = zero_case ? "i=0 reversal also held everywhere" : "i=0 reversal failed somewhere";
  return true;
}

bool check_t42(int n_max, std::string& detail) {
  // the two worked examples
  auto ex1 = des_exc_map(PartialPerm::parse("4 X 3 5 X X 2"));
  if (ex1.str() != "5 4 X X 2 X 3") {
    detail = "example 1 gave " + ex1.str();
    return false;
  }
  auto ex2 = des_exc_map(PartialPerm::parse("1 3 7 6 X 4 2"));
  if (ex2.str() != "X 1 7 3 2 6 4") {
    detail = "example 2 gave " + ex2.str();
    return false;
  }
  for (int n = 0; n <= n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      std::set<PartialPerm> image;
      bool ok = true;
      Int total = 0;
      for_each_partial_perm(n, k, [&](const PartialPerm& p) {
        ++total;
        PartialPerm q = des_exc_map(p);
        if (q.order() != n || q.gaps() != k) ok = false;
        if (stat_core(q).des != stat_core(p).exc) ok = false;
        image.insert(q);
      });
      if (!ok || Int(image.size()) != total) {
        detail = "failure in class (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")";
        return false;
      }
    }
  }
  return true;
}

bool check_t51(int n_max, std::string& detail) {
  auto m = build_extended_matrix(builtin_extended_seeds("rlmip"), n_max);
  return matrix_vs_bruteforce(m, {WT::of(SetStat::Rlmip, "w")}, ClassFilter::All, 0, detail);
}

// v is bound to Scyc_ge2 = Scyc - Sfix: the seeds put u_i, v_i only in
// s^(i)_0 and t^(i)_1, which tag a strong fixed point, respectively a
// strong cycle of length >= 2.
bool check_t52(int n_max, std::string& detail) {
  auto m = build_extended_matrix(builtin_extended_seeds("setvalued"), n_max);
  std::vector<WT> w{WT::of(SetStat::Fix, "a"),  WT::of(SetStat::Cyc_ge2, "b"),
                    WT::of(SetStat::Rlmip, "w"), WT::of(SetStat::Excl, "p"),
                    WT::of(SetStat::Sfix, "u"),  WT::of(SetStat::Scyc_ge2, "v")};
  return matrix_vs_bruteforce(m, w, ClassFilter::All, 0, detail);
}

bool check_c53(int n_max, std::string& detail) {
  auto m = build_extended_matrix(builtin_extended_seeds("cyc-rlmip"), n_max);
  std::vector<WT> w{WT::of(SetStat::Cyc, "a"), WT::of(SetStat::Rlmip, "w"),
                    WT::of(SetStat::Excl, "p"), WT::of(SetStat::Sfix, "u"),
                    WT::of(SetStat::Scyc_ge2, "v")};
  return matrix_vs_bruteforce(m, w, ClassFilter::All, 0, detail);
}

bool symmetric_under_aw_swap(int n, int k, ClassFilter filter, std::string& detail) {
  std::vector<WT> w{WT::of(SetStat::Cyc, "a"), WT::of(SetStat::Rlmip, "w"),
                    WT::of(SetStat::Excl, "p"), WT::of(SetStat::Sfix, "u"),
                    WT::of(SetStat::Scyc, "v")};
  if (filter == ClassFilter::Connected)
    w = {WT::of(SetStat::Cyc, "a"), WT::of(SetStat::Rlmip, "w"), WT::of(SetStat::Excl, "p")};
  MultiPoly g = generating_function(n, k, w, filter);
  MultiPoly swapped = g.rename_families({{"a", "w"}, {"w", "a"}});
  if (!(g == swapped)) {
    detail = fail_at(n, k, g, swapped);
    return false;
  }
  return true;
}

bool check_t54(int n_max, std::string& detail) {
  for (int n = 0; n <= n_max; ++n)
    for (int k = 0; k <= n; ++k)
      if (!symmetric_under_aw_swap(n, k, ClassFilter::All, detail)) return false;
  return true;
}

bool check_c55(int n_max, std::string& detail) {
  auto m = build_catalan_matrix(builtin_scalar_seeds("setvalued-scalar"), n_max);
  std::vector<WT> w{WT::of(ScalarStat::fix, var("a")),  WT::of(ScalarStat::cyc_ge2, var("b")),
                    WT::of(ScalarStat::rlmin, var("w")), WT::of(ScalarStat::exc, var("p")),
                    WT::of(ScalarStat::sfix, var("u")),  WT::of(ScalarStat::scyc_ge2, var("v"))};
  return matrix_vs_bruteforce(m, w, ClassFilter::All, 0, detail);
}

bool check_s5cyc(int n_max, std::string& detail) {
  for (int n = 0; n <= n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      MultiPoly by_cyc = generating_function(n, k, {WT::of(ScalarStat::cyc, var("q"))});
      MultiPoly by_rlmin = generating_function(n, k, {WT::of(ScalarStat::rlmin, var("q"))});
      MultiPoly by_star = generating_function(n, k, {WT::of(ScalarStat::rlmin_star, var("q"))});
      if (!(by_cyc == by_rlmin) || !(by_cyc == by_star)) {
        detail = "(n=" + std::to_string(n) + ", k=" + std::to_string(k) + "): cyc " +
                 by_cyc.str() + ", rlmin " + by_rlmin.str() + ", rlmin* " + by_star.str();
        return false;
      }
    }
  }
  return true;
}

bool check_p61(int n_max, std::string& detail) {
  auto m = build_catalan_matrix(builtin_scalar_seeds("connected-count"), n_max);
  for (int n = 0; n <= n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      Int count = class_count(n + 1, k + 1, ClassFilter::Connected);
      if (!(m.at(n, k) == MultiPoly(count))) {
        detail = fail_at(n, k, MultiPoly(count), m.at(n, k));
        return false;
      }
    }
    Int conn = class_count(n + 2, 0, ClassFilter::Connected);
    if (!(m.at(n, 0) == MultiPoly(conn))) {
      detail = "column 0, n=" + std::to_string(n) + ": |C_{n+2}| = " + conn.str() +
               " but entry is " + m.at(n, 0).str();
      return false;
    }
  }
  return true;
}

// boundary relation C_{n,0} = t_1 C_{n-1,1}, valid from n = 2 on
bool check_boundary(int n_from, int n_to, const std::vector<WT>& weights,
                    const std::function<MultiPoly(int)>& factor, ClassFilter filter,
                    std::string& detail) {
  for (int n = std::max(2, n_from); n <= n_to; ++n) {
    MultiPoly lhs = generating_function(n, 0, weights, filter);
    MultiPoly rhs = factor(n) * generating_function(n - 1, 1, weights, filter);
    if (!(lhs == rhs)) {
      detail = "boundary at n=" + std::to_string(n) + ": " + lhs.str() + " != " + rhs.str();
      return false;
    }
  }
  return true;
}

bool check_t63(int n_max, std::string& detail) {
  auto spec = builtin_scalar_seeds("rlmin");
  auto m = build_catalan_matrix(shift_seeds(spec), n_max - 1);
  std::vector<WT> w{WT::of(ScalarStat::rlmin, var("w"))};
  if (!matrix_vs_bruteforce(m, w, ClassFilter::Connected, 1, detail)) return false;
  return check_boundary(2, n_max, w, [&](int) { return spec.t(1); }, ClassFilter::Connected,
                        detail);
}

bool check_t62(int n_max, std::string& detail) {
  auto spec = builtin_extended_seeds("rlmip");
  auto m = build_extended_matrix(shift_seeds(spec), n_max - 1);
  std::vector<WT> w{WT::of(SetStat::Rlmip, "w")};
  if (!matrix_vs_bruteforce(m, w, ClassFilter::Connected, 1, detail)) return false;
  return check_boundary(2, n_max, w, [&](int n) { return spec.t(n, 1); },
                        ClassFilter::Connected, detail);
}

bool check_c64(int n_max, std::string& detail) {
  auto spec = builtin_scalar_seeds("triple");
  auto m = build_catalan_matrix(builtin_scalar_seeds("connected-triple"), n_max - 1);
  std::vector<WT> w{WT::of(ScalarStat::rlmin, var("w")), WT::of(ScalarStat::wex, var("p")),
                    WT::of(ScalarStat::inv, var("q"))};
  if (!matrix_vs_bruteforce(m, w, ClassFilter::Connected, 1, detail)) return false;
  return check_boundary(2, n_max, w, [&](int) { return spec.t(1); }, ClassFilter::Connected,
                        detail);
}

bool check_c65(int n_max, std::string& detail) {
  auto m = build_extended_matrix(builtin_extended_seeds("connected-setvalued"), n_max - 1);
  std::vector<WT> w{WT::of(SetStat::Fix, "a"), WT::of(SetStat::Cyc_ge2, "b"),
                    WT::of(SetStat::Rlmip, "w"), WT::of(SetStat::Excl, "p")};
  return matrix_vs_bruteforce(m, w, ClassFilter::Connected, 1, detail);
}

bool check_c66(int n_max, std::string& detail) {
  auto m = build_extended_matrix(builtin_extended_seeds("connected-cyc-rlmip"), n_max - 1);
  std::vector<WT> w{WT::of(SetStat::Cyc, "a"), WT::of(SetStat::Rlmip, "w"),
                    WT::of(SetStat::Excl, "p")};
  if (!matrix_vs_bruteforce(m, w, ClassFilter::Connected, 1, detail)) return false;
  auto factor = [](int n) {
    return MultiPoly::var("a", n) * MultiPoly::var("w", n) * MultiPoly::var("p", n);
  };
  return check_boundary(2, n_max, w, factor, ClassFilter::Connected, detail);
}

bool check_c67(int n_max, std::string& detail) {
  for (int n = 1; n <= n_max; ++n)
    for (int k = 0; k <= n; ++k)
      if (!symmetric_under_aw_swap(n, k, ClassFilter::Connected, detail)) return false;
  return true;
}

bool check_t72(int n_max, std::string& detail) {
  auto m = build_catalan_matrix(builtin_scalar_seeds("cud-fix-cyc"), n_max);
  std::vector<WT> w{WT::of(ScalarStat::fix, var("q")), WT::of(ScalarStat::cyc_ge2, var("t"))};
  return matrix_vs_bruteforce(m, w, ClassFilter::CycleUpDown, 0, detail);
}

bool check_c73(int n_max, std::string& detail) {
  auto m = build_catalan_matrix(builtin_scalar_seeds("cud-cycle"), n_max);
  std::vector<WT> w{WT::of(ScalarStat::cyc, var("q"))};
  if (!matrix_vs_bruteforce(m, w, ClassFilter::CycleUpDown, 0, detail)) return false;

  // |U_{n,0}| is the Euler number E_{n+1}
  const std::vector<Int> euler{1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936};
  for (int n = 0; n <= n_max + 1; ++n) {
    Int expect = euler_number(n + 1);
    if (n + 1 < static_cast<int>(euler.size()) && expect != euler[n + 1]) {
      detail = "boustrophedon disagrees with the published sequence at " + std::to_string(n + 1);
      return false;
    }
    Int got = class_count(n, 0, ClassFilter::CycleUpDown);
    if (got != expect) {
      detail = "|U_{" + std::to_string(n) + ",0}| = " + got.str() + ", expected E_" +
               std::to_string(n + 1) + " = " + expect.str();
      return false;
    }
  }
  return true;
}

bool check_t74(int order, std::string& detail) {
  auto m = build_catalan_matrix(builtin_scalar_seeds("cud-fix-cyc"), order);
  RatPoly q = RatPoly::var("q"), t = RatPoly::var("t");
  for (int k = 0; k <= 4; ++k) {
    PowerSeries closed = lambda_k(k, order, q, t);
    PowerSeries column = column_egf(m, k, order);
    if (!(closed == column)) {
      detail = "column k=" + std::to_string(k) + " differs from the closed form";
      return false;
    }
  }
  return true;
}

bool check_c76(int order, std::string& detail) {
  RatPoly q = RatPoly::var("q"), t = RatPoly::var("t");
  auto rep = sheffer_check(q, t, RatPoly(1), RatPoly(Rat(1) / 2), order);
  if (!rep.pass()) {
    detail = std::string("sheffer identities failed:") + (rep.b_at_zero ? "" : " init") +
             (rep.f_ode ? "" : " F-ode") + (rep.b_ode ? "" : " B-ode") +
             (rep.columns_match ? "" : " columns");
    return false;
  }
  // F = cos z/(1-sin z) - 1 satisfies F' = 1 + F + F^2/2, and B F = Lambda_1
  PowerSeries one(RatPoly(1), order);
  PowerSeries f = PowerSeries::cos_z(order) / (one - PowerSeries::sin_z(order)) - one;
  bool f_ode =
      f.derivative() == (one + f + (f * f).scaled(RatPoly(Rat(1) / 2))).truncated_to(order - 1);
  bool lambda_tie = lambda_k(1, order, q, t) == lambda_k(0, order, q, t) * f;
  if (!f_ode || !lambda_tie) {
    detail = std::string(!f_ode ? "closed-form F fails its ODE" : "B*F != Lambda_1");
    return false;
  }
  return true;
}

struct Weight {
  int fix, cyc_ge2;
  bool operator==(const Weight&) const = default;
};

Weight weight_of(const PartialPerm& p) {
  StatBundle b = stat_core(p);
  return {b.fix, b.cyc_ge2};
}

std::vector<PartialPerm> cud_class(int n, int k) {
  std::vector<PartialPerm> out;
  if (k < 0 || k > n) return out;
  for_each_partial_perm(n, k, [&](const PartialPerm& p) {
    if (is_cycle_up_down(p)) out.push_back(p);
  });
  return out;
}

std::vector<Cycle> partial_cycles(const PartialPerm& p) {
  std::vector<Cycle> out;
  for (const auto& c : to_cycle_form(p).cycles)
    if (c.partial) out.push_back(c);
  return out;
}

bool check_l77(int n_max, std::string& detail) {
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      std::set<PartialPerm> seen;
      auto fail = [&](const std::string& msg) {
        detail = "(n=" + std::to_string(n) + ", k=" + std::to_string(k) + "): " + msg;
        return false;
      };
      auto emit = [&](const PartialPerm& img, int expect_case, Weight expect_w) -> bool {
        if (!is_cycle_up_down(img) || img.gaps() != k) return false;
        if (cud_case(img) != expect_case) return false;
        if (!(weight_of(img) == expect_w)) return false;
        return seen.insert(img).second;
      };

      if (k >= 1)
        for (const auto& rho : cud_class(n - 1, k - 1)) {
          Weight w = weight_of(rho);
          if (!emit(append_gap(rho), 1, w)) return fail("case 1 transport");
        }
      for (const auto& rho : cud_class(n - 1, k)) {
        Weight w = weight_of(rho);
        if (!emit(append_fixed(rho), 2, Weight{w.fix + 1, w.cyc_ge2}))
          return fail("case 2 transport");
        for (const auto& c : partial_cycles(rho)) {
          PartialPerm img = cud_insert_partial(rho, c);
          if (!emit(img, 3, w)) return fail("case 3 transport");
          auto split = cud_insert_partial_inverse(img);
          if (!(split.rho == rho) || !(split.c == c)) return fail("case 3 inverse");
        }
      }
      for (const auto& rho : cud_class(n - 1, k + 1)) {
        Weight w = weight_of(rho);
        auto parts = partial_cycles(rho);
        for (const auto& c : parts) {
          PartialPerm img = cud_insert_full(rho, c);
          if (!emit(img, 4, Weight{w.fix, w.cyc_ge2 + 1})) return fail("case 4 transport");
          auto split = cud_insert_full_inverse(img);
          if (!(split.rho == rho) || !(split.c == c)) return fail("case 4 inverse");
        }
        for (const auto& c1 : parts) {
          for (const auto& c2 : parts) {
            if (c1.smallest() <= c2.smallest()) continue;
            PartialPerm img = cud_merge(rho, c1, c2);
            if (!emit(img, 5, w)) return fail("case 5 transport");
            auto split = cud_merge_inverse(img);
            if (!(split.rho == rho) || !(split.c1 == c1) || !(split.c2 == c2))
              return fail("case 5 inverse");
          }
        }
      }
      if (Int(seen.size()) != class_count(n, k, ClassFilter::CycleUpDown))
        return fail("five cases are not jointly surjective");
    }
  }
  return true;
}

bool check_p78(int n_max, std::string& detail) {
  for (int m = 1; m <= n_max - 1; ++m) {
    for (int k = 0; k <= m; ++k) {
      bool ok = true;
      for_each_partial_perm(m, k, [&](const PartialPerm& p) {
        if (!ok) return;
        if (k == 0) {
          if (is_connected(append_gap(p)) || is_connected(append_fixed(p))) ok = false;
          return;
        }
        bool conn = is_connected(p);
        if (is_connected(append_gap(p)) != conn) ok = false;
        if (is_connected(append_fixed(p)) != conn) ok = false;
        auto parts = partial_cycles(p);
        for (const auto& c : parts) {
          if (is_connected(cud_insert_partial(p, c)) != conn) ok = false;
          if (is_connected(cud_insert_full(p, c)) != conn) ok = false;
        }
        for (const auto& c1 : parts)
          for (const auto& c2 : parts)
            if (c1.smallest() > c2.smallest() && is_connected(cud_merge(p, c1, c2)) != conn)
              ok = false;
      });
      if (!ok) {
        detail = "connectivity transport failed in P_{" + std::to_string(m) + "," +
                 std::to_string(k) + "}";
        return false;
      }
    }
  }
  return true;
}

// The seeds are the shift of the cycle-up-down seeds, so the matrix
// counts the connected classes one order up, as with every shifted
// family.
bool check_t79(int n_max, std::string& detail) {
  auto m = build_catalan_matrix(builtin_scalar_seeds("connected-cud"), n_max);
  std::vector<WT> w{WT::of(ScalarStat::fix, var("q")), WT::of(ScalarStat::cyc_ge2, var("t"))};
  return matrix_vs_bruteforce(m, w, ClassFilter::ConnectedCycleUpDown, 1, detail);
}

struct CheckInfo {
  std::string id;
  std::string description;
  int default_n;
  std::function<bool(int, std::string&)> fn;
};

const std::vector<CheckInfo>& registry() {
  static const std::vector<CheckInfo> checks = {
      {"T3.1", "triple-statistic seed matrix vs brute force (rlmin, wex, inv)", 7, check_t31},
      {"T3.2", "closed form for (rlmin, inv)", 7, check_t32},
      {"C3.3", "closed form for inv: q-binomial^2 times q-factorial", 7, check_c33},
      {"C3.4", "closed form for rlmin: binomial times rising product", 7, check_c34},
      {"T4.1", "coefficient reversal between exc and wex polynomials", 7, check_t41},
      {"T4.2", "des_exc_map is bijective and transports exc to des", 5, check_t42},
      {"T5.1", "extended matrix vs brute force (Rlmip)", 5, check_t51},
      {"T5.2", "extended matrix vs brute force (six set statistics)", 5, check_t52},
      {"C5.3", "extended matrix vs brute force (Cyc, Rlmip, Excl, Sfix, Scyc>=2)", 5, check_c53},
      {"T5.4", "joint distribution symmetric under the a/w family swap", 5, check_t54},
      {"C5.5", "scalar matrix vs brute force (six integer statistics)", 7, check_c55},
      {"S5-CYC", "cyc ~ rlmin ~ rlmin* equidistribution", 6, check_s5cyc},
      {"P6.1", "connected counts via the shifted count seeds", 7, check_p61},
      {"T6.2", "extended seed shift counts connected classes (Rlmip)", 5, check_t62},
      {"T6.3", "scalar seed shift counts connected classes (rlmin)", 7, check_t63},
      {"C6.4", "connected triple statistic via shifted seeds", 7, check_c64},
      {"C6.5", "connected set statistics via shifted extended seeds", 6, check_c65},
      {"C6.6", "connected (Cyc, Rlmip, Excl) via shifted extended seeds", 6, check_c66},
      {"C6.7", "connected a/w swap symmetry", 5, check_c67},
      {"T7.2", "cycle-up-down matrix vs brute force (fix, cyc>=2)", 7, check_t72},
      {"C7.3", "cycle-up-down cycles and Euler numbers", 7, check_c73},
      {"T7.4", "closed-form column EGFs of the cycle-up-down matrix", 10, check_t74},
      {"C7.6", "Sheffer ODEs for seeds (q + k, k(t + (k-1)/2))", 12, check_c76},
      {"L7.7", "five-case weight transport and joint bijectivity", 6, check_l77},
      {"P7.8", "five-case connectivity transport", 6, check_p78},
      {"T7.9", "connected cycle-up-down via shifted seeds", 7, check_t79},
  };
  return checks;
}

const CheckInfo& find_check(const std::string& id) {
  for (const auto& c : registry())
    if (c.id == id) return c;
  throw std::invalid_argument("unknown check id '" + id + "'");
}

}  // namespace

std::vector<std::string> check_ids() {
  std::vector<std::string> ids;
  for (const auto& c : registry()) ids.push_back(c.id);
  return ids;
}

bool is_check(const std::string& id) {
  for (const auto& c : registry())
    if (c.id == id) return true;
  return false;
}

int default_budget(const std::string& id) { return find_check(id).default_n; }

std::map<std::string, int> default_budgets() {
  std::map<std::string, int> out;
  for (const auto& c : registry()) out[c.id] = c.default_n;
  return out;
}

Report run(const std::string& id, int n_max) {
  const CheckInfo& info = find_check(id);
  Report rep;
  rep.id = info.id;
  rep.description = info.description;
  rep.n_max = n_max < 0 ? info.default_n : n_max;
  auto start = std::chrono::steady_clock::now();
  try {
    rep.pass = info.fn(rep.n_max, rep.detail);
  } catch (const std::exception& e) {
    rep.pass = false;
    rep.detail = std::string("exception: ") + e.what();
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::vector<Report> run_all(const std::map<std::string, int>& budgets) {
  std::vector<Report> out;
  for (const auto& c : registry()) {
    auto it = budgets.find(c.id);
    if (it != budgets.end()) out.push_back(run(c.id, it->second));
  }
  return out;
}

}  // namespace pperm::verify
