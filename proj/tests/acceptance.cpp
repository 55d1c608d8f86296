// Acceptance suite: runs every gate criterion at its stated budget and
// prints one pass/fail line per criterion. Exit code 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "pperm/bijections.hpp"
#include "pperm/catalan.hpp"
#include "pperm/enumerate.hpp"
#include "pperm/qanalog.hpp"
#include "pperm/statistics.hpp"
#include "pperm/verify.hpp"

using namespace pperm;

namespace {

MultiPoly V(const std::string& f) { return MultiPoly::var(f); }
MultiPoly P(int e) { return V("p").pow(e); }
MultiPoly Q(int e) { return V("q").pow(e); }
MultiPoly W(int e) { return V("w").pow(e); }

// polynomial in p from ascending coefficients
MultiPoly in_p(const std::vector<long>& coeffs) {
  MultiPoly out;
  for (std::size_t e = 0; e < coeffs.size(); ++e)
    out += MultiPoly(static_cast<int>(coeffs[e])) * P(static_cast<int>(e));
  return out;
}

bool tables_criterion(std::string& why) {
  // triple-statistic table, orders 0..3
  auto t1 = build_catalan_matrix(builtin_scalar_seeds("triple"), 3);
  std::vector<std::vector<MultiPoly>> table1 = {
      {MultiPoly(1)},
      {P(1) * W(1), MultiPoly(1)},
      {P(2) * W(2) + P(1) * Q(1) * W(1),
       P(1) * Q(2) + P(1) * Q(1) + P(1) * W(1) + Q(1) * W(1), MultiPoly(1)},
      {P(3) * W(3) + P(2) * Q(3) * W(1) + P(2) * Q(2) * W(1) + 2 * (P(2) * Q(1) * W(2)) +
           P(1) * Q(2) * W(2),
       P(2) * Q(4) + P(1) * Q(5) + P(1) * Q(4) * W(1) + 2 * (P(2) * Q(3)) +
           P(2) * Q(2) * W(1) + P(1) * Q(4) + 3 * (P(1) * Q(3) * W(1)) + P(2) * Q(2) +
           P(2) * Q(1) * W(1) + P(2) * W(2) + 2 * (P(1) * Q(2) * W(1)) + P(1) * Q(1) * W(2) +
           Q(2) * W(2) + P(1) * Q(1) * W(1),
       P(1) * Q(4) + P(1) * Q(3) + 2 * (P(1) * Q(2)) + Q(3) + Q(2) * W(1) + P(1) * Q(1) +
           P(1) * W(1) + Q(1) * W(1),
       MultiPoly(1)}};
  for (int n = 0; n <= 3; ++n)
    for (int k = 0; k <= n; ++k)
      if (!(t1.at(n, k) == table1[n][k])) {
        why = "triple table cell (" + std::to_string(n) + "," + std::to_string(k) + ")";
        return false;
      }

  // weak excedance table at w = q = 1, orders 0..4
  auto t2 = build_catalan_matrix(
      builtin_scalar_seeds("triple", {{"w", MultiPoly(1)}, {"q", MultiPoly(1)}}), 4);
  std::vector<std::vector<MultiPoly>> table2 = {
      {in_p({1})},
      {in_p({0, 1}), in_p({1})},
      {in_p({0, 1, 1}), in_p({1, 3}), in_p({1})},
      {in_p({0, 1, 4, 1}), in_p({1, 10, 7}), in_p({3, 6}), in_p({1})},
      {in_p({0, 1, 11, 11, 1}), in_p({1, 25, 55, 15}), in_p({7, 40, 25}), in_p({6, 10}),
       in_p({1})}};
  for (int n = 0; n <= 4; ++n)
    for (int k = 0; k <= n; ++k)
      if (!(t2.at(n, k) == table2[n][k])) {
        why = "wex table cell (" + std::to_string(n) + "," + std::to_string(k) + ")";
        return false;
      }

  // connected count table, orders 0..4
  auto t3 = build_catalan_matrix(builtin_scalar_seeds("connected-count"), 4);
  const long table3[5][5] = {{1}, {3, 1}, {13, 8, 1}, {71, 62, 15, 1}, {461, 516, 183, 24, 1}};
  for (int n = 0; n <= 4; ++n)
    for (int k = 0; k <= n; ++k)
      if (!(t3.at(n, k) == MultiPoly(static_cast<int>(table3[n][k])))) {
        why = "connected table cell (" + std::to_string(n) + "," + std::to_string(k) + ")";
        return false;
      }
  return true;
}

bool run_checks(const std::vector<std::pair<std::string, int>>& jobs, std::string& why) {
  for (const auto& [id, budget] : jobs) {
    auto rep = verify::run(id, budget);
    if (!rep.pass) {
      why = id + ": " + rep.detail;
      return false;
    }
  }
  return true;
}

bool structural_criterion(std::string& why) {
  // notation round trips and enumeration counts, exhaustive to order 5
  for (int n = 0; n <= 5; ++n) {
    for (int k = 0; k <= n; ++k) {
      Int seen = 0;
      bool ok = true;
      for_each_partial_perm(n, k, [&](const PartialPerm& p) {
        ++seen;
        if (!(PartialPerm::parse(p.str()) == p)) ok = false;
        if (!(from_cycle_form(to_cycle_form(p), n) == p)) ok = false;
        if (!(rotate180(rotate180(p)) == p)) ok = false;
        if (!(reflect_antidiagonal(reflect_antidiagonal(p)) == p)) ok = false;
        if (!(gen_fundamental_inverse(gen_fundamental(p)) == p)) ok = false;
      });
      if (!ok) {
        why = "round trip failed in class (" + std::to_string(n) + "," + std::to_string(k) + ")";
        return false;
      }
      if (seen != partial_perm_count(n, k)) {
        why = "count mismatch in class (" + std::to_string(n) + "," + std::to_string(k) + ")";
        return false;
      }
      // des_exc_map bijectivity
      std::set<PartialPerm> image;
      for_each_partial_perm(n, k, [&](const PartialPerm& p) { image.insert(des_exc_map(p)); });
      if (Int(image.size()) != seen) {
        why = "des_exc_map not bijective in class (" + std::to_string(n) + "," +
              std::to_string(k) + ")";
        return false;
      }
    }
  }

  // polynomial ring axioms on deterministic random samples
  unsigned long long state = 0x9e3779b97f4a7c15ull;
  auto rnd = [&](int bound) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<int>((state >> 33) % bound);
  };
  auto random_poly = [&] {
    MultiPoly out;
    static const char* fams[] = {"q", "w", "p", "t"};
    int terms = rnd(5);
    for (int t = 0; t < terms; ++t) {
      Monomial m;
      for (const char* f : fams)
        if (rnd(2)) m = m.times(Monomial::of(Variable::scalar(f), 1 + rnd(3)));
      out.add_term(m, rnd(11) - 5);
    }
    return out;
  };
  for (int it = 0; it < 300; ++it) {
    MultiPoly a = random_poly(), b = random_poly(), c = random_poly();
    bool ok = a + b == b + a && a * b == b * a && (a + b) + c == a + (b + c) &&
              (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c &&
              a + MultiPoly(0) == a && a * MultiPoly(1) == a;
    if (!ok) {
      why = "ring axiom failed on random sample " + std::to_string(it);
      return false;
    }
  }
  return true;
}

struct Criterion {
  int number;
  std::string description;
  double time_limit;  // seconds; 0 = unlimited
  std::function<bool(std::string&)> fn;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "published tables reproduced (triple n<=3, wex n<=4, connected n<=4)", 1.0,
       tables_criterion},
      {2, "triple-statistic matrix equals brute force for n <= 7", 60.0,
       [](std::string& why) { return run_checks({{"T3.1", 7}}, why); }},
      {3, "closed forms (rlmin,inv), inv, rlmin equal brute force for n <= 7", 60.0,
       [](std::string& why) {
         return run_checks({{"T3.2", 7}, {"C3.3", 7}, {"C3.4", 7}}, why);
       }},
      {4, "exc/wex coefficient reversal for n <= 7", 0.0,
       [](std::string& why) { return run_checks({{"T4.1", 7}}, why); }},
      {5, "des_exc_map bijective with exc -> des, n <= 5, plus worked examples", 0.0,
       [](std::string& why) { return run_checks({{"T4.2", 5}}, why); }},
      {6, "extended matrices n <= 5, family-swap symmetry, cyc ~ rlmin ~ rlmin* n <= 6", 0.0,
       [](std::string& why) {
         return run_checks({{"T5.1", 5},
                            {"T5.2", 5},
                            {"C5.3", 5},
                            {"T5.4", 5},
                            {"C6.7", 5},
                            {"S5-CYC", 6}},
                           why);
       }},
      {7, "connected families: counts n <= 7, shifted matrices, boundary relations", 0.0,
       [](std::string& why) {
         return run_checks(
             {{"P6.1", 7}, {"T6.3", 7}, {"T6.2", 5}, {"C6.4", 7}, {"C6.5", 6}, {"C6.6", 6}},
             why);
       }},
      {8, "cycle-up-down: matrices n <= 7, Euler numbers n <= 8, case transport n <= 6", 0.0,
       [](std::string& why) {
         return run_checks({{"T7.2", 7}, {"C7.3", 7}, {"L7.7", 6}, {"P7.8", 6}, {"T7.9", 7}},
                           why);
       }},
      {9, "series: column EGFs to z^10 exact in q,t; Sheffer ODEs to order 12", 10.0,
       [](std::string& why) { return run_checks({{"T7.4", 10}, {"C7.6", 12}}, why); }},
      {10, "structural suites: round trips, counts, involutions, ring axioms", 0.0,
       structural_criterion},
  };

  bool all = true;
  for (auto& c : criteria) {
    std::string why;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.fn(why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && c.time_limit > 0 && secs > c.time_limit) {
      ok = false;
      why = "over the " + std::to_string(c.time_limit) + "s budget";
    }
    all = all && ok;
    std::printf("%s criterion %2d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", c.number,
                c.description.c_str(), secs, why.empty() ? "" : " -- ", why.c_str());
  }
  return all ? 0 : 1;
}
