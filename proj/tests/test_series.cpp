#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pperm/qanalog.hpp"
#include "pperm/series.hpp"
#include "pperm/statistics.hpp"

using namespace pperm;

namespace {

RatPoly T() { return RatPoly::var("t"); }
RatPoly Q() { return RatPoly::var("q"); }
RatPoly half() { return RatPoly(Rat(1) / 2); }

}  // namespace

TEST_CASE("series arithmetic") {
  int M = 8;
  PowerSeries one(RatPoly(1), M);
  PowerSeries z = PowerSeries::z(M);

  PowerSeries prod = (one + z) * (one - z);
  CHECK(prod.coeff(0) == RatPoly(1));
  CHECK(prod.coeff(1).is_zero());
  CHECK(prod.coeff(2) == RatPoly(-1));
  for (int m = 3; m <= M; ++m) CHECK(prod.coeff(m).is_zero());

  // geometric series
  PowerSeries geo = one / (one - z);
  for (int m = 0; m <= M; ++m) CHECK(geo.coeff(m) == RatPoly(1));

  // derivative of z^3/6 is z^2/2
  PowerSeries cube(M);
  cube.set_coeff(3, RatPoly(Rat(1) / 6));
  PowerSeries deriv = cube.derivative();
  CHECK(deriv.order() == M - 1);
  CHECK(deriv.coeff(2) == RatPoly(Rat(1) / 2));

  CHECK_THROWS_AS(one / z, std::invalid_argument);
}

TEST_CASE("sin, cos, exp, log") {
  int M = 16;
  PowerSeries sin = PowerSeries::sin_z(M);
  CHECK(sin.coeff(1) == RatPoly(1));
  CHECK(sin.coeff(3) == RatPoly(Rat(-1) / 6));
  CHECK(sin.coeff(5) == RatPoly(Rat(1) / 120));
  CHECK(sin.coeff(2).is_zero());

  PowerSeries one(RatPoly(1), M);
  PowerSeries z = PowerSeries::z(M);
  CHECK(series_exp(series_log(one + z)) == one + z);

  PowerSeries cos = PowerSeries::cos_z(M);
  CHECK(sin * sin + cos * cos == PowerSeries(RatPoly(1), M));

  CHECK_THROWS_AS(series_exp(one), std::invalid_argument);
  CHECK_THROWS_AS(series_log(z), std::invalid_argument);
}

TEST_CASE("the symbolic power (1 - sin z)^{-t}") {
  int M = 6;
  PowerSeries one(RatPoly(1), M);
  PowerSeries b = series_exp(series_log(one - PowerSeries::sin_z(M)).scaled(RatPoly(-1) * T()));

  // brute force over all partial permutations of order 2 with no gaps:
  // 2! [z^2] = sum over U_2 of t^cyc
  MultiPoly by_cycles =
      generating_function(2, 0, parse_weight_spec("cyc=t"), ClassFilter::CycleUpDown);
  CHECK(b.coeff(2).scaled(Rat(2)) == to_rat(by_cycles));
  CHECK(b.coeff(2) == (T() * T() + T()).scaled(Rat(1) / 2));
}

TEST_CASE("closed-form lambda against brute force at low order") {
  PowerSeries lam0 = lambda_k(0, 4, T(), T());  // q := t
  MultiPoly u3 = generating_function(3, 0, parse_weight_spec("cyc=t"), ClassFilter::CycleUpDown);
  CHECK(lam0.coeff(3).scaled(Rat(6)) == to_rat(u3));
  CHECK(lam0.coeff(3) == (T().pow(3) + 3 * T().pow(2) + T()).scaled(Rat(1) / 6));

  // Euler numbers appear at q = t = 1
  PowerSeries unit = lambda_k(0, 3, RatPoly(1), RatPoly(1));
  CHECK(unit.coeff(0) == RatPoly(1));
  CHECK(unit.coeff(1) == RatPoly(1));
  CHECK(unit.coeff(2) == RatPoly(1));
  CHECK(unit.coeff(3) == RatPoly(Rat(5) / 6));

  // columns start at z^k
  PowerSeries lam3 = lambda_k(3, 6, Q(), T());
  for (int m = 0; m < 3; ++m) CHECK(lam3.coeff(m).is_zero());
}

TEST_CASE("scaled lambda coefficients are the cycle generating functions") {
  for (int n = 0; n <= 8; ++n) {
    PowerSeries lam = lambda_k(0, n, T(), T());
    MultiPoly brute =
        generating_function(n, 0, parse_weight_spec("cyc=t"), ClassFilter::CycleUpDown);
    CHECK(lam.coeff(n).scaled(Rat(factorial(n))) == to_rat(brute));
  }
}

TEST_CASE("F satisfies its differential equation") {
  int M = 16;
  PowerSeries one(RatPoly(1), M);
  PowerSeries f = PowerSeries::cos_z(M) / (one - PowerSeries::sin_z(M)) - one;
  CHECK(f.coeff(0).is_zero());
  PowerSeries rhs = one + f + (f * f).scaled(half());
  CHECK(f.derivative() == rhs.truncated_to(M - 1));
}

TEST_CASE("column EGFs of the cycle-up-down matrix") {
  auto m = build_catalan_matrix(builtin_scalar_seeds("cud-fix-cyc"), 10);
  CHECK(column_egf(m, 0, 5).coeff(0) == RatPoly(1));
  CHECK(column_egf(m, 1, 5).coeff(1) == RatPoly(1));
  CHECK_THROWS_AS(column_egf(m, 0, 11), std::invalid_argument);

  for (int k = 0; k <= 4; ++k) CHECK(lambda_k(k, 10, Q(), T()) == column_egf(m, k, 10));
}

TEST_CASE("sheffer consistency") {
  auto rep = sheffer_check(Q(), T(), RatPoly(1), half(), 10);
  CHECK(rep.b_at_zero);
  CHECK(rep.f_ode);
  CHECK(rep.b_ode);
  CHECK(rep.columns_match);

  // a degenerate family: only the ODE residuals are claimed
  auto rep2 = sheffer_check(RatPoly(0), RatPoly(1), RatPoly(0), RatPoly(0), 10);
  CHECK(rep2.pass());

  auto rep3 = sheffer_check(RatPoly(2), RatPoly(3), RatPoly(1), RatPoly(2), 8);
  CHECK(rep3.b_at_zero);
  CHECK(rep3.pass());

  CHECK_THROWS_AS(sheffer_check(Q(), T(), RatPoly(1), half(), 1), std::invalid_argument);
}

TEST_CASE("series printing") {
  PowerSeries s = lambda_k(0, 2, RatPoly(1), RatPoly(1));
  CHECK(s.str() == "0: 1\n1: 1\n2: 1\n");
}
