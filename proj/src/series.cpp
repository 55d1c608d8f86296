#include "pperm/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "pperm/qanalog.hpp"

namespace pperm {

namespace {

Rat rat_constant(const RatPoly& p) {
  for (const auto& [m, c] : p.terms())
    if (!m.is_unit()) throw std::invalid_argument("series: constant term is not a scalar");
  return p.coefficient(Monomial::unit());
}

}  // namespace

PowerSeries PowerSeries::z(int order) {
  PowerSeries s(order);
  if (order >= 1) s.c_[1] = RatPoly(1);
  return s;
}

PowerSeries PowerSeries::sin_z(int order) {
  PowerSeries s(order);
  Rat c = 1;
  for (int m = 1; m <= order; m += 2) {
    s.c_[m] = RatPoly(c / Rat(factorial(m)));
    c = -c;
  }
  return s;
}

PowerSeries PowerSeries::cos_z(int order) {
  PowerSeries s(order);
  Rat c = 1;
  for (int m = 0; m <= order; m += 2) {
    s.c_[m] = RatPoly(c / Rat(factorial(m)));
    c = -c;
  }
  return s;
}

PowerSeries PowerSeries::operator+(const PowerSeries& o) const {
  PowerSeries r(std::min(order(), o.order()));
  for (int m = 0; m <= r.order(); ++m) r.c_[m] = c_[m] + o.c_[m];
  return r;
}

PowerSeries PowerSeries::operator-(const PowerSeries& o) const {
  PowerSeries r(std::min(order(), o.order()));
  for (int m = 0; m <= r.order(); ++m) r.c_[m] = c_[m] - o.c_[m];
  return r;
}

PowerSeries PowerSeries::operator*(const PowerSeries& o) const {
  PowerSeries r(std::min(order(), o.order()));
  for (int m = 0; m <= r.order(); ++m) {
    RatPoly acc;
    for (int j = 0; j <= m; ++j) acc += c_[j] * o.c_[m - j];
    r.c_[m] = std::move(acc);
  }
  return r;
}

PowerSeries PowerSeries::scaled(const RatPoly& k) const {
  PowerSeries r(order());
  for (int m = 0; m <= order(); ++m) r.c_[m] = c_[m] * k;
  return r;
}

PowerSeries PowerSeries::operator/(const PowerSeries& o) const {
  Rat d0 = rat_constant(o.c_[0]);
  if (d0 == 0) throw std::invalid_argument("series division by zero constant term");
  PowerSeries r(std::min(order(), o.order()));
  Rat inv = Rat(1) / d0;
  for (int m = 0; m <= r.order(); ++m) {
    RatPoly acc = c_[m];
    for (int j = 0; j < m; ++j) acc -= r.c_[j] * o.c_[m - j];
    r.c_[m] = acc.scaled(inv);
  }
  return r;
}

PowerSeries PowerSeries::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative series power");
  PowerSeries r(RatPoly(1), order());
  PowerSeries base = *this;
  while (k > 0) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

PowerSeries PowerSeries::derivative() const {
  if (order() == 0) return PowerSeries(0);
  PowerSeries r(order() - 1);
  for (int m = 0; m < order(); ++m) r.c_[m] = c_[m + 1].scaled(Rat(m + 1));
  return r;
}

PowerSeries PowerSeries::truncated_to(int order) const {
  PowerSeries r(std::min(order, this->order()));
  for (int m = 0; m <= r.order(); ++m) r.c_[m] = c_[m];
  return r;
}

std::string PowerSeries::str() const {
  std::ostringstream out;
  for (int m = 0; m <= order(); ++m) out << m << ": " << c_[m].str() << "\n";
  return out.str();
}

PowerSeries series_exp(const PowerSeries& f) {
  if (!f.coeff(0).is_zero())
    throw std::invalid_argument("series_exp requires zero constant term");
  // g' = f' g  =>  m g_m = sum_{j=1..m} j f_j g_{m-j}
  PowerSeries g(f.order());
  g.set_coeff(0, RatPoly(1));
  for (int m = 1; m <= f.order(); ++m) {
    RatPoly acc;
    for (int j = 1; j <= m; ++j) acc += f.coeff(j).scaled(Rat(j)) * g.coeff(m - j);
    g.set_coeff(m, acc.scaled(Rat(1) / Rat(m)));
  }
  return g;
}

PowerSeries series_log(const PowerSeries& f) {
  if (!(f.coeff(0) == RatPoly(1)))
    throw std::invalid_argument("series_log requires constant term 1");
  // h' = f'/f  =>  m h_m = m f_m - sum_{j=1..m-1} j h_j f_{m-j}
  PowerSeries h(f.order());
  for (int m = 1; m <= f.order(); ++m) {
    RatPoly acc = f.coeff(m).scaled(Rat(m));
    for (int j = 1; j < m; ++j) acc -= h.coeff(j).scaled(Rat(j)) * f.coeff(m - j);
    h.set_coeff(m, acc.scaled(Rat(1) / Rat(m)));
  }
  return h;
}

PowerSeries lambda_k(int k, int order, const RatPoly& q, const RatPoly& t) {
  if (k < 0 || order < 0) throw std::invalid_argument("lambda_k: k, order must be >= 0");
  PowerSeries sin = PowerSeries::sin_z(order);
  PowerSeries cos = PowerSeries::cos_z(order);
  PowerSeries one(RatPoly(1), order);
  PowerSeries one_minus_sin = one - sin;

  PowerSeries expo = PowerSeries::z(order).scaled(q - t) -
                     series_log(one_minus_sin).scaled(t);
  PowerSeries b = series_exp(expo);  // e^{(q-t)z} (1-sin z)^{-t}
  PowerSeries f = cos / one_minus_sin - one;

  return (b * f.pow(k)).scaled(RatPoly(Rat(1) / Rat(factorial(k))));
}

PowerSeries column_egf(const CatalanMatrix& m, int k, int order) {
  if (order > m.order())
    throw std::invalid_argument("column_egf: order exceeds the matrix order");
  PowerSeries s(order);
  for (int n = 0; n <= order; ++n)
    s.set_coeff(n, to_rat(m.at_or_zero(n, k)).scaled(Rat(1) / Rat(factorial(n))));
  return s;
}

namespace {

// rational-coefficient Catalan recurrence, for seeds that need 1/2
std::vector<std::vector<RatPoly>> rat_rows(int N, const std::function<RatPoly(int)>& s,
                                           const std::function<RatPoly(int)>& t) {
  std::vector<std::vector<RatPoly>> rows(N + 1);
  rows[0] = {RatPoly(1)};
  for (int n = 1; n <= N; ++n) {
    rows[n].resize(n + 1);
    for (int k = 0; k <= n; ++k) {
      RatPoly e;
      if (k > 0) e += rows[n - 1][k - 1];
      if (k <= n - 1) e += s(k) * rows[n - 1][k];
      if (k + 1 <= n - 1) e += t(k + 1) * rows[n - 1][k + 1];
      rows[n][k] = std::move(e);
    }
  }
  return rows;
}

}  // namespace

ShefferReport sheffer_check(const RatPoly& a, const RatPoly& b, const RatPoly& u,
                            const RatPoly& v, int order) {
  if (order < 2) throw std::invalid_argument("sheffer_check needs order >= 2");
  ShefferReport rep;
  rep.order = order;

  auto s_seed = [&](int k) { return a + RatPoly(k) * u; };
  auto t_seed = [&](int k) { return RatPoly(k) * (b + RatPoly(k - 1) * v); };
  auto rows = rat_rows(order, s_seed, t_seed);

  auto column = [&](int k) {
    PowerSeries s(order);
    for (int n = 0; n <= order; ++n)
      s.set_coeff(n, (k <= n ? rows[n][k] : RatPoly()).scaled(Rat(1) / Rat(factorial(n))));
    return s;
  };

  PowerSeries B = column(0);
  PowerSeries A1 = column(1);
  PowerSeries F = A1 / B;  // A_1 = B F / 1!

  rep.b_at_zero = B.coeff(0) == RatPoly(1) && F.coeff(0).is_zero();

  PowerSeries one(RatPoly(1), order);
  rep.f_ode = F.derivative() == (one + F.scaled(u) + (F * F).scaled(v)).truncated_to(order - 1);
  rep.b_ode = B.derivative() == (B.scaled(a) + (B * F).scaled(b)).truncated_to(order - 1);

  rep.columns_match = true;
  for (int k = 0; k <= 4; ++k) {
    PowerSeries expect = (B * F.pow(k)).scaled(RatPoly(Rat(1) / Rat(factorial(k))));
    if (!(column(k) == expect)) rep.columns_match = false;
  }
  return rep;
}

}  // namespace pperm
