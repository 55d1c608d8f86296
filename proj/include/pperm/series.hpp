#pragma once

#include <vector>

#include "pperm/catalan.hpp"
#include "pperm/polynomial.hpp"

namespace pperm {

/// Truncated formal power series in z with RatPoly coefficients; all
/// arithmetic is exact and never reads beyond the truncation order.
/// Binary operations carry the smaller of the two orders.
class PowerSeries {
 public:
  explicit PowerSeries(int order) : c_(order + 1) {}
  PowerSeries(const RatPoly& constant, int order) : c_(order + 1) { c_[0] = constant; }

  static PowerSeries z(int order);
  static PowerSeries sin_z(int order);
  static PowerSeries cos_z(int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }

  const RatPoly& coeff(int m) const { return c_.at(m); }
  void set_coeff(int m, RatPoly v) { c_.at(m) = std::move(v); }

  PowerSeries operator+(const PowerSeries& o) const;
  PowerSeries operator-(const PowerSeries& o) const;
  PowerSeries operator*(const PowerSeries& o) const;
  PowerSeries scaled(const RatPoly& k) const;

  /// Denominator must have an invertible (nonzero rational constant)
  /// constant term.
  PowerSeries operator/(const PowerSeries& o) const;

  PowerSeries pow(int k) const;
  PowerSeries derivative() const;  // order drops by one
  PowerSeries truncated_to(int order) const;

  bool operator==(const PowerSeries&) const = default;

  std::string str() const;  // "m: coeff" lines

 private:
  std::vector<RatPoly> c_;
};

/// exp(f) for f with zero constant term.
PowerSeries series_exp(const PowerSeries& f);

/// log(f) for f with constant term 1.
PowerSeries series_log(const PowerSeries& f);

/// Closed-form column EGF of the cycle-up-down matrix:
/// Lambda_k(z) = e^{(q-t)z} (1-sin z)^{-t} F(z)^k / k!, with
/// F = cos z/(1-sin z) - 1 and the symbolic power realized as
/// exp(-t log(1-sin z)).
PowerSeries lambda_k(int k, int order, const RatPoly& q, const RatPoly& t);

/// Sum over n <= order of a_{n,k} z^n / n!.
PowerSeries column_egf(const CatalanMatrix& m, int k, int order);

/// Sheffer-matrix consistency for the seeds s_k = a + k u and
/// t_k = k (b + (k-1) v): extracts B and F from the matrix columns and
/// checks the two ODEs plus the column factorization A_k = B F^k / k!.
struct ShefferReport {
  bool b_at_zero = false;     // B(0) = 1, F(0) = 0
  bool f_ode = false;         // F' = 1 + u F + v F^2
  bool b_ode = false;         // B' = a B + b B F
  bool columns_match = false; // A_k = B F^k / k!, k <= 4
  int order = 0;
  bool pass() const { return b_at_zero && f_ode && b_ode && columns_match; }
};

ShefferReport sheffer_check(const RatPoly& a, const RatPoly& b, const RatPoly& u,
                            const RatPoly& v, int order);

}  // namespace pperm
