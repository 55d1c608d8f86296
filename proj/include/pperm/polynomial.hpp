#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pperm {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// A symbolic variable: a family name plus an optional row index.
/// Scalar variables ("q", "w", ...) have index 0; indexed families
/// ("w_3") carry index >= 1.
struct Variable {
  std::string family;
  int index = 0;

  static Variable scalar(std::string f) { return Variable{std::move(f), 0}; }
  static Variable indexed(std::string f, int i) {
    if (i < 1) throw std::invalid_argument("variable index must be >= 1");
    return Variable{std::move(f), i};
  }

  std::string str() const {
    return index == 0 ? family : family + "_" + std::to_string(index);
  }

  // Total order: family lexicographic, then index.
  auto operator<=>(const Variable&) const = default;
};

/// A monomial: finite map Variable -> positive exponent, kept sorted.
/// The empty monomial is 1.
class Monomial {
 public:
  Monomial() = default;

  static Monomial unit() { return Monomial(); }

  static Monomial of(const Variable& v, int e = 1) {
    Monomial m;
    if (e < 0) throw std::invalid_argument("negative exponent");
    if (e > 0) m.exps_.emplace_back(v, e);
    return m;
  }

  bool is_unit() const { return exps_.empty(); }

  int degree() const {
    int d = 0;
    for (const auto& [v, e] : exps_) d += e;
    return d;
  }

  int exponent_of(const Variable& v) const {
    for (const auto& [w, e] : exps_)
      if (w == v) return e;
    return 0;
  }

  const std::vector<std::pair<Variable, int>>& exponents() const { return exps_; }

  Monomial times(const Monomial& o) const {
    Monomial out;
    out.exps_.reserve(exps_.size() + o.exps_.size());
    std::size_t i = 0, j = 0;
    while (i < exps_.size() && j < o.exps_.size()) {
      if (exps_[i].first < o.exps_[j].first)
        out.exps_.push_back(exps_[i++]);
      else if (o.exps_[j].first < exps_[i].first)
        out.exps_.push_back(o.exps_[j++]);
      else {
        out.exps_.emplace_back(exps_[i].first, exps_[i].second + o.exps_[j].second);
        ++i, ++j;
      }
    }
    for (; i < exps_.size(); ++i) out.exps_.push_back(exps_[i]);
    for (; j < o.exps_.size(); ++j) out.exps_.push_back(o.exps_[j]);
    return out;
  }

  /// Multiply in a single variable (used by generating-function builders).
  void push(const Variable& v, int e) {
    if (e == 0) return;
    *this = times(of(v, e));
  }

  std::string str() const {
    if (exps_.empty()) return "1";
    std::string s;
    for (const auto& [v, e] : exps_) {
      if (!s.empty()) s += "·";
      s += v.str();
      if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
  }

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<std::pair<Variable, int>> exps_;
};

/// Graded lexicographic order: total degree first, then lex on the
/// exponent vectors over the total variable order.
inline bool graded_lex_less(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  const auto& x = a.exponents();
  const auto& y = b.exponents();
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    if (x[i].first < y[j].first) return false;  // a has earlier variable -> lex greater
    if (y[j].first < x[i].first) return true;
    if (x[i].second != y[j].second) return x[i].second < y[j].second;
    ++i, ++j;
  }
  // Equal on the common prefix: the one with a remaining variable is lex greater.
  return i == x.size() && j < y.size();
}

struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return graded_lex_less(a, b);
  }
};

namespace detail {
inline std::string coeff_str(const Int& c) { return c.str(); }
inline std::string coeff_str(const Rat& c) {
  if (denominator(c) == 1) return numerator(c).str();
  return numerator(c).str() + "/" + denominator(c).str();
}
}  // namespace detail

/// Sparse multivariate polynomial with exact coefficients.
/// Terms are kept in canonical (graded lex) order with no zero
/// coefficients; equality is structural.
template <typename C>
class Polynomial {
 public:
  using coeff_type = C;
  using term_map = std::map<Monomial, C, MonomialOrder>;

  Polynomial() = default;
  Polynomial(int v) { set(Monomial::unit(), C(v)); }  // NOLINT: implicit by design
  Polynomial(const C& v) { set(Monomial::unit(), v); }
  explicit Polynomial(const Monomial& m, const C& c = C(1)) { set(m, c); }

  static Polynomial var(const Variable& v) { return Polynomial(Monomial::of(v)); }
  static Polynomial var(const std::string& family, int index = 0) {
    return Polynomial(Monomial::of(Variable{family, index}));
  }

  bool is_zero() const { return terms_.empty(); }

  std::size_t term_count() const { return terms_.size(); }

  const term_map& terms() const { return terms_; }

  C coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? C(0) : it->second;
  }

  int degree() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
  }

  void add_term(const Monomial& m, const C& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, C(-c));
    return *this;
  }
  Polynomial operator+(const Polynomial& o) const {
    Polynomial r = *this;
    r += o;
    return r;
  }
  Polynomial operator-(const Polynomial& o) const {
    Polynomial r = *this;
    r -= o;
    return r;
  }
  Polynomial operator-() const {
    Polynomial r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, C(-c));
    return r;
  }

  Polynomial operator*(const Polynomial& o) const {
    Polynomial r;
    for (const auto& [m1, c1] : terms_)
      for (const auto& [m2, c2] : o.terms_) r.add_term(m1.times(m2), C(c1 * c2));
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const C& k) const {
    Polynomial r;
    if (k == 0) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, C(c * k));
    return r;
  }

  Polynomial pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative power");
    Polynomial r(1);
    Polynomial base = *this;
    while (e > 0) {
      if (e & 1) r *= base;
      base = (e >>= 1) ? base * base : base;
    }
    return r;
  }

  /// Simultaneous substitution; unbound variables are left unchanged.
  Polynomial substitute(const std::map<Variable, Polynomial>& bind) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
      Polynomial term(c);
      Monomial rest;
      for (const auto& [v, e] : m.exponents()) {
        auto it = bind.find(v);
        if (it == bind.end())
          rest = rest.times(Monomial::of(v, e));
        else
          term *= it->second.pow(e);
      }
      out += term * Polynomial(rest);
    }
    return out;
  }

  /// Relabel variable families wholesale (every index at once), e.g. a <-> w.
  Polynomial rename_families(const std::map<std::string, std::string>& ren) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
      Monomial nm;
      for (const auto& [v, e] : m.exponents()) {
        auto it = ren.find(v.family);
        Variable w = it == ren.end() ? v : Variable{it->second, v.index};
        nm = nm.times(Monomial::of(w, e));
      }
      out.add_term(nm, c);
    }
    return out;
  }

  bool operator==(const Polynomial&) const = default;

  /// Canonical string: terms in descending graded-lex order joined by
  /// " + ", each term "c·v1^e1·v2^e2"; unit coefficients elided.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!s.empty()) s += " + ";
      const auto& [m, c] = *it;
      if (m.is_unit())
        s += detail::coeff_str(c);
      else if (c == 1)
        s += m.str();
      else if (c == -1)
        s += "-" + m.str();
      else
        s += detail::coeff_str(c) + "·" + m.str();
    }
    return s;
  }

 private:
  void set(const Monomial& m, const C& c) {
    if (c != 0) terms_.emplace(m, c);
  }

  term_map terms_;
};

using MultiPoly = Polynomial<Int>;
using RatPoly = Polynomial<Rat>;

template <typename C>
Polynomial<C> operator*(const C& k, const Polynomial<C>& p) {
  return p.scaled(k);
}
template <typename C>
Polynomial<C> operator*(long k, const Polynomial<C>& p) {
  return p.scaled(C(k));
}

/// Promote an integer polynomial to rational coefficients.
RatPoly to_rat(const MultiPoly& p);

/// Convenience substitution of scalar variables by name.
MultiPoly substitute_scalars(const MultiPoly& p, const std::map<std::string, MultiPoly>& bind);

/// Evaluate at 1 for every variable (coefficient sum).
Int coefficient_sum(const MultiPoly& p);

}  // namespace pperm
