#include "pperm/qanalog.hpp"

#include <stdexcept>
#include <vector>

namespace pperm {

MultiPoly q_integer(int n, const Variable& q) {
  if (n < 0) throw std::invalid_argument("q_integer: n must be >= 0");
  MultiPoly r;
  for (int e = 0; e < n; ++e) r.add_term(Monomial::of(q, e), 1);
  return r;
}

MultiPoly qw_integer(int n, const Variable& w, const Variable& q) {
  if (n < 0) throw std::invalid_argument("qw_integer: n must be >= 0");
  if (n == 0) return MultiPoly();
  MultiPoly r = MultiPoly::var(w);
  for (int e = 1; e < n; ++e) r.add_term(Monomial::of(q, e), 1);
  return r;
}

MultiPoly q_factorial(int n, const Variable& q) {
  if (n < 0) throw std::invalid_argument("q_factorial: n must be >= 0");
  MultiPoly r(1);
  for (int m = 1; m <= n; ++m) r *= q_integer(m, q);
  return r;
}

MultiPoly q_binomial(int n, int k, const Variable& q) {
  if (n < 0 || k < 0 || k > n) throw std::invalid_argument("q_binomial: need 0 <= k <= n");
  // row-by-row q-Pascal triangle
  std::vector<MultiPoly> row{MultiPoly(1)};
  for (int m = 1; m <= n; ++m) {
    std::vector<MultiPoly> next(m + 1);
    next[0] = 1;
    next[m] = 1;
    for (int j = 1; j < m; ++j)
      next[j] = row[j - 1] + MultiPoly(Monomial::of(q, j)) * row[j];
    row = std::move(next);
  }
  return row[k];
}

Int factorial(int n) {
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

}  // namespace pperm
