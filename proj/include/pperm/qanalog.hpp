#pragma once

#include "pperm/polynomial.hpp"

namespace pperm {

/// [n] = 1 + q + ... + q^{n-1}; [0] = 0.
MultiPoly q_integer(int n, const Variable& q = Variable::scalar("q"));

/// [n]_{w,q} = w + q + ... + q^{n-1}; [0]_{w,q} = 0, [1]_{w,q} = w.
MultiPoly qw_integer(int n, const Variable& w = Variable::scalar("w"),
                     const Variable& q = Variable::scalar("q"));

/// [n]! = [1][2]...[n].
MultiPoly q_factorial(int n, const Variable& q = Variable::scalar("q"));

/// Gaussian binomial, computed division-free via the q-Pascal recurrence
/// [n k] = [n-1 k-1] + q^k [n-1 k].
MultiPoly q_binomial(int n, int k, const Variable& q = Variable::scalar("q"));

Int factorial(int n);
Int binomial(int n, int k);

}  // namespace pperm
