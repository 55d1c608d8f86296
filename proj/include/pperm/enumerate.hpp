#pragma once

#include <functional>

#include "pperm/partial_perm.hpp"
#include "pperm/polynomial.hpp"

namespace pperm {

using PermVisitor = std::function<void(const PartialPerm&)>;

/// Visit every element of P_{n,k} exactly once, in lexicographic order
/// of the one-line notation with the gap marker sorted last.
void for_each_partial_perm(int n, int k, const PermVisitor& visit);

/// Restrict the stream to one first-token block (first = 0 for a
/// leading gap, otherwise the first image value). Blocks partition
/// P_{n,k}, so verification can fan out across workers.
void for_each_partial_perm_first(int n, int k, int first, const PermVisitor& visit);

/// |P_{n,k}| = C(n,k)^2 (n-k)!.
Int partial_perm_count(int n, int k);

}  // namespace pperm
