#pragma once

#include <vector>

#include "pperm/partial_perm.hpp"

namespace pperm {

/// Foata's fundamental bijection on a word with distinct entries:
/// cut after each right-to-left minimum, read segments as full cycles.
CycleForm fundamental(const std::vector<int>& word);

/// Inverse: arrange full cycles smallest-last in increasing order of
/// those last elements and drop the parentheses.
std::vector<int> fundamental_inverse(const CycleForm& c);

/// Fundamental bijection extended to P_{n,k}: the gap-delimited
/// segments become partial cycles (with the missing values appended)
/// and the final segment goes through the word-level map.
PartialPerm gen_fundamental(const PartialPerm& p);
PartialPerm gen_fundamental_inverse(const PartialPerm& p);

/// Transports excedances to descents: reverse every cycle (gap marker
/// stays put), rearrange into standard form, apply the inverse
/// fundamental map. Satisfies des(des_exc_map(p)) == exc(p).
PartialPerm des_exc_map(const PartialPerm& p);

/// Rotate the matrix by 180 degrees: (i,j) -> (n+1-i, n+1-j).
PartialPerm rotate180(const PartialPerm& p);

/// Reflect across the antidiagonal: (i,j) -> (n+1-j, n+1-i).
PartialPerm reflect_antidiagonal(const PartialPerm& p);

/// Replace each value by its order-reversed counterpart within the
/// reference set: the i-th smallest becomes the i-th largest.
std::vector<int> local_complement(const std::vector<int>& values,
                                  const std::vector<int>& reference_set);

/// Appends for the first two cycle-up-down cases: adjoin (n+1 X),
/// respectively the fixed point (n+1).
PartialPerm append_gap(const PartialPerm& p);
PartialPerm append_fixed(const PartialPerm& p);

/// Insert n = order+1 at the front of the partial cycle c, then take
/// local complements within the enlarged value set. The modified cycle
/// stays partial (case 3) or closes into a full cycle (case 4).
PartialPerm cud_insert_partial(const PartialPerm& p, const Cycle& c);
PartialPerm cud_insert_full(const PartialPerm& p, const Cycle& c);

/// Merge two partial cycles with min(c1) > min(c2) through the new
/// largest element n = order+1 (case 5). When c1 ends on a rise the
/// tail gets locally complemented so the zig-zag survives.
PartialPerm cud_merge(const PartialPerm& p, const Cycle& c1, const Cycle& c2);

/// Which of the five constructions produced p, judged by the cycle
/// containing the largest element. Requires p cycle-up-down.
int cud_case(const PartialPerm& p);

struct CudSplit {
  PartialPerm rho;
  Cycle c;
};
struct CudSplit2 {
  PartialPerm rho;
  Cycle c1, c2;
};

CudSplit cud_insert_partial_inverse(const PartialPerm& p);
CudSplit cud_insert_full_inverse(const PartialPerm& p);
CudSplit2 cud_merge_inverse(const PartialPerm& p);

}  // namespace pperm
