#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pperm/partial_perm.hpp"
#include "pperm/polynomial.hpp"

namespace pperm {

/// Integer-valued statistics of one partial permutation.
struct StatBundle {
  int fix = 0;
  int cyc = 0;
  int cyc_ge2 = 0;
  int inv = 0;
  int exc = 0;
  int wex = 0;
  int rlmin = 0;
  int rlmin_star = 0;
  int des = 0;
  int sfix = 0;
  int scyc = 0;

  int scyc_ge2() const { return scyc - sfix; }
};

/// Set-valued statistics; sets are sorted vectors of elements of 1..n.
struct SetStatBundle {
  std::vector<int> Fix, Sfix, Cyc, Cyc_ge2, Scyc, Scyc_ge2, Excl, Rlmip;
  std::vector<int> connectivity;  // Scyc minus {n}
};

int stat_inv(const PartialPerm& p);
int stat_des(const PartialPerm& p);
StatBundle stat_core(const PartialPerm& p);
SetStatBundle stat_sets(const PartialPerm& p);

enum class ScalarStat { fix, cyc, cyc_ge2, inv, exc, wex, rlmin, rlmin_star, des, sfix, scyc, scyc_ge2 };
enum class SetStat { Fix, Sfix, Cyc, Cyc_ge2, Scyc, Scyc_ge2, Excl, Rlmip, Conn };

int scalar_stat_value(const StatBundle& b, ScalarStat s);
const std::vector<int>& set_stat_value(const SetStatBundle& b, SetStat s);

/// One weight factor of a generating function: either var^stat for an
/// integer statistic, or the product of family_i over a set statistic.
struct WeightTerm {
  std::optional<ScalarStat> scalar;
  std::optional<SetStat> set;
  Variable var;        // scalar case
  std::string family;  // set case

  static WeightTerm of(ScalarStat s, Variable v) { return {s, std::nullopt, std::move(v), {}}; }
  static WeightTerm of(SetStat s, std::string fam) {
    return {std::nullopt, s, Variable{}, std::move(fam)};
  }
};

/// Grammar: comma-separated "stat=var" (scalar, lowercase stat) or
/// "Stat=family" (set-valued, capitalized stat).
std::vector<WeightTerm> parse_weight_spec(const std::string& spec);
std::string weight_spec_str(const std::vector<WeightTerm>& weights);

enum class ClassFilter { All, Connected, CycleUpDown, ConnectedCycleUpDown };

bool filter_accepts(ClassFilter f, const PartialPerm& p);

/// Exact brute-force generating function over P_{n,k} (optionally
/// filtered), the universal oracle every seed-matrix identity is
/// checked against. workers = 0 reads PARTPERM_WORKERS (default 1).
MultiPoly generating_function(int n, int k, const std::vector<WeightTerm>& weights,
                              ClassFilter filter = ClassFilter::All, int workers = 0);

/// |{pi in P_{n,k} : filter(pi)}| by the same enumeration.
Int class_count(int n, int k, ClassFilter filter, int workers = 0);

/// Orders above this are rejected by generating_function/class_count.
int enumeration_budget();
void set_enumeration_budget(int n);

}  // namespace pperm
