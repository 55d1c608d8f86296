#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "pperm/polynomial.hpp"

namespace pperm {

using ParamMap = std::map<std::string, MultiPoly>;

/// Seed sequences (s_l)_{l>=0}, (t_l)_{l>=1} generating a Catalan matrix.
struct SeedSpec {
  std::string name;
  ParamMap params;
  std::function<MultiPoly(int)> s;  // l >= 0
  std::function<MultiPoly(int)> t;  // l >= 1
};

/// Row-indexed seeds s^(i)_l, t^(i)_l generating an extended matrix.
struct ExtendedSeedSpec {
  std::string name;
  ParamMap params;
  std::function<MultiPoly(int, int)> s;  // (i >= 1, l >= 0)
  std::function<MultiPoly(int, int)> t;  // (i >= 1, l >= 1)
};

/// s+_l = s_{l+1}, t+_l = t_{l+1}; the shifted matrix counts the
/// connected members of the family one order up.
SeedSpec shift_seeds(const SeedSpec& spec);

/// Extended shift: s+(i,l) = s(i+1,l+1), t+(i,l) = t(i+1,l+1).
ExtendedSeedSpec shift_seeds(const ExtendedSeedSpec& spec);

std::vector<std::string> builtin_seed_names();
bool is_builtin_seed(const std::string& name);
bool is_builtin_extended(const std::string& name);

/// Look up a registered scalar family; params bind the family's free
/// parameters (absent entries stay symbolic). Unknown names throw.
SeedSpec builtin_scalar_seeds(const std::string& name, const ParamMap& params = {});

/// Row-indexed families; binding a parameter collapses the whole
/// indexed family to that one value (w_i := w for all i).
ExtendedSeedSpec builtin_extended_seeds(const std::string& name, const ParamMap& params = {});

}  // namespace pperm
