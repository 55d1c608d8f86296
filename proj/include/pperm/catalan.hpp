#pragma once

#include <string>
#include <vector>

#include "pperm/seeds.hpp"

namespace pperm {

/// Lower-triangular array a_{n,k} (0 <= k <= n <= N) built from seed
/// sequences via a_{n,k} = a_{n-1,k-1} + s_k a_{n-1,k} + t_{k+1} a_{n-1,k+1}.
/// Immutable once built.
class CatalanMatrix {
 public:
  CatalanMatrix(std::string source, ParamMap params, std::vector<std::vector<MultiPoly>> rows)
      : source_(std::move(source)), params_(std::move(params)), rows_(std::move(rows)) {}

  int order() const { return static_cast<int>(rows_.size()) - 1; }

  const MultiPoly& at(int n, int k) const;

  /// Zero outside the triangle (used when re-checking the recurrence).
  MultiPoly at_or_zero(int n, int k) const;

  const std::string& source() const { return source_; }
  const ParamMap& params() const { return params_; }

  std::string json() const;
  std::string csv() const;

 private:
  std::string source_;
  ParamMap params_;
  std::vector<std::vector<MultiPoly>> rows_;
};

/// Rejects specs whose t(l) vanishes anywhere in the evaluated range.
CatalanMatrix build_catalan_matrix(const SeedSpec& seeds, int N);
CatalanMatrix build_extended_matrix(const ExtendedSeedSpec& seeds, int N);

/// True when every interior entry satisfies the defining recurrence.
bool satisfies_recurrence(const CatalanMatrix& m, const SeedSpec& seeds);
bool satisfies_recurrence(const CatalanMatrix& m, const ExtendedSeedSpec& seeds);

}  // namespace pperm
