#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace pperm {

/// A partial permutation of order n: an injective partial map on 1..n,
/// equivalently an n x n 0,1-matrix with at most one 1 per row and
/// column. Stored as the one-line image; 0 marks a gap (zero row).
/// Values are immutable after construction.
class PartialPerm {
 public:
  PartialPerm() = default;  // order 0

  /// Validating constructor: nonzero values must be distinct and in 1..n.
  explicit PartialPerm(std::vector<int> image);

  /// Trusted constructor for enumeration hot paths.
  static PartialPerm unchecked(std::vector<int> image);

  static PartialPerm identity(int n);

  /// Parse whitespace-separated one-line tokens, "X" (or "x") for gaps.
  static PartialPerm parse(std::string_view one_line);

  int order() const { return static_cast<int>(image_.size()); }

  /// Number of gaps (zero rows = zero columns).
  int gaps() const;

  /// Image of i, 0 if row i is a gap.
  int image_of(int i) const { return image_[i - 1]; }

  /// Row mapped onto column j, 0 if column j is empty.
  int preimage_of(int j) const;

  bool entry(int i, int j) const { return image_[i - 1] == j; }

  const std::vector<int>& image() const { return image_; }

  /// One-line notation, e.g. "6 1 X 4 9 2 3 X 5".
  std::string str() const;

  std::strong_ordering operator<=>(const PartialPerm&) const = default;

 private:
  std::vector<int> image_;
};

/// One cycle of a cycle notation. A partial cycle's written sequence
/// implicitly ends at the gap marker X.
struct Cycle {
  std::vector<int> elems;
  bool partial = false;

  int last() const { return elems.back(); }
  int smallest() const;
  std::string str() const;
  bool operator==(const Cycle&) const = default;
};

/// A cycle notation: a sequence of full and partial cycles whose
/// elements partition 1..n.
class CycleForm {
 public:
  std::vector<Cycle> cycles;

  CycleForm() = default;
  explicit CycleForm(std::vector<Cycle> cs) : cycles(std::move(cs)) {}

  /// Parse "(2 1 6)(7 3 X)(4)" style text.
  static CycleForm parse(std::string_view text);

  std::string str() const;

  /// Rewrites to the canonical presentation (partial cycles sorted by
  /// starting element, full cycles rotated smallest-first and sorted),
  /// without changing the underlying mapping.
  CycleForm canonical() const;

  /// Same underlying mapping and full/partial split, presentation ignored.
  bool equivalent(const CycleForm& o) const { return canonical() == o.canonical(); }

  bool operator==(const CycleForm&) const = default;
};

/// Decompose into cycles by tracing images. Partial cycles start at the
/// element with no pre-image and end at the element whose image is a
/// gap. Output order is canonical: partial cycles sorted by starting
/// element, then full cycles written smallest-first, sorted by smallest.
CycleForm to_cycle_form(const PartialPerm& p);

/// Inverse of to_cycle_form; every element of 1..n must appear once.
PartialPerm from_cycle_form(const CycleForm& c, int n);

/// The standard presentation: partial cycles first, sorted by increasing
/// last element; then full cycles rotated so the smallest element is
/// last, sorted by those last elements.
CycleForm standard_form(const CycleForm& c);

/// No proper leading principal submatrix is a permutation matrix.
/// Requires order >= 1.
bool is_connected(const PartialPerm& p);

/// Every full cycle zig-zags from its smallest element and every
/// partial cycle zig-zags from its canonical starting element.
bool is_cycle_up_down(const PartialPerm& p);

}  // namespace pperm
