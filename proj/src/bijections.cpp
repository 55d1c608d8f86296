#include "pperm/bijections.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace pperm {

CycleForm fundamental(const std::vector<int>& word) {
  // right-to-left minima close the segments
  std::vector<char> is_min(word.size(), 0);
  int mn = std::numeric_limits<int>::max();
  for (std::size_t i = word.size(); i-- > 0;) {
    if (word[i] < mn) {
      is_min[i] = 1;
      mn = word[i];
    }
  }
  CycleForm cf;
  Cycle cur;
  for (std::size_t i = 0; i < word.size(); ++i) {
    cur.elems.push_back(word[i]);
    if (is_min[i]) {
      cf.cycles.push_back(std::move(cur));
      cur = Cycle{};
    }
  }
  return cf;
}

std::vector<int> fundamental_inverse(const CycleForm& c) {
  std::vector<Cycle> cycles;
  for (const auto& cy : c.cycles) {
    if (cy.partial) throw std::invalid_argument("fundamental_inverse: partial cycle present");
    Cycle r = cy;
    auto mn = std::min_element(r.elems.begin(), r.elems.end());
    std::rotate(r.elems.begin(), mn + 1, r.elems.end());
    cycles.push_back(std::move(r));
  }
  std::sort(cycles.begin(), cycles.end(),
            [](const Cycle& a, const Cycle& b) { return a.last() < b.last(); });
  std::vector<int> word;
  for (const auto& cy : cycles) word.insert(word.end(), cy.elems.begin(), cy.elems.end());
  return word;
}

namespace {

std::vector<int> missing_values(const PartialPerm& p) {
  const int n = p.order();
  std::vector<char> present(n + 1, 0);
  for (int i = 1; i <= n; ++i)
    if (int v = p.image_of(i)) present[v] = 1;
  std::vector<int> out;
  for (int v = 1; v <= n; ++v)
    if (!present[v]) out.push_back(v);
  return out;
}

std::vector<std::vector<int>> gap_segments(const PartialPerm& p) {
  std::vector<std::vector<int>> segs(1);
  for (int i = 1; i <= p.order(); ++i) {
    int v = p.image_of(i);
    if (v == 0)
      segs.emplace_back();
    else
      segs.back().push_back(v);
  }
  return segs;
}

// "delete the last number of each partial cycle and erase parentheses",
// assuming the cycles are already in standard form
PartialPerm phi_inverse_of(const CycleForm& cf) {
  std::vector<int> image;
  int n = 0;
  for (const auto& c : cf.cycles) n += static_cast<int>(c.elems.size());
  image.reserve(n);
  for (const auto& c : cf.cycles) {
    if (c.partial) {
      image.insert(image.end(), c.elems.begin(), c.elems.end() - 1);
      image.push_back(0);
    } else {
      image.insert(image.end(), c.elems.begin(), c.elems.end());
    }
  }
  return PartialPerm(std::move(image));
}

}  // namespace

PartialPerm gen_fundamental(const PartialPerm& p) {
  auto segs = gap_segments(p);
  auto miss = missing_values(p);
  CycleForm cf;
  for (std::size_t m = 0; m + 1 < segs.size(); ++m) {
    Cycle c;
    c.partial = true;
    c.elems = segs[m];
    c.elems.push_back(miss[m]);
    cf.cycles.push_back(std::move(c));
  }
  CycleForm tail = fundamental(segs.back());
  cf.cycles.insert(cf.cycles.end(), tail.cycles.begin(), tail.cycles.end());
  return from_cycle_form(cf, p.order());
}

PartialPerm gen_fundamental_inverse(const PartialPerm& p) {
  return phi_inverse_of(standard_form(to_cycle_form(p)));
}

PartialPerm des_exc_map(const PartialPerm& p) {
  CycleForm cf = to_cycle_form(p);
  for (auto& c : cf.cycles) std::reverse(c.elems.begin(), c.elems.end());
  return phi_inverse_of(standard_form(cf));
}

PartialPerm rotate180(const PartialPerm& p) {
  const int n = p.order();
  std::vector<int> image(n, 0);
  for (int i = 1; i <= n; ++i)
    if (int j = p.image_of(i)) image[n - i] = n + 1 - j;
  return PartialPerm::unchecked(std::move(image));
}

PartialPerm reflect_antidiagonal(const PartialPerm& p) {
  const int n = p.order();
  std::vector<int> image(n, 0);
  for (int i = 1; i <= n; ++i)
    if (int j = p.image_of(i)) image[n - j] = n + 1 - i;
  return PartialPerm::unchecked(std::move(image));
}

std::vector<int> local_complement(const std::vector<int>& values,
                                  const std::vector<int>& reference_set) {
  if (reference_set.empty()) throw std::invalid_argument("empty reference set");
  if (!std::is_sorted(reference_set.begin(), reference_set.end()) ||
      std::adjacent_find(reference_set.begin(), reference_set.end()) != reference_set.end())
    throw std::invalid_argument("reference set must be strictly increasing");
  std::vector<int> out;
  out.reserve(values.size());
  for (int v : values) {
    auto it = std::lower_bound(reference_set.begin(), reference_set.end(), v);
    if (it == reference_set.end() || *it != v)
      throw std::invalid_argument("value " + std::to_string(v) + " not in reference set");
    std::size_t idx = static_cast<std::size_t>(it - reference_set.begin());
    out.push_back(reference_set[reference_set.size() - 1 - idx]);
  }
  return out;
}

PartialPerm append_gap(const PartialPerm& p) {
  std::vector<int> im = p.image();
  im.push_back(0);
  return PartialPerm::unchecked(std::move(im));
}

PartialPerm append_fixed(const PartialPerm& p) {
  std::vector<int> im = p.image();
  im.push_back(p.order() + 1);
  return PartialPerm::unchecked(std::move(im));
}

namespace {

// Removes the cycle matching c (as traced by to_cycle_form) from cf.
Cycle take_partial_cycle(std::vector<Cycle>& cycles, const Cycle& c) {
  for (auto it = cycles.begin(); it != cycles.end(); ++it) {
    if (it->partial && it->elems == c.elems) {
      Cycle out = *it;
      cycles.erase(it);
      return out;
    }
  }
  throw std::invalid_argument("not a partial cycle of the permutation: " + c.str());
}

PartialPerm insert_largest(const PartialPerm& p, const Cycle& c, bool close_into_full) {
  const int n = p.order() + 1;
  CycleForm cf = to_cycle_form(p);
  Cycle target = take_partial_cycle(cf.cycles, c);

  std::vector<int> ref = target.elems;
  ref.push_back(n);
  std::sort(ref.begin(), ref.end());

  std::vector<int> cycle{n};
  cycle.insert(cycle.end(), target.elems.begin(), target.elems.end());
  Cycle modified;
  modified.elems = local_complement(cycle, ref);
  modified.partial = !close_into_full;
  cf.cycles.push_back(std::move(modified));
  return from_cycle_form(cf, n);
}

int position_of(const std::vector<int>& v, int x) {
  auto it = std::find(v.begin(), v.end(), x);
  if (it == v.end()) throw std::logic_error("element not found");
  return static_cast<int>(it - v.begin());
}

}  // namespace

PartialPerm cud_insert_partial(const PartialPerm& p, const Cycle& c) {
  return insert_largest(p, c, false);
}

PartialPerm cud_insert_full(const PartialPerm& p, const Cycle& c) {
  return insert_largest(p, c, true);
}

PartialPerm cud_merge(const PartialPerm& p, const Cycle& c1, const Cycle& c2) {
  if (c1.elems == c2.elems) throw std::invalid_argument("cud_merge: cycles must be distinct");
  if (c1.smallest() <= c2.smallest())
    throw std::invalid_argument("cud_merge: requires min(c1) > min(c2)");
  const int n = p.order() + 1;
  CycleForm cf = to_cycle_form(p);
  Cycle a = take_partial_cycle(cf.cycles, c1);
  Cycle b = take_partial_cycle(cf.cycles, c2);

  std::vector<int> tail{n};
  tail.insert(tail.end(), b.elems.begin(), b.elems.end());
  const std::size_t r = a.elems.size();
  if (r >= 2 && a.elems[r - 2] < a.elems[r - 1]) {
    std::vector<int> ref = tail;
    std::sort(ref.begin(), ref.end());
    tail = local_complement(tail, ref);
  }
  Cycle merged;
  merged.partial = true;
  merged.elems = a.elems;
  merged.elems.insert(merged.elems.end(), tail.begin(), tail.end());
  cf.cycles.push_back(std::move(merged));
  return from_cycle_form(cf, n);
}

int cud_case(const PartialPerm& p) {
  if (!is_cycle_up_down(p)) throw std::invalid_argument("cud_case: not cycle-up-down");
  const int n = p.order();
  CycleForm cf = to_cycle_form(p);
  for (const auto& c : cf.cycles) {
    if (std::find(c.elems.begin(), c.elems.end(), n) == c.elems.end()) continue;
    if (c.elems.size() == 1) return c.partial ? 1 : 2;
    if (!c.partial) return 4;
    return c.elems.front() == c.smallest() ? 3 : 5;
  }
  throw std::logic_error("largest element not found in any cycle");
}

CudSplit cud_insert_partial_inverse(const PartialPerm& p) {
  const int n = p.order();
  if (cud_case(p) != 3) throw std::invalid_argument("inverse expects a case-3 permutation");
  CycleForm cf = to_cycle_form(p);
  CudSplit out;
  std::vector<Cycle> rest;
  for (const auto& c : cf.cycles) {
    if (c.partial && std::find(c.elems.begin(), c.elems.end(), n) != c.elems.end()) {
      std::vector<int> ref = c.elems;
      std::sort(ref.begin(), ref.end());
      std::vector<int> undone = local_complement(c.elems, ref);
      if (undone.front() != n) throw std::logic_error("case-3 inverse: expected leading n");
      out.c.partial = true;
      out.c.elems.assign(undone.begin() + 1, undone.end());
      rest.push_back(out.c);
    } else {
      rest.push_back(c);
    }
  }
  out.rho = from_cycle_form(CycleForm(std::move(rest)), n - 1);
  return out;
}

CudSplit cud_insert_full_inverse(const PartialPerm& p) {
  const int n = p.order();
  if (cud_case(p) != 4) throw std::invalid_argument("inverse expects a case-4 permutation");
  CycleForm cf = to_cycle_form(p);  // full cycles come out smallest-first
  CudSplit out;
  std::vector<Cycle> rest;
  for (const auto& c : cf.cycles) {
    if (!c.partial && std::find(c.elems.begin(), c.elems.end(), n) != c.elems.end()) {
      std::vector<int> ref = c.elems;
      std::sort(ref.begin(), ref.end());
      std::vector<int> undone = local_complement(c.elems, ref);
      if (undone.front() != n) throw std::logic_error("case-4 inverse: expected leading n");
      out.c.partial = true;
      out.c.elems.assign(undone.begin() + 1, undone.end());
      rest.push_back(out.c);
    } else {
      rest.push_back(c);
    }
  }
  out.rho = from_cycle_form(CycleForm(std::move(rest)), n - 1);
  return out;
}

CudSplit2 cud_merge_inverse(const PartialPerm& p) {
  const int n = p.order();
  if (cud_case(p) != 5) throw std::invalid_argument("inverse expects a case-5 permutation");
  CycleForm cf = to_cycle_form(p);
  CudSplit2 out;
  std::vector<Cycle> rest;
  for (const auto& c : cf.cycles) {
    if (c.partial && std::find(c.elems.begin(), c.elems.end(), n) != c.elems.end()) {
      int pos_n = position_of(c.elems, n);
      int pos_m = position_of(c.elems, c.smallest());
      out.c1.partial = out.c2.partial = true;
      if (pos_n < pos_m) {
        // no complement was applied: n separates the two originals
        out.c1.elems.assign(c.elems.begin(), c.elems.begin() + pos_n);
        out.c2.elems.assign(c.elems.begin() + pos_n + 1, c.elems.end());
      } else {
        std::vector<int> tail(c.elems.begin() + pos_m, c.elems.end());
        std::vector<int> ref = tail;
        std::sort(ref.begin(), ref.end());
        std::vector<int> undone = local_complement(tail, ref);
        if (undone.front() != n) throw std::logic_error("case-5 inverse: expected leading n");
        out.c1.elems.assign(c.elems.begin(), c.elems.begin() + pos_m);
        out.c2.elems.assign(undone.begin() + 1, undone.end());
      }
      rest.push_back(out.c1);
      rest.push_back(out.c2);
    } else {
      rest.push_back(c);
    }
  }
  out.rho = from_cycle_form(CycleForm(std::move(rest)), n - 1);
  return out;
}

}  // namespace pperm
