#include "pperm/enumerate.hpp"

#include <stdexcept>

#include "pperm/qanalog.hpp"

namespace pperm {

namespace {

struct Enumerator {
  int n, k;
  std::vector<int> image;
  std::vector<char> used;
  int gaps_left;
  const PermVisitor* visit;

  void run(int pos) {
    if (gaps_left > n - pos) return;
    if (pos == n) {
      (*visit)(PartialPerm::unchecked(image));
      return;
    }
    const int slots_after = n - pos - 1;
    if (gaps_left <= slots_after) {
      for (int v = 1; v <= n; ++v) {
        if (used[v]) continue;
        used[v] = 1;
        image[pos] = v;
        run(pos + 1);
        used[v] = 0;
      }
    }
    if (gaps_left > 0) {
      image[pos] = 0;
      --gaps_left;
      run(pos + 1);
      ++gaps_left;
    }
  }
};

}  // namespace

void for_each_partial_perm(int n, int k, const PermVisitor& visit) {
  if (k < 0 || k > n) throw std::invalid_argument("for_each_partial_perm: need 0 <= k <= n");
  Enumerator e{n, k, std::vector<int>(n, 0), std::vector<char>(n + 1, 0), k, &visit};
  e.run(0);
}

void for_each_partial_perm_first(int n, int k, int first, const PermVisitor& visit) {
  if (k < 0 || k > n) throw std::invalid_argument("need 0 <= k <= n");
  if (n == 0) {
    if (first == 0 && k == 0) visit(PartialPerm());  // degenerate: single empty perm
    return;
  }
  Enumerator e{n, k, std::vector<int>(n, 0), std::vector<char>(n + 1, 0), k, &visit};
  if (first == 0) {
    if (k == 0) return;
    e.image[0] = 0;
    e.gaps_left = k - 1;
    e.run(1);
  } else {
    if (first < 1 || first > n) throw std::invalid_argument("bad first token");
    e.image[0] = first;
    e.used[first] = 1;
    e.run(1);
  }
}

Int partial_perm_count(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int b = binomial(n, k);
  return b * b * factorial(n - k);
}

}  // namespace pperm
