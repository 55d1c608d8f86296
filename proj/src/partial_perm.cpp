#include "pperm/partial_perm.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace pperm {

namespace {

void validate_image(const std::vector<int>& image) {
  const int n = static_cast<int>(image.size());
  std::vector<char> seen(n + 1, 0);
  for (int v : image) {
    if (v == 0) continue;
    if (v < 1 || v > n)
      throw std::invalid_argument("value " + std::to_string(v) + " out of range 1.." +
                                  std::to_string(n));
    if (seen[v]) throw std::invalid_argument("duplicate value " + std::to_string(v));
    seen[v] = 1;
  }
}

}  // namespace

PartialPerm::PartialPerm(std::vector<int> image) : image_(std::move(image)) {
  validate_image(image_);
}

PartialPerm PartialPerm::unchecked(std::vector<int> image) {
  PartialPerm p;
  p.image_ = std::move(image);
  return p;
}

PartialPerm PartialPerm::identity(int n) {
  std::vector<int> im(n);
  for (int i = 1; i <= n; ++i) im[i - 1] = i;
  return unchecked(std::move(im));
}

PartialPerm PartialPerm::parse(std::string_view one_line) {
  std::vector<int> im;
  std::istringstream in{std::string(one_line)};
  std::string tok;
  while (in >> tok) {
    if (tok == "X" || tok == "x") {
      im.push_back(0);
    } else {
      try {
        std::size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size() || v < 1) throw std::invalid_argument(tok);
        im.push_back(v);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad one-line token '" + tok + "'");
      }
    }
  }
  return PartialPerm(std::move(im));
}

int PartialPerm::gaps() const {
  int k = 0;
  for (int v : image_)
    if (v == 0) ++k;
  return k;
}

int PartialPerm::preimage_of(int j) const {
  for (int i = 1; i <= order(); ++i)
    if (image_[i - 1] == j) return i;
  return 0;
}

std::string PartialPerm::str() const {
  std::string s;
  for (int v : image_) {
    if (!s.empty()) s += ' ';
    s += v == 0 ? "X" : std::to_string(v);
  }
  return s;
}

int Cycle::smallest() const { return *std::min_element(elems.begin(), elems.end()); }

std::string Cycle::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(elems[i]);
  }
  if (partial) s += " X";
  s += ")";
  return s;
}

CycleForm CycleForm::parse(std::string_view text) {
  std::vector<Cycle> cs;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("expected '(' in cycle form");
    ++i;
    Cycle c;
    for (;;) {
      skip_ws();
      if (i >= text.size()) throw std::invalid_argument("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == 'X' || text[i] == 'x') {
        c.partial = true;
        ++i;
        skip_ws();
        if (i >= text.size() || text[i] != ')')
          throw std::invalid_argument("X must end a partial cycle");
        ++i;
        break;
      }
      int v = 0;
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("bad cycle token");
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + (text[i++] - '0');
      c.elems.push_back(v);
    }
    if (c.elems.empty()) throw std::invalid_argument("empty cycle");
    cs.push_back(std::move(c));
    skip_ws();
  }
  return CycleForm(std::move(cs));
}

std::string CycleForm::str() const {
  std::string s;
  for (const auto& c : cycles) s += c.str();
  return s.empty() ? "()" : s;
}

CycleForm CycleForm::canonical() const {
  std::vector<Cycle> partials, fulls;
  for (const auto& c : cycles) {
    if (c.partial) {
      partials.push_back(c);
    } else {
      // rotate smallest-first
      Cycle r = c;
      auto mn = std::min_element(r.elems.begin(), r.elems.end());
      std::rotate(r.elems.begin(), mn, r.elems.end());
      fulls.push_back(std::move(r));
    }
  }
  std::sort(partials.begin(), partials.end(),
            [](const Cycle& a, const Cycle& b) { return a.elems.front() < b.elems.front(); });
  std::sort(fulls.begin(), fulls.end(),
            [](const Cycle& a, const Cycle& b) { return a.elems.front() < b.elems.front(); });
  std::vector<Cycle> out = std::move(partials);
  out.insert(out.end(), fulls.begin(), fulls.end());
  return CycleForm(std::move(out));
}

CycleForm to_cycle_form(const PartialPerm& p) {
  const int n = p.order();
  std::vector<char> in_image(n + 1, 0);
  for (int i = 1; i <= n; ++i)
    if (p.image_of(i) != 0) in_image[p.image_of(i)] = 1;

  std::vector<char> used(n + 1, 0);
  std::vector<Cycle> partials, fulls;

  // Partial cycles: trace forward from each element with empty column.
  for (int start = 1; start <= n; ++start) {
    if (in_image[start]) continue;
    Cycle c;
    c.partial = true;
    int cur = start;
    while (cur != 0) {
      c.elems.push_back(cur);
      used[cur] = 1;
      cur = p.image_of(cur);
    }
    partials.push_back(std::move(c));
  }
  // Remaining elements sit on closed orbits.
  for (int start = 1; start <= n; ++start) {
    if (used[start]) continue;
    Cycle c;
    int cur = start;
    do {
      c.elems.push_back(cur);
      used[cur] = 1;
      cur = p.image_of(cur);
    } while (cur != start);
    fulls.push_back(std::move(c));
  }
  std::vector<Cycle> out = std::move(partials);
  out.insert(out.end(), fulls.begin(), fulls.end());
  return CycleForm(std::move(out));
}

PartialPerm from_cycle_form(const CycleForm& c, int n) {
  std::vector<int> im(n, 0);
  std::vector<char> seen(n + 1, 0);
  int count = 0;
  for (const auto& cyc : c.cycles) {
    if (cyc.elems.empty()) throw std::invalid_argument("empty cycle");
    for (int v : cyc.elems) {
      if (v < 1 || v > n) throw std::invalid_argument("cycle element out of range");
      if (seen[v]) throw std::invalid_argument("overlapping cycles");
      seen[v] = 1;
      ++count;
    }
    const auto& e = cyc.elems;
    for (std::size_t i = 0; i + 1 < e.size(); ++i) im[e[i] - 1] = e[i + 1];
    if (!cyc.partial) im[e.back() - 1] = e.front();
  }
  if (count != n) throw std::invalid_argument("cycle form must cover all of 1..n");
  return PartialPerm(std::move(im));
}

CycleForm standard_form(const CycleForm& c) {
  std::vector<Cycle> partials, fulls;
  for (const auto& cy : c.cycles) {
    if (cy.partial) {
      partials.push_back(cy);
    } else {
      Cycle r = cy;
      auto mn = std::min_element(r.elems.begin(), r.elems.end());
      // smallest element goes last
      std::rotate(r.elems.begin(), mn + 1 == r.elems.end() ? r.elems.begin() : mn + 1,
                  r.elems.end());
      fulls.push_back(std::move(r));
    }
  }
  auto by_last = [](const Cycle& a, const Cycle& b) { return a.last() < b.last(); };
  std::sort(partials.begin(), partials.end(), by_last);
  std::sort(fulls.begin(), fulls.end(), by_last);
  std::vector<Cycle> out = std::move(partials);
  out.insert(out.end(), fulls.begin(), fulls.end());
  return CycleForm(std::move(out));
}

bool is_connected(const PartialPerm& p) {
  const int n = p.order();
  if (n < 1) throw std::invalid_argument("is_connected requires order >= 1");
  // Leading i-block is a permutation iff rows 1..i are gap-free and
  // max(pi_1..pi_i) == i.
  int mx = 0;
  for (int i = 1; i < n; ++i) {
    int v = p.image_of(i);
    if (v == 0) return true;  // no later prefix can be a permutation
    mx = std::max(mx, v);
    if (mx == i) return false;
  }
  return true;
}

namespace {

bool zigzags(const std::vector<int>& a) {
  for (std::size_t m = 0; m + 1 < a.size(); ++m) {
    if (m % 2 == 0 ? a[m] >= a[m + 1] : a[m] <= a[m + 1]) return false;
  }
  return true;
}

}  // namespace

bool is_cycle_up_down(const PartialPerm& p) {
  CycleForm cf = to_cycle_form(p);
  for (const auto& c : cf.cycles) {
    // full cycles come out smallest-first; partial cycles start at
    // their forced starting element
    if (!zigzags(c.elems)) return false;
  }
  return true;
}

}  // namespace pperm
