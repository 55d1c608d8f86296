#include "pperm/statistics.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <limits>
#include <map>
#include <stdexcept>
#include <thread>

#include "pperm/enumerate.hpp"

namespace pperm {

namespace {

std::vector<int> column_rows(const PartialPerm& p) {
  std::vector<int> row_of(p.order() + 1, 0);
  for (int i = 1; i <= p.order(); ++i)
    if (int j = p.image_of(i); j != 0) row_of[j] = i;
  return row_of;
}

// Leading i-block is a permutation iff rows 1..i are gap-free and the
// prefix maximum equals i.
std::vector<char> strong_prefix_flags(const PartialPerm& p) {
  const int n = p.order();
  std::vector<char> strong(n + 1, 0);
  int mx = 0;
  for (int i = 1; i <= n; ++i) {
    int v = p.image_of(i);
    if (v == 0) break;
    mx = std::max(mx, v);
    if (mx == i) strong[i] = 1;
  }
  return strong;
}

bool is_rlmin_entry(const std::vector<int>& row_of, int i, int j) {
  if (j == 1) return true;
  for (int c = 1; c < j; ++c)
    if (row_of[c] == 0 || row_of[c] >= i) return false;
  return true;
}

int word_des(const std::vector<int>& w) {
  int d = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) ++d;
  return d;
}

int word_rlmin(const std::vector<int>& w) {
  int count = 0, mn = std::numeric_limits<int>::max();
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (*it < mn) {
      ++count;
      mn = *it;
    }
  }
  return count;
}

}  // namespace

int stat_inv(const PartialPerm& p) {
  const int n = p.order();
  std::vector<int> row_of = column_rows(p);
  int inv = 0;
  for (int i = 1; i <= n; ++i) {
    const int ci = p.image_of(i);
    for (int j = 1; j <= n; ++j) {
      if (ci == j) continue;  // the 1 itself
      // deleted by a 1 to its left or above?
      if (ci != 0 && ci < j) continue;
      if (row_of[j] != 0 && row_of[j] < i) continue;
      // surviving zero counts only when its row or column carries a 1
      if (ci != 0 || row_of[j] != 0) ++inv;
    }
  }
  return inv;
}

int stat_des(const PartialPerm& p) {
  const int n = p.order();
  std::vector<char> present(n + 1, 0);
  for (int i = 1; i <= n; ++i)
    if (int v = p.image_of(i)) present[v] = 1;
  std::vector<int> missing;
  for (int v = 1; v <= n; ++v)
    if (!present[v]) missing.push_back(v);

  int des = 0;
  std::vector<int> segment;
  std::size_t seg_idx = 0;
  for (int i = 1; i <= n; ++i) {
    int v = p.image_of(i);
    if (v == 0) {
      segment.push_back(missing[seg_idx++]);
      des += word_des(segment);
      segment.clear();
    } else {
      segment.push_back(v);
    }
  }
  des += word_des(segment);
  return des;
}

StatBundle stat_core(const PartialPerm& p) {
  const int n = p.order();
  StatBundle b;
  std::vector<int> row_of = column_rows(p);
  std::vector<char> strong = strong_prefix_flags(p);

  for (int i = 1; i <= n; ++i) {
    int j = p.image_of(i);
    if (j == 0) continue;
    if (j == i) {
      ++b.fix;
      if (strong[i]) ++b.sfix;
    }
    if (j > i) ++b.exc;
    if (j >= i) ++b.wex;
    if (is_rlmin_entry(row_of, i, j)) ++b.rlmin;
  }

  CycleForm cf = to_cycle_form(p);
  for (const auto& c : cf.cycles) {
    if (c.partial) continue;
    ++b.cyc;
    if (c.elems.size() >= 2) ++b.cyc_ge2;
    int mx = *std::max_element(c.elems.begin(), c.elems.end());
    if (strong[mx]) ++b.scyc;
  }

  b.inv = stat_inv(p);
  b.des = stat_des(p);

  // star right-to-left minimum: classical rlmin of the word after the
  // last gap (0 when that word is empty)
  std::vector<int> tail;
  for (int i = 1; i <= n; ++i) {
    int v = p.image_of(i);
    if (v == 0)
      tail.clear();
    else
      tail.push_back(v);
  }
  b.rlmin_star = word_rlmin(tail);
  return b;
}

SetStatBundle stat_sets(const PartialPerm& p) {
  const int n = p.order();
  SetStatBundle s;
  std::vector<int> row_of = column_rows(p);
  std::vector<char> strong = strong_prefix_flags(p);

  for (int i = 1; i <= n; ++i) {
    int j = p.image_of(i);
    if (j == 0) continue;
    if (j == i) {
      s.Fix.push_back(i);
      if (strong[i]) s.Sfix.push_back(i);
    }
    if (is_rlmin_entry(row_of, i, j)) s.Rlmip.push_back(i);
  }
  for (int j = 1; j <= n; ++j)
    if (row_of[j] != 0 && row_of[j] < j) s.Excl.push_back(j);

  CycleForm cf = to_cycle_form(p);
  for (const auto& c : cf.cycles) {
    if (c.partial) continue;
    int mx = *std::max_element(c.elems.begin(), c.elems.end());
    s.Cyc.push_back(mx);
    if (c.elems.size() >= 2) s.Cyc_ge2.push_back(mx);
    if (strong[mx]) {
      s.Scyc.push_back(mx);
      if (c.elems.size() >= 2) s.Scyc_ge2.push_back(mx);
    }
  }
  std::sort(s.Cyc.begin(), s.Cyc.end());
  std::sort(s.Cyc_ge2.begin(), s.Cyc_ge2.end());
  std::sort(s.Scyc.begin(), s.Scyc.end());
  std::sort(s.Scyc_ge2.begin(), s.Scyc_ge2.end());

  for (int v : s.Scyc)
    if (v != n) s.connectivity.push_back(v);
  return s;
}

int scalar_stat_value(const StatBundle& b, ScalarStat s) {
  switch (s) {
    case ScalarStat::fix: return b.fix;
    case ScalarStat::cyc: return b.cyc;
    case ScalarStat::cyc_ge2: return b.cyc_ge2;
    case ScalarStat::inv: return b.inv;
    case ScalarStat::exc: return b.exc;
    case ScalarStat::wex: return b.wex;
    case ScalarStat::rlmin: return b.rlmin;
    case ScalarStat::rlmin_star: return b.rlmin_star;
    case ScalarStat::des: return b.des;
    case ScalarStat::sfix: return b.sfix;
    case ScalarStat::scyc: return b.scyc;
    case ScalarStat::scyc_ge2: return b.scyc_ge2();
  }
  throw std::logic_error("unknown scalar stat");
}

const std::vector<int>& set_stat_value(const SetStatBundle& b, SetStat s) {
  switch (s) {
    case SetStat::Fix: return b.Fix;
    case SetStat::Sfix: return b.Sfix;
    case SetStat::Cyc: return b.Cyc;
    case SetStat::Cyc_ge2: return b.Cyc_ge2;
    case SetStat::Scyc: return b.Scyc;
    case SetStat::Scyc_ge2: return b.Scyc_ge2;
    case SetStat::Excl: return b.Excl;
    case SetStat::Rlmip: return b.Rlmip;
    case SetStat::Conn: return b.connectivity;
  }
  throw std::logic_error("unknown set stat");
}

namespace {

const std::map<std::string, ScalarStat> kScalarNames = {
    {"fix", ScalarStat::fix},         {"cyc", ScalarStat::cyc},
    {"cyc2", ScalarStat::cyc_ge2},    {"cyc_ge2", ScalarStat::cyc_ge2},
    {"inv", ScalarStat::inv},         {"exc", ScalarStat::exc},
    {"wex", ScalarStat::wex},         {"rlmin", ScalarStat::rlmin},
    {"rlmin*", ScalarStat::rlmin_star}, {"rlmin_star", ScalarStat::rlmin_star},
    {"des", ScalarStat::des},         {"sfix", ScalarStat::sfix},
    {"scyc", ScalarStat::scyc},       {"scyc2", ScalarStat::scyc_ge2},
    {"scyc_ge2", ScalarStat::scyc_ge2}};

const std::map<std::string, SetStat> kSetNames = {
    {"Fix", SetStat::Fix},          {"Sfix", SetStat::Sfix},
    {"Cyc", SetStat::Cyc},          {"Cyc2", SetStat::Cyc_ge2},
    {"Cyc_ge2", SetStat::Cyc_ge2},  {"Scyc", SetStat::Scyc},
    {"Scyc2", SetStat::Scyc_ge2},   {"Scyc_ge2", SetStat::Scyc_ge2},
    {"Excl", SetStat::Excl},        {"Rlmip", SetStat::Rlmip},
    {"Conn", SetStat::Conn}};

std::string scalar_stat_name(ScalarStat s) {
  for (const auto& [k, v] : kScalarNames)
    if (v == s && k != "cyc2" && k != "rlmin*" && k != "scyc2") return k;
  return "?";
}

std::string set_stat_name(SetStat s) {
  for (const auto& [k, v] : kSetNames)
    if (v == s && k != "Cyc2" && k != "Scyc2") return k;
  return "?";
}

}  // namespace

std::vector<WeightTerm> parse_weight_spec(const std::string& spec) {
  std::vector<WeightTerm> out;
  std::size_t pos = 0;
  while (pos < spec.size()) {
    std::size_t comma = spec.find(',', pos);
    std::string item = spec.substr(pos, comma == std::string::npos ? comma : comma - pos);
    pos = comma == std::string::npos ? spec.size() : comma + 1;
    if (item.empty()) continue;
    std::size_t eq = item.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("weight term '" + item + "' lacks '='");
    std::string stat = item.substr(0, eq);
    std::string var = item.substr(eq + 1);
    if (stat.empty() || var.empty())
      throw std::invalid_argument("bad weight term '" + item + "'");
    if (std::isupper(static_cast<unsigned char>(stat[0]))) {
      auto it = kSetNames.find(stat);
      if (it == kSetNames.end())
        throw std::invalid_argument("unknown set statistic '" + stat + "'");
      out.push_back(WeightTerm::of(it->second, var));
    } else {
      auto it = kScalarNames.find(stat);
      if (it == kScalarNames.end())
        throw std::invalid_argument("unknown statistic '" + stat + "'");
      out.push_back(WeightTerm::of(it->second, Variable::scalar(var)));
    }
  }
  return out;
}

std::string weight_spec_str(const std::vector<WeightTerm>& weights) {
  std::string s;
  for (const auto& w : weights) {
    if (!s.empty()) s += ",";
    if (w.scalar)
      s += scalar_stat_name(*w.scalar) + "=" + w.var.str();
    else
      s += set_stat_name(*w.set) + "=" + w.family;
  }
  return s;
}

bool filter_accepts(ClassFilter f, const PartialPerm& p) {
  switch (f) {
    case ClassFilter::All: return true;
    case ClassFilter::Connected: return is_connected(p);
    case ClassFilter::CycleUpDown: return is_cycle_up_down(p);
    case ClassFilter::ConnectedCycleUpDown:
      return is_cycle_up_down(p) && is_connected(p);
  }
  return false;
}

namespace {

std::atomic<int> g_budget{9};

int resolve_workers(int workers) {
  if (workers > 0) return workers;
  if (const char* env = std::getenv("PARTPERM_WORKERS")) {
    int w = std::atoi(env);
    if (w >= 1) return w;
  }
  return 1;
}

MultiPoly weight_monomial(const PartialPerm& p, const std::vector<WeightTerm>& weights,
                          bool need_scalar, bool need_sets) {
  StatBundle b;
  SetStatBundle s;
  if (need_scalar) b = stat_core(p);
  if (need_sets) s = stat_sets(p);
  Monomial m;
  for (const auto& w : weights) {
    if (w.scalar) {
      m.push(w.var, scalar_stat_value(b, *w.scalar));
    } else {
      for (int i : set_stat_value(s, *w.set)) m = m.times(Monomial::of(Variable::indexed(w.family, i)));
    }
  }
  MultiPoly out;
  out.add_term(m, 1);
  return out;
}

}  // namespace

int enumeration_budget() { return g_budget.load(); }
void set_enumeration_budget(int n) { g_budget.store(n); }

MultiPoly generating_function(int n, int k, const std::vector<WeightTerm>& weights,
                              ClassFilter filter, int workers) {
  if (n > enumeration_budget())
    throw std::invalid_argument("order " + std::to_string(n) + " exceeds enumeration budget " +
                                std::to_string(enumeration_budget()));
  bool need_scalar = false, need_sets = false;
  for (const auto& w : weights) (w.scalar ? need_scalar : need_sets) = true;

  workers = resolve_workers(workers);
  auto block_sum = [&](int first) {
    MultiPoly acc;
    for_each_partial_perm_first(n, k, first, [&](const PartialPerm& p) {
      if (!filter_accepts(filter, p)) return;
      acc += weight_monomial(p, weights, need_scalar, need_sets);
    });
    return acc;
  };

  if (n == 0) {
    MultiPoly acc;
    for_each_partial_perm(n, k, [&](const PartialPerm& p) {
      if (filter_accepts(filter, p)) acc += weight_monomial(p, weights, need_scalar, need_sets);
    });
    return acc;
  }

  // blocks: leading value 1..n, then leading gap
  std::vector<int> blocks;
  for (int v = 1; v <= n; ++v) blocks.push_back(v);
  blocks.push_back(0);

  if (workers <= 1) {
    MultiPoly acc;
    for (int first : blocks) acc += block_sum(first);
    return acc;
  }

  std::vector<MultiPoly> partial(blocks.size());
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (;;) {
      std::size_t idx = next.fetch_add(1);
      if (idx >= blocks.size()) return;
      partial[idx] = block_sum(blocks[idx]);
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < std::min<int>(workers, static_cast<int>(blocks.size())); ++w)
    pool.emplace_back(run);
  for (auto& t : pool) t.join();
  MultiPoly acc;
  for (const auto& part : partial) acc += part;
  return acc;
}

Int class_count(int n, int k, ClassFilter filter, int workers) {
  MultiPoly gf = generating_function(n, k, {}, filter, workers);
  return gf.coefficient(Monomial::unit());
}

}  // namespace pperm
