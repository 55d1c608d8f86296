#include "pperm/catalan.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace pperm {

const MultiPoly& CatalanMatrix::at(int n, int k) const {
  if (n < 0 || n > order() || k < 0 || k > n)
    throw std::out_of_range("CatalanMatrix::at(" + std::to_string(n) + "," + std::to_string(k) +
                            ")");
  return rows_[n][k];
}

MultiPoly CatalanMatrix::at_or_zero(int n, int k) const {
  if (n < 0 || n > order() || k < 0 || k > n) return MultiPoly();
  return rows_[n][k];
}

std::string CatalanMatrix::json() const {
  nlohmann::json j;
  j["seeds"] = source_;
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [name, val] : params_) params[name] = val.str();
  j["params"] = params;
  j["N"] = order();
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : rows_) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& e : row) r.push_back(e.str());
    rows.push_back(r);
  }
  j["rows"] = rows;
  return j.dump();
}

std::string CatalanMatrix::csv() const {
  std::ostringstream out;
  out << "n,k,value\n";
  for (int n = 0; n <= order(); ++n) {
    for (int k = 0; k <= n; ++k) {
      std::string v = rows_[n][k].str();
      bool quote = v.find(',') != std::string::npos || v.find('"') != std::string::npos;
      if (quote) {
        std::string esc;
        for (char c : v) {
          if (c == '"') esc += '"';
          esc += c;
        }
        v = "\"" + esc + "\"";
      }
      out << n << ',' << k << ',' << v << '\n';
    }
  }
  return out.str();
}

namespace {

std::vector<std::vector<MultiPoly>> run_recurrence(
    int N, const std::function<MultiPoly(int, int)>& s, const std::function<MultiPoly(int, int)>& t,
    const std::string& name) {
  if (N < 0) throw std::invalid_argument("matrix order must be >= 0");
  // memoized seed values over the evaluated range; zero t is rejected
  std::vector<std::vector<MultiPoly>> sv(N + 1), tv(N + 1);
  for (int i = 1; i <= N; ++i) {
    sv[i].resize(i);
    for (int l = 0; l < i; ++l) sv[i][l] = s(i, l);
    tv[i].assign(i, MultiPoly());
    for (int l = 1; l <= i - 1; ++l) {
      tv[i][l] = t(i, l);
      if (tv[i][l].is_zero())
        throw std::invalid_argument("seed family '" + name + "': t(" + std::to_string(l) +
                                    ") is zero in the evaluation range");
    }
  }

  std::vector<std::vector<MultiPoly>> rows(N + 1);
  rows[0] = {MultiPoly(1)};
  for (int n = 1; n <= N; ++n) {
    rows[n].resize(n + 1);
    for (int k = 0; k <= n; ++k) {
      MultiPoly e;
      if (k > 0) e += rows[n - 1][k - 1];
      if (k <= n - 1) e += sv[n][k] * rows[n - 1][k];
      if (k + 1 <= n - 1) e += tv[n][k + 1] * rows[n - 1][k + 1];
      rows[n][k] = std::move(e);
    }
  }
  return rows;
}

}  // namespace

CatalanMatrix build_catalan_matrix(const SeedSpec& seeds, int N) {
  auto rows = run_recurrence(
      N, [&](int, int l) { return seeds.s(l); }, [&](int, int l) { return seeds.t(l); },
      seeds.name);
  return CatalanMatrix(seeds.name, seeds.params, std::move(rows));
}

CatalanMatrix build_extended_matrix(const ExtendedSeedSpec& seeds, int N) {
  auto rows = run_recurrence(N, seeds.s, seeds.t, seeds.name);
  return CatalanMatrix(seeds.name, seeds.params, std::move(rows));
}

namespace {

bool check_recurrence(const CatalanMatrix& m, const std::function<MultiPoly(int, int)>& s,
                      const std::function<MultiPoly(int, int)>& t) {
  for (int n = 1; n <= m.order(); ++n) {
    for (int k = 0; k <= n; ++k) {
      MultiPoly expect = m.at_or_zero(n - 1, k - 1) + s(n, k) * m.at_or_zero(n - 1, k) +
                         t(n, k + 1) * m.at_or_zero(n - 1, k + 1);
      if (!(expect == m.at(n, k))) return false;
    }
  }
  return true;
}

}  // namespace

bool satisfies_recurrence(const CatalanMatrix& m, const SeedSpec& seeds) {
  return check_recurrence(
      m, [&](int, int l) { return seeds.s(l); }, [&](int, int l) { return seeds.t(l); });
}

bool satisfies_recurrence(const CatalanMatrix& m, const ExtendedSeedSpec& seeds) {
  return check_recurrence(m, seeds.s, seeds.t);
}

}  // namespace pperm
