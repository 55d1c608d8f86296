#pragma once

#include <map>
#include <string>
#include <vector>

#include "pperm/polynomial.hpp"

namespace pperm::verify {

struct Report {
  std::string id;
  std::string description;
  int n_max = 0;
  bool pass = false;
  std::string detail;  // first counterexample, or notes
  double seconds = 0.0;
};

/// Registered check ids, in suite order.
std::vector<std::string> check_ids();

bool is_check(const std::string& id);

/// Per-check default budget. For enumeration checks this bounds the
/// enumerated order; for series checks it is the truncation order.
int default_budget(const std::string& id);

std::map<std::string, int> default_budgets();

/// Run one identity check; n_max = -1 uses the default budget.
/// Unknown ids throw.
Report run(const std::string& id, int n_max = -1);

/// Run the checks named in the budget map (suite order); an empty map
/// runs nothing.
std::vector<Report> run_all(const std::map<std::string, int>& budgets);

/// Euler (zigzag) numbers 1, 1, 1, 2, 5, 16, 61, 272, ... computed by
/// the boustrophedon recurrence; the independent oracle for the
/// cycle-up-down counting checks.
Int euler_number(int n);

}  // namespace pperm::verify
