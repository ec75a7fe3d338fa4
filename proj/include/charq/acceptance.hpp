#pragma once
#include <functional>
#include <string>
#include <vector>

#include "charq/mgroup.hpp"

namespace charq {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<Check> checks;
  double seconds = 0;
  bool pass() const;
  /// "PASS 4 explicit specializations (4/4 checks, 9.1 s)" or the first failing check.
  std::string line() const;
};

struct AcceptanceOptions {
  u64 cap = default_closure_cap();
  unsigned threads = 1;
  bool chain_fallback = true;
  std::vector<int> only;  // empty: all ten
  std::function<void(const CriterionResult&)> on_result;
};

/// Exact identities of the symbolic Burau data.
std::vector<Check> symbolic_checks();
/// Adjoint-trace identities and the traces of x y x^-2 y^2 and x^-1 y x^2 y^2.
std::vector<Check> trace_checks();

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts);

}  // namespace charq
