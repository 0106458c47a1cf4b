#pragma once

// The reproduction suite: twelve end-to-end checks shared by the
// `reproduce` subcommand and the acceptance test binary.

#include <string>
#include <vector>

namespace twist8::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string computed;
  std::string expected;
  std::vector<std::string> details;
  double seconds = 0.0;
};

struct CriterionInfo {
  int id;
  std::string name;
  std::vector<std::string> aliases;
};

const std::vector<CriterionInfo>& criteria();

/// Accepts "all", a number 1..12, or an alias such as "P73" or "tables".
/// Throws std::invalid_argument for anything else.
std::vector<int> resolve_suite(const std::string& suite);

CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_suite(const std::string& suite);

/// "PASS [3] P73 end-to-end: computed ... | expected ..."
std::string summary_line(const CriterionResult& r);

}  // namespace twist8::acceptance
