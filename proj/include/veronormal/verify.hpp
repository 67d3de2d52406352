#pragma once

// The verification corpus: the acceptance criteria plus golden-file checks.

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace veronormal {

enum class Scope { Fast, Full };

Scope parse_scope(const std::string& s);  // "fast" | "full"; MathError otherwise

struct CheckResult {
  std::string id;    // "C1".."C9", or "golden:<file>"
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  // Wall-clock budget in seconds; 0 means none. Exceeding it fails the check.
  double budget = 0;
};

struct Criterion {
  std::string id;
  std::string name;
  double budget;
  std::function<CheckResult(Scope)> run;
};

const std::vector<Criterion>& acceptance_criteria();

// Runs one criterion with timing, catching exceptions as failures.
CheckResult run_criterion(const Criterion& c, Scope scope);

// Golden files pinned in the repository.
std::string default_golden_dir();
std::vector<std::string> golden_file_names();
nlohmann::json golden_content(const std::string& file_name);
std::vector<CheckResult> check_golden_dir(const std::string& dir);
void write_golden_dir(const std::string& dir);

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
  nlohmann::json to_json(const std::string& scope) const;
};

// Criteria 1-9 followed by the golden files. `on_check` is invoked after each
// check (for progress output).
VerifyReport run_verify(Scope scope, const std::string& golden_dir,
                        const std::function<void(const CheckResult&)>& on_check = {});

// Note carried in every report: the slope semistability of the normal bundle
// itself is not decided; the dual-identity, Grauert-Mulich and K-tower
// criteria check necessary conditions only.
extern const char* const kSemistabilityNote;

}  // namespace veronormal
