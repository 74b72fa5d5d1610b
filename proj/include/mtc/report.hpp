#pragma once

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

namespace mtc {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;  // witness on failure, value summary on success
};

/// Ordered list of named pass/fail checks.
struct Report {
  std::string title;
  std::vector<CheckResult> checks;

  void add(std::string name, bool passed, std::string detail = {}) {
    checks.push_back({std::move(name), passed, std::move(detail)});
  }

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
  }

  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }

  friend std::ostream& operator<<(std::ostream& os, const Report& r) {
    if (!r.title.empty()) os << r.title << "\n";
    for (const auto& c : r.checks) {
      os << (c.passed ? "  PASS  " : "  FAIL  ") << c.name;
      if (!c.detail.empty()) os << "  [" << c.detail << "]";
      os << "\n";
    }
    os << (r.passed() ? "result: pass" : "result: FAIL") << "\n";
    return os;
  }
};

using ValidationReport = Report;

}  // namespace mtc
