#pragma once

#include <cstddef>
#include <deque>
#include <string>

namespace cevian {

struct CheckResult {
  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool passed() const { return checks > 0 && failures == 0; }

  void record(bool ok, const std::string& context) {
    ++checks;
    if (!ok) {
      if (failures == 0) {
        first_failure = context;
      }
      ++failures;
    }
  }
};

/// Outcome of one verification suite: one entry per property family.
struct SuiteReport {
  std::string suite;
  std::deque<CheckResult> results;  // deque: add() keeps earlier references valid

  bool passed() const {
    if (results.empty()) {
      return false;
    }
    for (const auto& r : results) {
      if (!r.passed()) {
        return false;
      }
    }
    return true;
  }

  CheckResult& add(std::string name) {
    CheckResult r;
    r.name = std::move(name);
    results.push_back(std::move(r));
    return results.back();
  }
};

}  // namespace cevian
