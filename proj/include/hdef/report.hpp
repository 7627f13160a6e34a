#pragma once

// Pass/fail records produced by the verification suites.

#include <string>
#include <vector>

namespace hdef {

struct Check {
  std::string name;
  bool pass = false;
  std::string expected;
  std::string actual;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  std::vector<std::string> notes;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return !checks.empty();
  }
  void add(std::string name, bool pass, std::string expected = {}, std::string actual = {}) {
    checks.push_back({std::move(name), pass, std::move(expected), std::move(actual)});
  }
  void append(const SuiteReport& other, const std::string& prefix = {}) {
    for (const auto& c : other.checks) checks.push_back({prefix + c.name, c.pass, c.expected, c.actual});
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  }
};

}  // namespace hdef
