#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace delpezzo {

struct Check {
  std::string id;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct Report {
  std::string suite;
  std::vector<Check> checks;

  void add(std::string id, std::string expected, std::string computed, bool pass) {
    checks.push_back({std::move(id), std::move(expected), std::move(computed), pass});
  }
  /// Pass iff expected and computed render identically.
  void expect_equal(std::string id, std::string expected, std::string computed) {
    const bool pass = expected == computed;
    add(std::move(id), std::move(expected), std::move(computed), pass);
  }
  void append(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }

  std::size_t pass_count() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.pass; }));
  }
  bool passed() const { return pass_count() == checks.size(); }
};

inline std::string render_text(const Report& r) {
  std::string out;
  for (const auto& c : r.checks) {
    out += c.pass ? "[PASS] " : "[FAIL] ";
    out += c.id + "\n  expected: " + c.expected + "\n  computed: " + c.computed + "\n";
  }
  out += r.suite + ": " + std::to_string(r.pass_count()) + "/" + std::to_string(r.checks.size()) + " passed\n";
  return out;
}

}  // namespace delpezzo
