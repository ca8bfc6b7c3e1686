#pragma once

#include <iosfwd>
#include <sstream>
#include <string>
#include <vector>

#include "cgt/common.hpp"

namespace cgt {

struct AssertionResult {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct CaseResult {
  std::string id;
  std::string status = "pass";  // pass | fail | skipped | inconclusive
  std::string note;
  std::vector<AssertionResult> asserts;
  u64 seed = 0;
  double wall_ms = 0;

  void expect(const std::string& name, const std::string& expected,
              const std::string& computed) {
    AssertionResult a{name, expected, computed, expected == computed};
    if (!a.pass) status = "fail";
    asserts.push_back(std::move(a));
  }
  void expect_u64(const std::string& name, u64 expected, u64 computed) {
    expect(name, std::to_string(expected), std::to_string(computed));
  }
  void expect_true(const std::string& name, bool computed) {
    expect(name, "true", computed ? "true" : "false");
  }
  void info(const std::string& name, const std::string& value) {
    asserts.push_back({name, "-", value, true});
  }
};

template <class T>
std::string list_str(const std::vector<T>& v) {
  std::ostringstream out;
  out << '{';
  for (size_t i = 0; i < v.size(); ++i) {
    out << v[i];
    if (i + 1 < v.size()) out << ',';
  }
  out << '}';
  return out.str();
}

void emit_report_header(std::ostream& out);
void emit_case(std::ostream& out, const CaseResult& r);
// trailing summary; returns the process exit code (0 pass, 1 fail,
// 3 skipped-for-missing-data and nothing failed)
int emit_summary(std::ostream& out, const std::vector<CaseResult>& results);

}  // namespace cgt
