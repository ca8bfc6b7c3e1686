#include "cgt/report.hpp"

#include <ostream>

namespace cgt {

void emit_report_header(std::ostream& out) { out << "cgt-report 1\n"; }

void emit_case(std::ostream& out, const CaseResult& r) {
  out << "case id=" << r.id << " seed=" << r.seed << "\n";
  for (const auto& a : r.asserts) {
    out << "assert case=" << r.id << " name=" << a.name
        << " status=" << (a.pass ? "pass" : "fail");
    if (a.expected != "-") out << " expected=" << a.expected;
    out << " computed=" << a.computed << "\n";
  }
  out << "case-summary id=" << r.id << " status=" << r.status;
  if (!r.note.empty()) out << " note=\"" << r.note << "\"";
  out << " asserts=" << r.asserts.size() << " wall_ms=" << static_cast<u64>(r.wall_ms)
      << "\n";
}

int emit_summary(std::ostream& out, const std::vector<CaseResult>& results) {
  u64 passed = 0, failed = 0, skipped = 0, inconclusive = 0;
  for (const auto& r : results) {
    if (r.status == "pass") ++passed;
    else if (r.status == "fail") ++failed;
    else if (r.status == "skipped") ++skipped;
    else ++inconclusive;
  }
  int exit_code = failed || inconclusive ? 1 : skipped ? 3 : 0;
  out << "summary status=" << (failed || inconclusive ? "fail" : skipped ? "skipped" : "pass")
      << " cases=" << results.size() << " passed=" << passed << " failed=" << failed
      << " skipped=" << skipped << " inconclusive=" << inconclusive << " exit=" << exit_code
      << "\n";
  return exit_code;
}

}  // namespace cgt
