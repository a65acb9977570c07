#include "strateuler/report.hpp"

namespace strateuler {

std::string format_report(const IdentityReport& r, bool color) {
  const char* green = color ? "\033[32m" : "";
  const char* red = color ? "\033[31m" : "";
  const char* yellow = color ? "\033[33m" : "";
  const char* reset = color ? "\033[0m" : "";
  std::string line = r.name + ": ";
  switch (r.status) {
    case ReportStatus::ok:
    case ReportStatus::fail:
      line += "LHS=" + std::to_string(r.lhs) + " RHS=" + std::to_string(r.rhs) +
              " " + (r.ok() ? green : red) + (r.ok() ? "OK" : "FAIL") + reset;
      break;
    case ReportStatus::skipped:
      line += std::string(yellow) + "SKIP" + reset + " " + r.note;
      break;
  }
  if (!r.context.empty()) line += " (" + r.context + ")";
  return line;
}

ReportSummary summarize(const std::vector<IdentityReport>& rows) {
  ReportSummary s;
  for (const auto& r : rows) {
    switch (r.status) {
      case ReportStatus::ok: ++s.ok; break;
      case ReportStatus::fail: ++s.failed; break;
      case ReportStatus::skipped: ++s.skipped; break;
    }
  }
  return s;
}

}  // namespace strateuler
