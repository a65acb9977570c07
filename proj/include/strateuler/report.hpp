/// @file report.hpp
/// @brief Two-sided identity reports shared by all verifiers.

#pragma once

#include <string>
#include <vector>

#include "strateuler/checked.hpp"

namespace strateuler {

enum class ReportStatus { ok, fail, skipped };

struct IdentityReport {
  std::string name;
  std::string context;  ///< e.g. "a=0, alpha=Eu_X"; empty when unparametrized
  Int lhs = 0;
  Int rhs = 0;
  ReportStatus status = ReportStatus::ok;
  std::string note;  ///< reason for a skip

  bool ok() const noexcept { return status == ReportStatus::ok; }

  static IdentityReport compare(std::string name, std::string context, Int lhs,
                                Int rhs) {
    return {std::move(name), std::move(context), lhs, rhs,
            lhs == rhs ? ReportStatus::ok : ReportStatus::fail, {}};
  }
  static IdentityReport skip(std::string name, std::string context,
                             std::string why) {
    return {std::move(name), std::move(context), 0, 0, ReportStatus::skipped,
            std::move(why)};
  }
};

/// "name: LHS=.. RHS=.. OK", then the context in parentheses when present.
std::string format_report(const IdentityReport& r, bool color = false);

struct ReportSummary {
  std::size_t ok = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
};

ReportSummary summarize(const std::vector<IdentityReport>& rows);

}  // namespace strateuler
