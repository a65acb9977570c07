/// @file catalog.hpp
/// @brief Built-in census fixtures with independently derived expected
///        values, and the runner that checks them.
///
/// The fixtures are the JSON files under catalog/, compiled into the library.
/// Expected keys:
///
///   chi_X, eu_global, stv_eu, lambda_total, binf_total, irregular_values,
///   B_generic, B_at_<a>, eu_f_generic, eu_f_at_<a>, lambda_at_<a>,
///   binf_at_<a>, eu_X_at_<stratum>, local_defect_<q>

#pragma once

#include <string>
#include <vector>

#include "strateuler/census_io.hpp"
#include "strateuler/report.hpp"

namespace strateuler {

struct ExpectedCheck {
  std::string key;
  std::string computed;
  std::string expected;
  bool ok = false;
  bool skipped = false;  ///< the value needs blank or missing fields
  std::string note;
};

/// "expected <key>: <computed> = <expected> OK|FAIL", or "expected <key>: SKIP (...)"
std::string format_expected(const ExpectedCheck& c, bool color = false);
std::string format_value(const ExpectedValue& v);

/// Computes the invariant named by an expected key. Throws InvalidCensus for
/// an unknown key.
ExpectedValue compute_expected(const CensusDocument& doc, const std::string& key);
std::vector<ExpectedCheck> check_expected(const CensusDocument& doc);

/// Every applicable verifier: point-stratum index formulas, the fibered
/// identities, polar cross-checks and the identities of the hyperplane
/// section. `section` overrides the document's own section.
std::vector<IdentityReport> run_verifiers(const CensusDocument& doc,
                                          const CensusDocument* section = nullptr);

struct EntryRun {
  std::string name;
  std::vector<IdentityReport> identities;
  std::vector<ExpectedCheck> expected;
  std::string error;  ///< non-empty if the entry could not be evaluated

  bool ok() const;
};

EntryRun run_document(const CensusDocument& doc);

std::vector<std::string> catalog_list();
/// Throws UnknownEntry.
const std::string& catalog_source(const std::string& name);
CensusDocument catalog_load(const std::string& name);
std::vector<EntryRun> catalog_run_all();

}  // namespace strateuler
