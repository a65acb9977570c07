#include "strateuler/catalog.hpp"

#include <map>

#include "strateuler/obstruction.hpp"

namespace strateuler {

// Defined in the generated catalog_data.cpp.
const std::map<std::string, std::string>& catalog_sources();

namespace {

bool starts_with(const std::string& s, const std::string& prefix) {
  return s.rfind(prefix, 0) == 0;
}

const FiberedCensus& fibration_of(const CensusDocument& doc, const std::string& key) {
  if (!doc.fibered) throw InsufficientData({"fibration (for " + key + ")"});
  return *doc.fibered;
}

void append(std::vector<IdentityReport>& rows, std::vector<IdentityReport> more,
            const std::string& extra_context = {}) {
  for (auto& r : more) {
    if (!extra_context.empty()) {
      r.context = r.context.empty() ? extra_context : extra_context + ", " + r.context;
    }
    rows.push_back(std::move(r));
  }
}

}  // namespace

std::string format_value(const ExpectedValue& v) {
  if (const auto* n = std::get_if<Int>(&v)) return std::to_string(*n);
  std::string out = "[";
  const auto& list = std::get<std::vector<std::string>>(v);
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (i) out += ", ";
    out += list[i];
  }
  return out + "]";
}

std::string format_expected(const ExpectedCheck& c, bool color) {
  if (c.skipped) {
    return "expected " + c.key + ": " + (color ? "\033[33mSKIP\033[0m" : "SKIP") + " (" +
           c.note + ")";
  }
  const char* on = color ? (c.ok ? "\033[32m" : "\033[31m") : "";
  const char* off = color ? "\033[0m" : "";
  return "expected " + c.key + ": " + c.computed + " = " + c.expected + " " + on +
         (c.ok ? "OK" : "FAIL") + off;
}

ExpectedValue compute_expected(const CensusDocument& doc, const std::string& key) {
  const auto& base = doc.base;
  if (key == "chi_X") return chi_global(base, base.one());
  if (key == "eu_global") return global_euler_obstruction(base);
  if (key == "stv_eu") {
    if (!doc.polar || !doc.polar->alpha) throw MissingPolarData("no alpha list");
    Int total = 0;
    for (std::size_t i = 0; i < doc.polar->alpha->size(); ++i) {
      total = checked_add(total, checked_mul(sign_power(static_cast<Int>(i)),
                                             (*doc.polar->alpha)[i]));
    }
    return total;
  }
  if (starts_with(key, "eu_X_at_")) {
    return solve_bdk(base).eu_x_at(base.index_of(key.substr(8)));
  }
  const auto& c = fibration_of(doc, key);
  if (key == "lambda_total") return lambda_infinity_total(c);
  if (key == "binf_total") return binf_total(c);
  if (key == "irregular_values") return detect_irregular_values(c);
  if (key == "B_generic") return global_brasselet(c, kGeneric);
  if (key == "eu_f_generic") return eu_of_f_at(c, kGeneric);
  if (starts_with(key, "B_at_")) return global_brasselet(c, key.substr(5));
  if (starts_with(key, "eu_f_at_")) return eu_of_f_at(c, key.substr(8));
  if (starts_with(key, "lambda_at_")) return lambda_infinity(c, key.substr(10));
  if (starts_with(key, "binf_at_")) return binf(c, key.substr(8));
  if (starts_with(key, "local_defect_")) return local_fiber_defect(c, key.substr(13));
  throw InvalidCensus("unknown expected key '" + key + "'");
}

std::vector<ExpectedCheck> check_expected(const CensusDocument& doc) {
  std::vector<ExpectedCheck> out;
  for (const auto& [key, want] : doc.expected) {
    ExpectedCheck c;
    c.key = key;
    c.expected = format_value(want);
    try {
      const auto got = compute_expected(doc, key);
      c.computed = format_value(got);
      c.ok = got == want;
    } catch (const InsufficientData& e) {
      c.skipped = true;
      c.note = e.what();
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<IdentityReport> run_verifiers(const CensusDocument& doc,
                                          const CensusDocument* section) {
  std::vector<IdentityReport> rows;
  const auto table = solve_bdk(doc.base);
  for (const auto& s : doc.base.strata()) {
    if (s.dim == 0) rows.push_back(check_bdk_point_formula(doc.base, table, s.id));
  }
  if (!section) section = doc.hyperplane_section.get();
  if (doc.fibered) {
    append(rows, check_all(*doc.fibered));
    if (doc.polar) {
      const FiberedCensus* sec =
          section && section->fibered ? &*section->fibered : nullptr;
      append(rows, polar_checks(*doc.fibered, *doc.polar, sec));
    }
  }
  if (section && section->fibered) append(rows, check_all(*section->fibered), "section");
  return rows;
}

bool EntryRun::ok() const {
  if (!error.empty()) return false;
  for (const auto& r : identities) {
    if (r.status == ReportStatus::fail) return false;
  }
  for (const auto& e : expected) {
    if (!e.ok && !e.skipped) return false;
  }
  return true;
}

EntryRun run_document(const CensusDocument& doc) {
  EntryRun run;
  run.name = doc.name();
  try {
    run.identities = run_verifiers(doc);
    run.expected = check_expected(doc);
  } catch (const Error& e) {
    run.error = e.what();
  }
  return run;
}

std::vector<std::string> catalog_list() {
  std::vector<std::string> names;
  for (const auto& [name, _] : catalog_sources()) names.push_back(name);
  return names;
}

const std::string& catalog_source(const std::string& name) {
  const auto& all = catalog_sources();
  auto it = all.find(name);
  if (it == all.end()) throw UnknownEntry(name);
  return it->second;
}

CensusDocument catalog_load(const std::string& name) {
  return parse_document(catalog_source(name));
}

std::vector<EntryRun> catalog_run_all() {
  std::vector<EntryRun> runs;
  for (const auto& name : catalog_list()) runs.push_back(run_document(catalog_load(name)));
  return runs;
}

}  // namespace strateuler
