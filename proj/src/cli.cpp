#include "strateuler/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <unistd.h>

#include "CLI11.hpp"
#include "strateuler/catalog.hpp"
#include "strateuler/census_io.hpp"
#include "strateuler/obstruction.hpp"

namespace strateuler {

namespace {

struct Options {
  std::string file;
  std::string section;
  std::string what;
  std::optional<std::string> at;
  std::string identity;
  std::string unknown;
  std::string emit;
  std::vector<std::string> entries;
};

const FiberedCensus& need_fibration(const CensusDocument& doc) {
  if (!doc.fibered) throw InsufficientData({"fibration"});
  return *doc.fibered;
}

int print_rows(const std::vector<IdentityReport>& rows,
               const std::vector<ExpectedCheck>& expected, bool color,
               std::ostream& out) {
  for (const auto& r : rows) out << format_report(r, color) << '\n';
  for (const auto& e : expected) out << format_expected(e, color) << '\n';
  auto s = summarize(rows);
  std::size_t failed = s.failed;
  for (const auto& e : expected) {
    if (e.skipped) {
      ++s.skipped;
    } else if (e.ok) {
      ++s.ok;
    } else {
      ++failed;
    }
  }
  out << "summary: " << s.ok << " ok, " << failed << " failed, " << s.skipped
      << " skipped\n";
  return failed == 0 ? 0 : 1;
}

int cmd_check(const Options& o, bool color, std::ostream& out) {
  const auto doc = load_document(o.file);
  std::optional<CensusDocument> section;
  if (!o.section.empty()) section = load_document(o.section);
  const auto rows = run_verifiers(doc, section ? &*section : nullptr);
  return print_rows(rows, check_expected(doc), color, out);
}

int cmd_compute(const Options& o, std::ostream& out) {
  const auto doc = load_document(o.file);
  const std::string at = o.at.value_or(kGeneric);
  auto label = [&](const std::string& sym) {
    return o.at ? sym + "[a=" + at + "]" : sym + "_total";
  };
  if (o.what == "eu-table") {
    out << format_table(solve_bdk(doc.base));
  } else if (o.what == "eu-global") {
    out << "Eu(X) = " << global_euler_obstruction(doc.base) << '\n';
  } else if (o.what == "brasselet") {
    out << "B[a=" << at << "] = " << global_brasselet(need_fibration(doc), at) << '\n';
  } else if (o.what == "lambda") {
    const auto& c = need_fibration(doc);
    out << label("lambda") << " = "
        << (o.at ? lambda_infinity(c, at) : lambda_infinity_total(c)) << '\n';
  } else if (o.what == "binf") {
    const auto& c = need_fibration(doc);
    out << label("binf") << " = " << (o.at ? binf(c, at) : binf_total(c)) << '\n';
  } else {
    out << "irregular values: "
        << format_value(detect_irregular_values(need_fibration(doc))) << '\n';
  }
  return 0;
}

int cmd_solve(const Options& o, bool color, std::ostream& out) {
  auto doc = load_document(o.file);
  const auto& c = need_fibration(doc);
  const Identity id = identity_from_name(o.identity);
  const auto params = IdentityParams::at(o.at.value_or(kGeneric));
  const std::string field = resolve_unknown_field(c, o.unknown);
  const Int value = solve_unknown(c, id, params, field);
  out << field << " = " << value << '\n';

  FiberedCensus completed = c;
  completed.set_field(field, value);
  out << format_report(evaluate(completed, id, params), color) << '\n';
  if (!o.emit.empty()) {
    doc.fibered = completed;
    write_text_file(o.emit, dump_document(doc));
    out << "wrote " << o.emit << '\n';
  }
  return 0;
}

int cmd_fubini(const Options& o, bool color, std::ostream& out) {
  const auto bundle = load_fubini(o.file);
  const auto rep = check_fubini(bundle.map, bundle.alpha);
  out << "chi(target, f_* alpha) = " << rep.lhs << '\n';
  out << "chi(source, alpha) = " << rep.rhs << '\n';
  const auto row = IdentityReport::compare("fubini", "", rep.lhs, rep.rhs);
  out << format_report(row, color) << '\n';
  return row.ok() ? 0 : 1;
}

int cmd_catalog_list(std::ostream& out) {
  for (const auto& name : catalog_list()) out << name << '\n';
  return 0;
}

int cmd_catalog_run(const Options& o, bool color, std::ostream& out) {
  std::vector<std::string> names = o.entries.empty() ? catalog_list() : o.entries;
  std::size_t bad = 0;
  for (const auto& name : names) {
    const auto run = run_document(catalog_load(name));
    out << "== " << name << " ==\n";
    for (const auto& r : run.identities) out << format_report(r, color) << '\n';
    for (const auto& e : run.expected) out << format_expected(e, color) << '\n';
    if (!run.error.empty()) out << "error: " << run.error << '\n';
    if (!run.ok()) ++bad;
  }
  out << "catalog: " << names.size() - bad << " of " << names.size()
      << " entries ok\n";
  return bad == 0 ? 0 : 1;
}

}  // namespace

bool color_enabled(bool is_terminal) {
  const char* env = std::getenv("STRAT_EULER_COLOR");
  if (env && std::string(env) == "0") return false;
  return is_terminal;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Euler obstructions, Brasselet numbers and their identities",
               "strat_euler"};
  app.require_subcommand(1);
  Options o;

  auto* check = app.add_subcommand("check", "run every applicable verifier on a census");
  check->add_option("FILE", o.file, "census JSON")->required();
  check->add_option("--section", o.section, "census of a generic hyperplane section");

  auto* compute = app.add_subcommand("compute", "compute one invariant");
  compute->add_option("FILE", o.file, "census JSON")->required();
  compute->add_option("--what", o.what, "invariant")
      ->required()
      ->check(CLI::IsMember({"eu-table", "eu-global", "brasselet", "lambda", "binf",
                             "detect-irregular"}));
  compute->add_option("--at", o.at, "special value label (default: generic or total)");

  auto* solve = app.add_subcommand("solve", "solve one identity for a blank field");
  solve->add_option("FILE", o.file, "census JSON")->required();
  solve->add_option("--identity", o.identity, "identity name")->required();
  solve->add_option("--unknown", o.unknown,
                    "field path, or lambda_total / n_t")->required();
  solve->add_option("--at", o.at, "value label for per-value identities");
  solve->add_option("--emit-completed", o.emit, "write the completed census here");

  auto* fubini = app.add_subcommand("fubini", "check Fubini for a simplicial map");
  fubini->add_option("FILE", o.file, "bundle JSON")->required();

  auto* catalog = app.add_subcommand("catalog", "built-in fixtures");
  catalog->require_subcommand(1);
  auto* cat_list = catalog->add_subcommand("list", "list fixture names");
  auto* cat_run = catalog->add_subcommand("run", "run verifiers and expected values");
  cat_run->add_option("NAME", o.entries, "entries (default: all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  const bool color = color_enabled(&out == &std::cout && isatty(STDOUT_FILENO) != 0);
  try {
    if (*check) return cmd_check(o, color, out);
    if (*compute) return cmd_compute(o, out);
    if (*solve) return cmd_solve(o, color, out);
    if (*fubini) return cmd_fubini(o, color, out);
    if (*cat_list) return cmd_catalog_list(out);
    if (*cat_run) return cmd_catalog_run(o, color, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace strateuler
