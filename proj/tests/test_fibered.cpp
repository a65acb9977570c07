#include <random>

#include "doctest.h"
#include "strateuler/catalog.hpp"
#include "strateuler/errors.hpp"
#include "strateuler/fibered.hpp"
#include "support.hpp"

using namespace strateuler;

namespace {

FiberedCensus fixture(const std::string& name) { return *catalog_load(name).fibered; }

/// X = C, f = z^k without the optional extras.
FiberedCensus zk(Int k) {
  CriticalPoint q{"q0", "V", "0", {{"V", k - 1}}, Int{1}, std::nullopt};
  return FiberedCensus(StratifiedCensus("zk", {{"V", 1, 1, true}}, {}, {}, true), {"0"},
                       {{"V", {{"0", 1}, {"generic", k}}}}, {}, {q}, false);
}

}  // namespace

TEST_CASE("brasselet examples") {
  const auto z2 = zk(2);
  CHECK(global_brasselet(z2, "0") == 1);
  CHECK(global_brasselet(z2, kGeneric) == 2);
  CHECK(global_brasselet(z2, "17") == 2);  // values off A behave like generic
  CHECK(global_brasselet(fixture("node-linear"), "0") == 2);
  CHECK(brasselet(z2, "0", std::vector<Int>{0}) == 0);
  CHECK(brasselet(z2, kGeneric, StratumFunction{{"V", 3}}) == 6);
}

TEST_CASE("eu_of_f_at examples") {
  CHECK(eu_of_f_at(zk(2), kGeneric) == -1);
  CHECK(eu_of_f_at(fixture("node-linear"), kGeneric) == 0);
}

TEST_CASE("invariants at infinity") {
  const auto b = fixture("broughton");
  CHECK(lambda_infinity(b, "0") == -1);
  CHECK(lambda_infinity_total(b) == -1);
  CHECK(binf(b, "0") == -1);
  CHECK(lambda_infinity(b, "5") == 0);
  CHECK(lambda_infinity_total(zk(3)) == 0);
  CHECK(detect_irregular_values(b) == std::vector<std::string>{"0"});
  CHECK(detect_irregular_values(zk(4)).empty());
}

TEST_CASE("local fiber defect and local obstruction of f") {
  CHECK(local_fiber_defect(zk(2), "q0") == -1);
  CHECK(local_fiber_defect(zk(3), "q0") == -2);
  CHECK_THROWS_AS(local_fiber_defect(zk(2), "nope"), UnknownCriticalPoint);
  CHECK(eu_of_function_local(zk(2), "q0", "V") == -1);
  const auto cusp = fixture("cusp-linear");
  CHECK(eu_of_function_local(cusp, "q1", "V2") == 0);
  CHECK_THROWS_AS(eu_of_function_local(cusp, "q2", "V1"), PointNotInClosure);
  CHECK(eu_of_function_local(fixture("smooth-quadric-slice"), "q1", "X") == 1);
}

TEST_CASE("census validation") {
  const StratifiedCensus base("c", {{"V", 1, 1, true}}, {}, {}, true);
  CHECK_THROWS_AS(FiberedCensus(base, {"0"}, {{"V", {{"0", 1}}}}, {}, {}, false), InvalidCensus);
  CHECK_THROWS_AS(FiberedCensus(base, {"0"}, {{"V", {{"1", 1}, {"generic", 1}}}}, {}, {}, false),
                  UnknownValueLabel);
  CHECK_THROWS_AS(FiberedCensus(base, {"0"}, {{"W", {{"generic", 1}}}}, {}, {}, false),
                  UnknownStratum);
  CHECK_THROWS_AS(FiberedCensus(base, {"0"}, {{"V", {{"generic", 1}}}}, {{"V", {{"generic", 1}}}},
                                {}, false),
                  UnknownValueLabel);
  CHECK_THROWS_AS(FiberedCensus(base, {"generic"}, {{"V", {{"generic", 1}}}}, {}, {}, false),
                  InvalidCensus);
  CriticalPoint stray{"q", "V", "7", {}, std::nullopt, std::nullopt};
  CHECK_THROWS_AS(FiberedCensus(base, {"0"}, {{"V", {{"generic", 1}}}}, {}, {stray}, false),
                  UnknownValueLabel);
  CriticalPoint negative{"q", "V", "0", {{"V", -1}}, std::nullopt, std::nullopt};
  CHECK_THROWS_AS(FiberedCensus(base, {"0"}, {{"V", {{"generic", 1}}}}, {}, {negative}, false),
                  InvalidCensus);

  const auto node = support::node_census();
  CriticalPoint off{"q", "V2", "0", {{"V1", 1}}, std::nullopt, std::nullopt};
  CHECK_THROWS_AS(FiberedCensus(node, {"0"}, {{"V1", {{"generic", 0}}}, {"V2", {{"generic", 2}}}},
                                {}, {off}, false),
                  InvalidCensus);
}

TEST_CASE("identity examples") {
  for (Int k = 2; k <= 6; ++k) {
    const auto r = evaluate(zk(k), Identity::thm_generic_fiber, {});
    CHECK(r.lhs == 1 - k);
    CHECK(r.rhs == -(k - 1));
    CHECK(r.ok());
  }
  const auto b = fixture("broughton");
  const auto any = evaluate(b, Identity::prop_any_value, IdentityParams::at("0"));
  CHECK(any.lhs == 0);
  CHECK(any.rhs == 0);
  const auto node = evaluate(fixture("node-linear"), Identity::prop_brasselet_vs_fiber_eu,
                             IdentityParams::at("0"));
  CHECK(node.lhs == 2);
  CHECK(node.rhs == 2);
}

TEST_CASE("identities need their data") {
  auto c = zk(2);
  CHECK_THROWS_AS(evaluate(c, Identity::prop_brasselet_vs_fiber_eu, IdentityParams::at("0")),
                  InsufficientData);
  c.set_field("fiber_chi/V/generic", std::nullopt);
  try {
    evaluate(c, Identity::thm_generic_fiber, {});
    FAIL("expected InsufficientData");
  } catch (const InsufficientData& e) {
    CHECK(e.fields() == std::vector<std::string>{"fiber_chi/V/generic"});
  }
  IdentityParams mu;
  mu.milnor_variant = true;
  CHECK_THROWS_AS(evaluate(zk(2), Identity::thm_generic_fiber, mu), InsufficientData);

  const StratifiedCensus flagless("f", {{"V", 1, 1, true}}, {}, {}, false);
  const FiberedCensus nf(flagless, {}, {{"V", {{"generic", 1}}}}, {}, {}, false);
  CHECK_THROWS_AS(evaluate(nf, Identity::cor_equi, {}), NotEquidimensional);
  const auto rows = check_identity(nf, Identity::cor_equi);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].status == ReportStatus::skipped);
  CHECK(evaluate(nf, Identity::thm_generic_fiber, {}).ok());
}

TEST_CASE("a broken census fails value_consistency") {
  auto c = zk(2);
  c.set_field("fiber_chi/V/0", 3);
  const auto r = evaluate(c, Identity::value_consistency, IdentityParams::at("0"));
  CHECK_FALSE(r.ok());
  CHECK(format_report(r) == "value_consistency: LHS=2 RHS=4 FAIL (a=0)");
}

TEST_CASE("every identity holds on every fixture") {
  for (const auto& name : catalog_list()) {
    const auto c = fixture(name);
    for (const auto& r : check_all(c)) {
      INFO(name << ": " << format_report(r));
      CHECK(r.status != ReportStatus::fail);
    }
  }
}

TEST_CASE("bdk_global_1 with Eu_X reduces to the Brasselet number") {
  for (const auto& name : catalog_list()) {
    const auto c = fixture(name);
    const auto eu = eu_alpha(c);
    const auto r = evaluate(c, Identity::bdk_global_1, IdentityParams::at(kGeneric).with_alpha(eu, "Eu_X"));
    CHECK(r.lhs == global_brasselet(c, kGeneric));
    CHECK(r.ok());
  }
}

TEST_CASE("brasselet numbers are linear in alpha") {
  std::mt19937 rng(31);
  for (const auto& name : catalog_list()) {
    const auto c = fixture(name);
    const auto n = c.base().size();
    for (int trial = 0; trial < 5; ++trial) {
      const auto a = support::random_stratum_function(rng, n);
      const auto b = support::random_stratum_function(rng, n);
      std::vector<Int> mix(n);
      for (std::size_t i = 0; i < n; ++i) mix[i] = 3 * a[i] + 2 * b[i];
      std::vector<std::string> values = c.special_values();
      values.push_back(kGeneric);
      for (const auto& v : values) {
        CHECK(brasselet(c, v, mix) == 3 * brasselet(c, v, a) + 2 * brasselet(c, v, b));
        CHECK(brasselet_infinity(c, v, mix) ==
              3 * brasselet_infinity(c, v, a) + 2 * brasselet_infinity(c, v, b));
      }
      CHECK(brasselet_infinity_total(c, mix) ==
            3 * brasselet_infinity_total(c, a) + 2 * brasselet_infinity_total(c, b));
    }
  }
}

TEST_CASE("solve_unknown examples") {
  auto b = fixture("broughton");
  b.set_field("infinity_chi/X/0", std::nullopt);
  CHECK(resolve_unknown_field(b, "lambda_total") == "infinity_chi/X/0");
  CHECK(solve_unknown(b, Identity::thm_generic_fiber, {}, "lambda_total") == -1);

  auto z2 = zk(2);
  z2.set_field("morse_counts/q0/V", std::nullopt);
  CHECK(solve_unknown(z2, Identity::thm_generic_fiber, {}, "n_t") == 1);

  CHECK_THROWS_AS(solve_unknown(zk(2), Identity::thm_generic_fiber, {}, "fiber_chi/V/generic"),
                  NotSolvable);
}

TEST_CASE("solve_unknown refusals") {
  auto c = zk(3);
  c.set_field("fiber_chi/V/generic", std::nullopt);
  c.set_field("morse_counts/q0/V", std::nullopt);
  CHECK_THROWS_AS(solve_unknown(c, Identity::thm_generic_fiber, {}, "fiber_chi/V/generic"),
                  NotSolvable);

  auto d = zk(3);
  d.set_field("fiber_chi/V/0", std::nullopt);
  // thm_generic_fiber does not read the special fiber.
  CHECK_THROWS_AS(solve_unknown(d, Identity::thm_generic_fiber, {}, "fiber_chi/V/0"), NotSolvable);
  CHECK(solve_unknown(d, Identity::value_consistency, IdentityParams::at("0"), "fiber_chi/V/0") == 1);

  // The closure-wise identities hold whatever the fiber data.
  auto e = zk(3);
  e.set_field("fiber_chi/V/generic", std::nullopt);
  CHECK_THROWS_AS(solve_unknown(e, Identity::bdk_global_1, {}, "fiber_chi/V/generic"), NotSolvable);
  CHECK_THROWS_AS(solve_unknown(e, Identity::thm_generic_fiber, {}, "lambda_total"), NotSolvable);
}

TEST_CASE("solve then check round trip on every fixture") {
  for (const auto& name : catalog_list()) {
    const auto c = fixture(name);
    for (const auto& path : c.field_paths()) {
      const auto original = c.field(path);
      if (!original) continue;
      auto blank = c;
      blank.set_field(path, std::nullopt);
      for (const auto id : {Identity::thm_generic_fiber, Identity::value_consistency,
                            Identity::cor_generic_vs_any}) {
        for (const auto& v : c.special_values()) {
          const auto p = IdentityParams::at(v);
          try {
            const Int x = solve_unknown(blank, id, p, path);
            auto done = blank;
            done.set_field(path, x);
            CHECK(x == *original);
            CHECK(evaluate(done, id, p).ok());
          } catch (const NotSolvable&) {
          }
        }
      }
    }
  }
}

TEST_CASE("field paths") {
  auto c = zk(2);
  CHECK(c.field("infinity_chi/V/0") == Int{0});
  CHECK(c.field("morse_counts/q0/V") == Int{1});
  CHECK_FALSE(c.field("milnor_numbers/q0/V").has_value());
  CHECK_THROWS_AS(c.field("fiber_chi/V"), std::invalid_argument);
  CHECK_THROWS_AS(c.field("bogus/V/0"), std::invalid_argument);
  c.set_field("eu_fiber_at_q/q0", std::nullopt);
  CHECK(c.blank_fields() == std::vector<std::string>{});
  c.set_field("infinity_chi/V/0", std::nullopt);
  CHECK(c.blank_fields() == std::vector<std::string>{"infinity_chi/V/0"});
}

TEST_CASE("restricting a fibration to a closure") {
  const auto cusp = fixture("cusp-linear");
  const auto sub = restrict_to_closure(cusp, "V1");
  CHECK(sub.base().size() == 1);
  REQUIRE(sub.critical_points().size() == 1);
  CHECK(sub.critical_points()[0].id == "q1");
  CHECK(global_brasselet(sub, "0") == 1);
}

TEST_CASE("identity names") {
  CHECK(all_identities().size() == 10);
  for (const auto id : all_identities()) CHECK(identity_from_name(identity_name(id)) == id);
  CHECK_THROWS_AS(identity_from_name("nope"), UnknownIdentity);
}

TEST_CASE("irregular value detection refuses to guess blanks") {
  auto b = fixture("broughton");
  b.set_field("infinity_chi/X/0", std::nullopt);
  CHECK_THROWS_AS(detect_irregular_values(b), InsufficientData);
}
