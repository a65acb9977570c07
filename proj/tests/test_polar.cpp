#include "doctest.h"
#include "strateuler/catalog.hpp"
#include "strateuler/errors.hpp"
#include "strateuler/polar.hpp"

using namespace strateuler;

namespace {

FiberedCensus zk(Int k) {
  CriticalPoint q{"q0", "V", "0", {{"V", k - 1}}, Int{1}, std::nullopt};
  return FiberedCensus(StratifiedCensus("zk", {{"V", 1, 1, true}}, {}, {}, true), {"0"},
                       {{"V", {{"0", 1}, {"generic", k}}}}, {}, {q}, false);
}

PolarData polar1(std::map<std::string, std::vector<Int>> gamma,
                 std::optional<std::vector<Int>> alpha = std::nullopt) {
  PolarData p;
  p.d = 1;
  p.gamma = std::move(gamma);
  p.alpha = std::move(alpha);
  return p;
}

}  // namespace

TEST_CASE("brasselet_from_polar examples") {
  const auto node = catalog_load("node-linear");
  CHECK(brasselet_from_polar(*node.fibered, *node.polar, "0") == 2);
  CHECK(brasselet_from_polar(*node.fibered, *node.polar, kGeneric) ==
        node.polar->gamma_at(kGeneric, 0));

  const FiberedCensus line(StratifiedCensus("line", {{"V", 1, 1, true}}, {}, {}, true), {"0"},
                           {{"V", {{"0", 1}, {"generic", 1}}}}, {}, {}, false);
  CHECK(brasselet_from_polar(line, polar1({{"generic", {0}}, {"0", {0}}}), "0") == 0);
  CHECK_THROWS_AS(brasselet_from_polar(line, polar1({{"generic", {1}}}), "0"), MissingPolarData);
}

TEST_CASE("infinity_from_polar examples") {
  const auto z = zk(3);
  CHECK(infinity_from_polar(z, polar1({{"generic", {3}}, {"0", {3}}}), "0") == 0);
  const auto b = catalog_load("broughton");
  CHECK(infinity_from_polar(*b.fibered, *b.polar, "0") == binf(*b.fibered, "0"));
  CHECK_THROWS_AS(infinity_from_polar(z, polar1({{"0", {3}}}), "0"), MissingPolarData);
}

TEST_CASE("polar data that omits the critical-point correction is rejected") {
  for (Int k = 2; k <= 6; ++k) {
    const auto z = zk(k);
    const auto wrong = polar1({{"generic", {k}}, {"0", {1}}}, std::vector<Int>{1, 0});
    CHECK(infinity_from_polar(z, wrong, "0") == k - 1);
    CHECK(binf(z, "0") == 0);
    bool failed = false;
    for (const auto& r : polar_checks(z, wrong)) failed = failed || r.status == ReportStatus::fail;
    CHECK(failed);
    const auto right = polar1({{"generic", {k}}, {"0", {k}}}, std::vector<Int>{1, 0});
    for (const auto& r : polar_checks(z, right)) CHECK(r.ok());
  }
}

TEST_CASE("stv_global_eu examples") {
  for (const std::string name : {"node-linear", "cusp-linear", "triple-point-linear"}) {
    const auto doc = catalog_load(name);
    const auto r = stv_global_eu(*doc.fibered, *doc.polar);
    CHECK(r.ok());
    CHECK(r.rhs == global_euler_obstruction(doc.base));
  }
  const auto node = catalog_load("node-linear");
  CHECK(stv_global_eu(*node.fibered, *node.polar).lhs == 2);
  CHECK(stv_global_eu(zk(2), polar1({{"generic", {2}}}, std::vector<Int>{1, 0})).lhs == 1);
  CHECK_THROWS_AS(stv_global_eu(zk(2), polar1({{"generic", {2}}})), MissingPolarData);
}

TEST_CASE("hyperplane_step") {
  const auto node = catalog_load("node-linear");
  const auto r = hyperplane_step(*node.fibered, nullptr, *node.polar, "0");
  CHECK(r.ok());
  CHECK(r.lhs == 2);

  const auto quadric = catalog_load("smooth-quadric-slice");
  REQUIRE(quadric.hyperplane_section);
  REQUIRE(quadric.hyperplane_section->fibered);
  std::vector<std::string> values = quadric.fibered->special_values();
  values.push_back(kGeneric);
  for (const auto& v : values) {
    CHECK(hyperplane_step(*quadric.fibered, &*quadric.hyperplane_section->fibered,
                          *quadric.polar, v).ok());
  }
  CHECK_THROWS_AS(hyperplane_step(*quadric.fibered, nullptr, *quadric.polar, "0"),
                  InsufficientData);
}

TEST_CASE("polar data validation") {
  auto p = polar1({{"generic", {1, 2}}});
  CHECK_THROWS_AS(p.validate(), InvalidCensus);
  p = polar1({{"generic", {-1}}});
  CHECK_THROWS_AS(p.validate(), InvalidCensus);
  p = polar1({{"generic", {1}}}, std::vector<Int>{1});
  CHECK_THROWS_AS(p.validate(), InvalidCensus);
  CHECK_THROWS_AS(polar1({{"generic", {1}}}).gamma_at("0", 0), MissingPolarData);
}

TEST_CASE("polar properties on the catalog") {
  for (const auto& name : catalog_list()) {
    const auto doc = catalog_load(name);
    if (!doc.polar || !doc.fibered) continue;
    const auto& c = *doc.fibered;
    std::vector<std::string> values = c.special_values();
    values.push_back(kGeneric);
    for (const auto& v : values) {
      if (!doc.polar->gamma.count(v)) continue;
      INFO(name << " at " << v);
      CHECK(brasselet_from_polar(c, *doc.polar, v) == global_brasselet(c, v));
      Int correction = 0;
      for (const auto& q : c.critical_points()) {
        if (q.value == v) correction += eu_of_function_local(c, q.id, c.base().stratum(c.base().top()).id);
      }
      CHECK(infinity_from_polar(c, *doc.polar, v) ==
            brasselet_from_polar(c, *doc.polar, kGeneric) - brasselet_from_polar(c, *doc.polar, v) +
                correction);
      CHECK(infinity_from_polar(c, *doc.polar, v) == binf(c, v));
    }
    if (doc.polar->alpha) CHECK(stv_global_eu(c, *doc.polar).ok());
  }
}
