// Random generators and small hand-built censuses shared by the unit tests
// and the acceptance suite.
#pragma once

#include <algorithm>
#include <memory>
#include <random>
#include <set>
#include <vector>

#include "strateuler/catalog.hpp"
#include "strateuler/euler_calculus.hpp"
#include "strateuler/integer_matrix.hpp"
#include "strateuler/strata.hpp"

namespace support {

using namespace strateuler;

inline Int uniform(std::mt19937& rng, Int lo, Int hi) {
  return std::uniform_int_distribution<Int>(lo, hi)(rng);
}

/// Closure of random simplices on at most `max_vertices` vertices, stopping
/// before the complex would exceed `max_simplices`.
inline std::shared_ptr<const SimplicialComplex> random_complex(
    std::mt19937& rng, int max_vertices = 6, int max_dim = 3,
    std::size_t max_simplices = 30) {
  const int nv = static_cast<int>(uniform(rng, 1, max_vertices));
  std::set<Simplex> simplices = {Simplex{0}};
  for (int attempt = 0; attempt < 12; ++attempt) {
    const int d = static_cast<int>(uniform(rng, 0, std::min(max_dim, nv - 1)));
    std::vector<Vertex> pool(nv);
    for (int v = 0; v < nv; ++v) pool[v] = v;
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(d + 1);
    const auto s = Simplex::from_unsorted(pool);
    std::set<Simplex> next = simplices;
    for (const auto& f : s.faces()) next.insert(f);
    if (next.size() <= max_simplices) simplices = std::move(next);
  }
  return std::make_shared<const SimplicialComplex>(std::move(simplices));
}

/// A random vertex map out of `source`; the target is the closure of the
/// image plus a few unrelated simplices.
inline SimplicialMap random_map(std::mt19937& rng,
                                std::shared_ptr<const SimplicialComplex> source) {
  const Int m = uniform(rng, 1, 5);
  std::map<Vertex, Vertex> vmap;
  for (Vertex v : source->vertices()) vmap[v] = uniform(rng, 0, m - 1);
  std::vector<Simplex> generators;
  for (const auto& s : source->simplices()) {
    std::vector<Vertex> image;
    for (Vertex v : s.vertices()) image.push_back(vmap[v]);
    generators.push_back(Simplex::from_unsorted(image));
  }
  const Int extra = uniform(rng, 0, 2);
  for (Int i = 0; i < extra; ++i) {
    generators.push_back(Simplex::from_unsorted({uniform(rng, 0, m + 1), uniform(rng, 0, m + 1)}));
  }
  auto target = std::make_shared<const SimplicialComplex>(SimplicialComplex::closure_of(generators));
  return SimplicialMap(std::move(source), std::move(target), std::move(vmap));
}

inline SimplicialConstructibleFunction random_function(
    std::mt19937& rng, const std::shared_ptr<const SimplicialComplex>& host) {
  std::map<Simplex, Int> weights;
  for (const auto& s : host->simplices()) {
    if (uniform(rng, 0, 3) != 0) weights[s] = uniform(rng, -5, 5);
  }
  return SimplicialConstructibleFunction(host, std::move(weights));
}

inline IntMatrix random_unitriangular(std::mt19937& rng, std::size_t n) {
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = r + 1; c < n; ++c) m(r, c) = uniform(rng, -4, 4);
  }
  return m;
}

inline std::vector<Int> random_stratum_function(std::mt19937& rng, std::size_t n) {
  std::vector<Int> alpha(n);
  for (auto& a : alpha) a = uniform(rng, -6, 6);
  return alpha;
}

inline StratifiedCensus smooth_census(int dim = 1, Int chi = 1) {
  return StratifiedCensus("smooth", {{"X", dim, chi, true}}, {}, {}, true);
}

/// Two curve strata meeting at a point with the given complex link.
inline StratifiedCensus curve_census(Int link, const std::string& name = "curve") {
  return StratifiedCensus(name, {{"V1", 0, 1, false}, {"V2", 1, 0, true}},
                          {{"V1", "V2"}}, {{"V1", "V2", link}}, true);
}

inline StratifiedCensus node_census() { return curve_census(2, "node"); }
inline StratifiedCensus triple_point_census() { return curve_census(3, "triple"); }

/// {xyz = 0}: origin, three axes, three planes.
inline StratifiedCensus coordinate_planes_census() {
  return catalog_load("coordinate-planes-linear").base;
}

/// Every stratified census reachable from the catalog: bases, fiber
/// censuses and hyperplane sections.
inline std::vector<StratifiedCensus> all_catalog_censuses() {
  std::vector<StratifiedCensus> out;
  for (const auto& name : catalog_list()) {
    const auto doc = catalog_load(name);
    out.push_back(doc.base);
    if (doc.fibered) {
      for (const auto& [v, fc] : doc.fibered->fiber_censuses()) out.push_back(fc);
    }
    if (doc.hyperplane_section) out.push_back(doc.hyperplane_section->base);
  }
  return out;
}

}  // namespace support
