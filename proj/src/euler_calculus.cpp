#include "strateuler/euler_calculus.hpp"

namespace strateuler {

namespace {

bool same_complex(const SimplicialComplex& a, const SimplicialComplex& b) {
  return &a == &b || a.simplices() == b.simplices();
}

}  // namespace

SimplicialConstructibleFunction::SimplicialConstructibleFunction(
    std::shared_ptr<const SimplicialComplex> host,
    std::map<Simplex, Int> weights)
    : host_(std::move(host)) {
  for (auto& [s, w] : weights) {
    if (!host_->contains(s)) {
      throw HostMismatch("weight keyed on " + s.to_string() +
                         ", which is not in the host complex");
    }
    if (w != 0) weights_.emplace(s, w);
  }
}

SimplicialConstructibleFunction SimplicialConstructibleFunction::constant(
    std::shared_ptr<const SimplicialComplex> host, Int value) {
  std::map<Simplex, Int> w;
  for (const auto& s : host->simplices()) w.emplace(s, value);
  return SimplicialConstructibleFunction(std::move(host), std::move(w));
}

Int SimplicialConstructibleFunction::operator()(const Simplex& s) const {
  auto it = weights_.find(s);
  return it == weights_.end() ? 0 : it->second;
}

SimplicialConstructibleFunction SimplicialConstructibleFunction::combine(
    Int a, Int b, const SimplicialConstructibleFunction& other) const {
  if (!same_complex(*host_, *other.host_)) {
    throw HostMismatch("cannot combine functions on different complexes");
  }
  std::map<Simplex, Int> w;
  for (const auto& [s, v] : weights_) w[s] = checked_mul(a, v);
  for (const auto& [s, v] : other.weights_) {
    w[s] = checked_add(w[s], checked_mul(b, v));
  }
  return SimplicialConstructibleFunction(host_, std::move(w));
}

bool operator==(const SimplicialConstructibleFunction& x,
                const SimplicialConstructibleFunction& y) {
  return same_complex(*x.host_, *y.host_) && x.weights_ == y.weights_;
}

SimplicialMap::SimplicialMap(std::shared_ptr<const SimplicialComplex> source,
                             std::shared_ptr<const SimplicialComplex> target,
                             std::map<Vertex, Vertex> vertex_map)
    : source_(std::move(source)),
      target_(std::move(target)),
      vertex_map_(std::move(vertex_map)) {
  for (const auto v : source_->vertices()) {
    if (!vertex_map_.count(v)) {
      throw InvalidMap("source vertex " + std::to_string(v) + " is unmapped");
    }
  }
  for (const auto& s : source_->simplices()) {
    const Simplex img = image(s);
    if (!target_->contains(img)) {
      throw InvalidMap("image " + img.to_string() + " of " + s.to_string() +
                       " is not a simplex of the target");
    }
  }
}

Simplex SimplicialMap::image(const Simplex& s) const {
  std::vector<Vertex> img;
  img.reserve(s.vertices().size());
  for (const auto v : s.vertices()) {
    auto it = vertex_map_.find(v);
    if (it == vertex_map_.end()) {
      throw InvalidMap("vertex " + std::to_string(v) + " is unmapped");
    }
    img.push_back(it->second);
  }
  return Simplex::from_unsorted(std::move(img));
}

SimplicialMap SimplicialMap::after(const SimplicialMap& first) const {
  if (!same_complex(first.target(), source())) {
    throw InvalidMap("maps are not composable");
  }
  std::map<Vertex, Vertex> composed;
  for (const auto& [v, w] : first.vertex_map()) {
    auto it = vertex_map_.find(w);
    if (it != vertex_map_.end()) composed.emplace(v, it->second);
  }
  return SimplicialMap(first.source_ptr(), target_, std::move(composed));
}

Int integrate(const SimplicialConstructibleFunction& alpha,
              const SimplexSubset& w) {
  if (!same_complex(alpha.host(), w.host())) {
    throw HostMismatch("subset and function live on different complexes");
  }
  Int total = 0;
  for (const auto& s : w.members()) {
    total = checked_add(total, checked_mul(alpha(s), sign_power(s.dim())));
  }
  return total;
}

Int integrate(const SimplicialConstructibleFunction& alpha) {
  Int total = 0;
  for (const auto& [s, v] : alpha.weights()) {
    total = checked_add(total, checked_mul(v, sign_power(s.dim())));
  }
  return total;
}

SimplicialConstructibleFunction pushforward(
    const SimplicialMap& f, const SimplicialConstructibleFunction& alpha) {
  if (!same_complex(alpha.host(), f.source())) {
    throw HostMismatch("function is not hosted on the map's source");
  }
  // The fiber of f|s over an interior point of f(s) is an open cell of
  // dimension dim s - dim f(s).
  std::map<Simplex, Int> out;
  for (const auto& [s, v] : alpha.weights()) {
    const Simplex t = f.image(s);
    out[t] = checked_add(out[t], checked_mul(v, sign_power(s.dim() - t.dim())));
  }
  return SimplicialConstructibleFunction(f.target_ptr(), std::move(out));
}

FubiniReport check_fubini(const SimplicialMap& f,
                          const SimplicialConstructibleFunction& alpha) {
  const Int lhs = integrate(pushforward(f, alpha),
                            SimplexSubset::whole(f.target()));
  const Int rhs = integrate(alpha, SimplexSubset::whole(f.source()));
  return {lhs, rhs, lhs == rhs};
}

}  // namespace strateuler
