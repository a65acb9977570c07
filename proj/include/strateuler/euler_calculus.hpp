/// @file euler_calculus.hpp
/// @brief Integration against Euler characteristic and pushforward along
///        simplicial maps.
///
/// A constructible function on a complex assigns an integer to each open
/// simplex. Its integral over a subset W is sum_{s in W} alpha(s) (-1)^dim s.
/// The pushforward evaluates, on each target simplex, the integral over the
/// fiber above an interior point of that simplex.

#pragma once

#include <map>
#include <memory>

#include "strateuler/simplicial.hpp"

namespace strateuler {

/// Integer weights on open simplices of a host; absent keys weigh zero.
class SimplicialConstructibleFunction {
 public:
  /// Throws HostMismatch if a keyed simplex is not in `host`.
  SimplicialConstructibleFunction(std::shared_ptr<const SimplicialComplex> host,
                                  std::map<Simplex, Int> weights);

  /// The constant function `value` on every simplex of `host`.
  static SimplicialConstructibleFunction constant(
      std::shared_ptr<const SimplicialComplex> host, Int value);

  const SimplicialComplex& host() const noexcept { return *host_; }
  const std::shared_ptr<const SimplicialComplex>& host_ptr() const noexcept {
    return host_;
  }
  const std::map<Simplex, Int>& weights() const noexcept { return weights_; }
  Int operator()(const Simplex& s) const;

  /// a*this + b*other; both must share a host.
  SimplicialConstructibleFunction combine(Int a, Int b,
      const SimplicialConstructibleFunction& other) const;

  friend bool operator==(const SimplicialConstructibleFunction& x,
                         const SimplicialConstructibleFunction& y);

 private:
  std::shared_ptr<const SimplicialComplex> host_;
  std::map<Simplex, Int> weights_;  // zero weights are dropped
};

class SimplicialMap {
 public:
  /// Throws InvalidMap if a source vertex is unmapped, or if the image of a
  /// source simplex is not a simplex of the target.
  SimplicialMap(std::shared_ptr<const SimplicialComplex> source,
                std::shared_ptr<const SimplicialComplex> target,
                std::map<Vertex, Vertex> vertex_map);

  const SimplicialComplex& source() const noexcept { return *source_; }
  const SimplicialComplex& target() const noexcept { return *target_; }
  const auto& source_ptr() const noexcept { return source_; }
  const auto& target_ptr() const noexcept { return target_; }
  const std::map<Vertex, Vertex>& vertex_map() const noexcept {
    return vertex_map_;
  }

  Simplex image(const Simplex& s) const;

  /// this after `first`: x -> this(first(x)). Throws InvalidMap if the
  /// target of `first` is not this map's source.
  SimplicialMap after(const SimplicialMap& first) const;

 private:
  std::shared_ptr<const SimplicialComplex> source_;
  std::shared_ptr<const SimplicialComplex> target_;
  std::map<Vertex, Vertex> vertex_map_;
};

/// chi(W, alpha). Throws HostMismatch if W lives on a different complex.
Int integrate(const SimplicialConstructibleFunction& alpha,
              const SimplexSubset& w);

/// Integral over the whole host.
Int integrate(const SimplicialConstructibleFunction& alpha);

/// f_* alpha: on target simplex t, sum over s with f(s) = t of
/// alpha(s) (-1)^(dim s - dim t).
SimplicialConstructibleFunction pushforward(
    const SimplicialMap& f, const SimplicialConstructibleFunction& alpha);

struct FubiniReport {
  Int lhs;  ///< chi(target, f_* alpha)
  Int rhs;  ///< chi(source, alpha)
  bool ok;
};

FubiniReport check_fubini(const SimplicialMap& f,
                          const SimplicialConstructibleFunction& alpha);

}  // namespace strateuler
