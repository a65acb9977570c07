/// @file simplicial.hpp
/// @brief Finite abstract simplicial complexes and exact Euler characteristics.
///
/// A complex is a face-closed set of simplices over opaque, totally ordered
/// vertex labels. A SimplexSubset is any subset of a host complex's simplices;
/// it need not be face-closed, so it models a locally closed union of open
/// simplices and its compactly supported Euler characteristic is the
/// alternating count of its members.

#pragma once

#include <cstddef>
#include <initializer_list>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "strateuler/checked.hpp"

namespace strateuler {

using Vertex = std::int64_t;

/// Largest simplex dimension accepted by constructors and loaders.
inline constexpr int kMaxSimplexDim = 8;

/// A non-empty, strictly increasing list of vertices.
class Simplex {
 public:
  /// Throws std::invalid_argument unless `vertices` is non-empty and strictly
  /// increasing, DimensionCapExceeded above kMaxSimplexDim.
  explicit Simplex(std::vector<Vertex> vertices);
  Simplex(std::initializer_list<Vertex> vertices)
      : Simplex(std::vector<Vertex>(vertices)) {}

  /// Sorts and deduplicates first; used for images under vertex maps.
  static Simplex from_unsorted(std::vector<Vertex> vertices);

  int dim() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }

  /// Codimension-one faces; empty for a vertex.
  std::vector<Simplex> facets() const;
  /// All non-empty faces, including the simplex itself.
  std::vector<Simplex> faces() const;

  std::string to_string() const;

  friend auto operator<=>(const Simplex&, const Simplex&) = default;

 private:
  std::vector<Vertex> vertices_;
};

/// A missing face reported by validate().
struct FaceGap {
  Simplex simplex;
  Simplex missing_face;
};

class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Builds the complex from a set of simplices that must already be
  /// face-closed. Throws FaceClosureViolation listing the gaps otherwise.
  explicit SimplicialComplex(std::set<Simplex> simplices);

  /// Smallest complex containing every given simplex.
  static SimplicialComplex closure_of(const std::vector<Simplex>& generators);

  const std::set<Simplex>& simplices() const noexcept { return simplices_; }
  std::size_t size() const noexcept { return simplices_.size(); }
  bool contains(const Simplex& s) const { return simplices_.count(s) != 0; }
  std::vector<Vertex> vertices() const;
  int dim() const;

  /// Ordinary Euler characteristic, the alternating face count.
  Int euler_characteristic() const;

  bool is_subcomplex_of(const SimplicialComplex& other) const;

 private:
  std::set<Simplex> simplices_;
};

/// Lists every (simplex, missing facet) pair; empty means face-closed.
std::vector<FaceGap> find_face_gaps(const std::set<Simplex>& simplices);

/// Throws FaceClosureViolation if `simplices` is not closed under faces.
void validate(const std::set<Simplex>& simplices);

/// Subset of a host complex's simplices. Not required to be face-closed.
class SimplexSubset {
 public:
  /// Throws MemberNotInHost if some member is not a simplex of `host`.
  SimplexSubset(const SimplicialComplex& host, std::set<Simplex> members);

  /// The whole host.
  static SimplexSubset whole(const SimplicialComplex& host);

  const SimplicialComplex& host() const noexcept { return *host_; }
  const std::set<Simplex>& members() const noexcept { return members_; }

  /// Face closure of the members, as a subset of the same host.
  SimplexSubset closure() const;
  bool is_face_closed() const;

 private:
  const SimplicialComplex* host_;
  std::set<Simplex> members_;
};

/// Compactly supported Euler characteristic: sum over members of (-1)^dim.
Int chi_c(const SimplexSubset& subset);

/// chi(complex) - chi(boundary), which is chi_c(complex \ boundary).
/// Throws NotASubcomplex unless `boundary` is a face-closed subset of
/// `complex`.
Int chi_rel(const SimplicialComplex& complex,
            const SimplicialComplex& boundary);

/// Staircase triangulation of |a| x |b|. Product vertices are numbered
/// pairwise as index_a * (#vertices of b) + index_b, where index_x is the
/// position of the vertex in x's sorted vertex list.
SimplicialComplex product(const SimplicialComplex& a,
                          const SimplicialComplex& b);

}  // namespace strateuler
