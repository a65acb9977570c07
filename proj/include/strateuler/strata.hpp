/// @file strata.hpp
/// @brief The finite fingerprint of a Whitney-stratified complex algebraic
///        set: stratum poset, Euler characteristics, complex-link data,
///        stratum-level constructible functions and the normal Morse index.
///
/// Strata are kept in a fixed linear extension of the frontier order, sorted
/// by (complex dimension, id). Every matrix indexed by strata uses that order,
/// so matrices supported on comparable pairs are upper triangular.
///
/// Complex-link Euler characteristics are input data. The link table stores
/// chi(L_{V_i} ∩ closure(V_j)) for every strict pair V_i < V_j. Normal Morse
/// indices of closure indicator functions follow from it:
///
///     eta(V', 1_{closure V_j}) = 1                             if V' = V_j
///                              = 1 - chi(L_{V'} ∩ closure V_j)  if V' < V_j
///                              = 0                              otherwise.
///
/// The zero on incomparable pairs follows the support of 1_{closure V_j}.

#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "strateuler/checked.hpp"
#include "strateuler/integer_matrix.hpp"

namespace strateuler {

struct Stratum {
  std::string id;
  int dim = 0;       ///< complex dimension
  Int chi = 0;       ///< chi(V_i), equal to chi_c for complex algebraic strata
  bool regular_part = false;
};

struct LinkEntry {
  std::string at;          ///< V_i
  std::string in_closure;  ///< V_j, with V_i < V_j
  Int chi = 0;             ///< chi(L_{V_i} ∩ closure(V_j))
};

/// Integer values on open strata, keyed by stratum id; absent ids are zero.
using StratumFunction = std::map<std::string, Int>;

class StratifiedCensus {
 public:
  StratifiedCensus() = default;

  /// Validates and canonicalizes. `order` lists pairs (a, b) meaning
  /// a ⊂ closure(b) \ b; it is closed transitively. Throws InvalidCensus on
  /// duplicate ids, cycles, dimension violations, a missing or non-maximal
  /// regular part, or a link entry keyed on a non-order pair; UnknownStratum
  /// for ids not declared in `strata`. Missing link entries are allowed here
  /// and reported as MissingLinkEntry by the operations that need them.
  StratifiedCensus(std::string name, std::vector<Stratum> strata,
                   const std::vector<std::pair<std::string, std::string>>& order,
                   const std::vector<LinkEntry>& links, bool equidimensional);

  const std::string& name() const noexcept { return name_; }
  bool equidimensional() const noexcept { return equidimensional_; }
  std::size_t size() const noexcept { return strata_.size(); }
  const std::vector<Stratum>& strata() const noexcept { return strata_; }
  const Stratum& stratum(std::size_t i) const { return strata_.at(i); }

  /// Throws UnknownStratum.
  std::size_t index_of(const std::string& id) const;
  bool has_stratum(const std::string& id) const { return index_.count(id) != 0; }

  /// Index of the regular part, the unique maximal stratum.
  std::size_t top() const noexcept { return top_; }
  /// Complex dimension of the set, the dimension of its regular part.
  int dim() const { return strata_[top_].dim; }

  /// Strict frontier order V_i < V_j.
  bool less(std::size_t i, std::size_t j) const { return less_[i][j]; }
  bool leq(std::size_t i, std::size_t j) const { return i == j || less_[i][j]; }

  bool has_link(std::size_t i, std::size_t j) const {
    return links_.count({i, j}) != 0;
  }
  /// chi(L_{V_i} ∩ closure(V_j)); throws MissingLinkEntry.
  Int link(std::size_t i, std::size_t j) const;
  /// chi of the complex link of V_i in the whole set; 0 for the regular part.
  Int link_in_whole(std::size_t i) const;

  /// All strict order pairs (transitively closed), by id.
  std::vector<std::pair<std::string, std::string>> order_pairs() const;
  std::vector<LinkEntry> link_entries() const;

  /// Dense vector in canonical order; throws UnknownStratum on foreign keys.
  std::vector<Int> dense(const StratumFunction& alpha) const;
  StratumFunction sparse(const std::vector<Int>& values) const;

  /// The indicator 1_X, as a dense vector.
  std::vector<Int> one() const { return std::vector<Int>(size(), 1); }
  /// The indicator of closure(V_j), as a dense vector.
  std::vector<Int> closure_indicator(std::size_t j) const;

 private:
  std::string name_;
  std::vector<Stratum> strata_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::vector<bool>> less_;
  std::map<std::pair<std::size_t, std::size_t>, Int> links_;
  std::size_t top_ = 0;
  bool equidimensional_ = false;
};

/// M[V'][j] = eta(V', 1_{closure V_j}); unitriangular in canonical order.
/// Throws MissingLinkEntry(i, j).
IntMatrix eta_closure_matrix(const StratifiedCensus& census);

/// Zeta matrix of the poset: Z[i][k] = 1 iff V_i <= V_k.
IntMatrix zeta_matrix(const StratifiedCensus& census);

/// Möbius function of the poset, the inverse of the zeta matrix.
IntMatrix mobius_matrix(const StratifiedCensus& census);

/// Coefficients a_k with alpha = sum_k a_k 1_{closure V_k}.
std::vector<Int> to_closure_basis(const StratifiedCensus& census,
                                  const std::vector<Int>& alpha);
/// Inverse of to_closure_basis.
std::vector<Int> from_closure_basis(const StratifiedCensus& census,
                                    const std::vector<Int>& coeffs);

/// Normal Morse index eta(V, alpha).
Int eta(const StratifiedCensus& census, std::size_t v,
        const std::vector<Int>& alpha);
Int eta(const StratifiedCensus& census, const std::string& v,
        const StratumFunction& alpha);

/// chi(X, alpha) = sum_i alpha_i chi(V_i).
Int chi_global(const StratifiedCensus& census, const std::vector<Int>& alpha);
Int chi_global(const StratifiedCensus& census, const StratumFunction& alpha);

/// Census of closure(V_j): strata V_i <= V_j with their links; V_j becomes
/// the regular part. Closures of connected strata are irreducible, hence
/// equidimensional; restricting to the regular part keeps the input flag.
StratifiedCensus restrict_to_closure(const StratifiedCensus& census,
                                     const std::string& j);

}  // namespace strateuler
