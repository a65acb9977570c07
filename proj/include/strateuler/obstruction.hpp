/// @file obstruction.hpp
/// @brief Local Euler obstruction tables from complex-link data, and the
///        global Euler obstruction.
///
/// The Euler obstructions Eu_{closure V_j} are the basis of stratum-constructible
/// functions dual to the normal Morse indices:
///
///     eta(V', Eu_{closure V_j}) = 1 if V' = V_j, 0 otherwise.
///
/// Writing Eu_{closure V_j} = sum_i C[i][j] 1_{closure V_i} turns this into
/// M C = I with M = eta_closure_matrix. M is unitriangular, so C is its exact
/// integer inverse.

#pragma once

#include <string>
#include <vector>

#include "strateuler/integer_matrix.hpp"
#include "strateuler/report.hpp"
#include "strateuler/strata.hpp"

namespace strateuler {

struct EulerObstructionTable {
  std::vector<std::string> ids;  ///< canonical stratum order of the census
  IntMatrix closure_coeffs;      ///< C, with Eu_{closure V_j} = sum_i C[i][j] 1_{closure V_i}
  IntMatrix values;              ///< E[k][j] = Eu_{closure V_j}(V_k); zero unless V_k <= V_j
  std::size_t top = 0;

  /// Eu_{closure V_j} as a dense stratum function.
  std::vector<Int> eu_of_closure(std::size_t j) const;
  /// Eu_X, the obstruction of the whole set.
  std::vector<Int> eu_x() const { return eu_of_closure(top); }
  Int eu_x_at(std::size_t k) const { return values(k, top); }
};

/// Throws MissingLinkEntry.
EulerObstructionTable solve_bdk(const StratifiedCensus& census);

/// Eu(X) = chi(X, Eu_X). Throws NotEquidimensional unless the census flag is
/// set.
Int global_euler_obstruction(const StratifiedCensus& census,
                             const EulerObstructionTable& table);
Int global_euler_obstruction(const StratifiedCensus& census);

/// Index formula at a point stratum q:
///     1 = sum_i Eu_{closure V_i}(q) (1 - chi(L_{V_i}^X)).
/// lhs is 1. Throws NotAPointStratum.
IdentityReport check_bdk_point_formula(const StratifiedCensus& census,
                                       const EulerObstructionTable& table,
                                       const std::string& point_stratum);

/// Prints the table with stratum labels, rows V_k and columns closure(V_j).
std::string format_table(const EulerObstructionTable& table);

}  // namespace strateuler
