#include "strateuler/obstruction.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace strateuler {

std::vector<Int> EulerObstructionTable::eu_of_closure(std::size_t j) const {
  std::vector<Int> out(values.rows());
  for (std::size_t k = 0; k < values.rows(); ++k) out[k] = values(k, j);
  return out;
}

EulerObstructionTable solve_bdk(const StratifiedCensus& census) {
  EulerObstructionTable t;
  for (const auto& s : census.strata()) t.ids.push_back(s.id);
  t.top = census.top();
  t.closure_coeffs = invert_upper_unitriangular(eta_closure_matrix(census));
  // Eu_{closure V_j}(V_k) sums the coefficients of closures containing V_k.
  t.values = zeta_matrix(census) * t.closure_coeffs;
  return t;
}

Int global_euler_obstruction(const StratifiedCensus& census,
                             const EulerObstructionTable& table) {
  if (!census.equidimensional()) {
    throw NotEquidimensional("census '" + census.name() +
                             "' is not flagged equidimensional");
  }
  return chi_global(census, table.eu_x());
}

Int global_euler_obstruction(const StratifiedCensus& census) {
  return global_euler_obstruction(census, solve_bdk(census));
}

IdentityReport check_bdk_point_formula(const StratifiedCensus& census,
                                       const EulerObstructionTable& table,
                                       const std::string& point_stratum) {
  const std::size_t q = census.index_of(point_stratum);
  if (census.stratum(q).dim != 0) {
    throw NotAPointStratum(point_stratum + " has dimension " +
                           std::to_string(census.stratum(q).dim));
  }
  Int rhs = 0;
  for (std::size_t i = 0; i < census.size(); ++i) {
    if (!census.leq(q, i)) continue;
    const Int weight = checked_sub(1, census.link_in_whole(i));
    rhs = checked_add(rhs, checked_mul(table.values(q, i), weight));
  }
  return IdentityReport::compare("bdk_point_formula", "q=" + point_stratum, 1,
                                 rhs);
}

std::string format_table(const EulerObstructionTable& table) {
  std::size_t width = 4;
  for (const auto& id : table.ids) width = std::max(width, id.size() + 5);
  for (std::size_t k = 0; k < table.values.rows(); ++k) {
    for (std::size_t j = 0; j < table.values.cols(); ++j) {
      width = std::max(width, std::to_string(table.values(k, j)).size() + 1);
    }
  }
  std::ostringstream os;
  os << std::setw(static_cast<int>(width)) << "";
  for (const auto& id : table.ids) {
    os << ' ' << std::setw(static_cast<int>(width)) << ("cl(" + id + ")");
  }
  os << '\n';
  for (std::size_t k = 0; k < table.values.rows(); ++k) {
    os << std::setw(static_cast<int>(width)) << table.ids[k];
    for (std::size_t j = 0; j < table.values.cols(); ++j) {
      os << ' ' << std::setw(static_cast<int>(width)) << table.values(k, j);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace strateuler
