/// @file polar.hpp
/// @brief Brasselet numbers from global polar intersection multiplicities.
///
/// Polar numbers are inputs. For a generic linear form l and a value a,
///
///     gamma[a] = [ gamma_a^(d-1), ..., gamma_a^(0) ]
///
/// where gamma_a^(d-i) is the intersection number of the relative polar curve
/// of (f, l) on X ∩ H^{i-1} with the fiber over a, H a generic hyperplane.
/// alpha = [ alpha^(0), ..., alpha^(d) ] counts Morse points of l on the
/// regular parts of successive slices.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "strateuler/fibered.hpp"
#include "strateuler/report.hpp"

namespace strateuler {

struct PolarData {
  int d = 0;
  std::map<std::string, std::vector<Int>> gamma;
  std::optional<std::vector<Int>> alpha;

  /// Throws InvalidCensus on wrong lengths or negative entries.
  void validate() const;
  /// gamma_a^(k); throws MissingPolarData.
  Int gamma_at(const std::string& value, int k) const;
};

/// sum_{i=1}^d (-1)^{d-i} gamma_a^(d-i) + sum_{f(q)=a} Eu_{f,X}(q).
/// Values outside A use the generic column. Throws MissingPolarData,
/// InsufficientData.
Int brasselet_from_polar(const FiberedCensus& c, const PolarData& polar,
                         const std::string& value);

/// sum_{i=1}^d (-1)^{d-i} (gamma_c^(d-i) - gamma_a^(d-i)).
Int infinity_from_polar(const FiberedCensus& c, const PolarData& polar,
                        const std::string& value);

/// sum_i (-1)^i alpha^(i) against Eu(X).
IdentityReport stv_global_eu(const FiberedCensus& c, const PolarData& polar);

/// B_a^X - B_a^{X∩H} against (-1)^{d-1} gamma_a^(d-1) + sum_{f(q)=a} Eu_{f,X}(q).
/// `section` may be null only when d = 1, where B^{X∩H} = 0.
IdentityReport hyperplane_step(const FiberedCensus& x, const FiberedCensus* section,
                               const PolarData& polar, const std::string& value);

/// polar_brasselet and polar_infinity rows per value, stv_global_eu when alpha
/// is present, hyperplane_step rows when a section is given (or d = 1).
std::vector<IdentityReport> polar_checks(const FiberedCensus& c,
                                         const PolarData& polar,
                                         const FiberedCensus* section = nullptr);

}  // namespace strateuler
