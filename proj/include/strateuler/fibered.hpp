/// @file fibered.hpp
/// @brief Global Brasselet numbers, invariants at infinity and the
///        critical-point identities of a polynomial function on a stratified
///        algebraic set.
///
/// A FiberedCensus extends a StratifiedCensus with data about f : X -> C:
///
///   - special values A (critical values and asymptotically irregular values)
///     and the distinguished label "generic";
///   - fiber_chi[i][a]    = chi(V_i ∩ f^{-1}(a)), for a in A and "generic";
///   - infinity_chi[i][a] = lim_{c->a} chi(V_i ∩ f^{-1}(c) ∩ {rho_E >= R_a}),
///     zero when absent;
///   - critical points q_j with the Morse counts n_ij of a Morsefication
///     near q_j lying on V_i.
///
/// Values outside A behave like "generic": fiber Euler characteristics are
/// constant off A, and invariants at infinity vanish there.
///
/// Numeric fields may be blank (JSON null). Anything that reads a blank field
/// throws InsufficientData naming every blank it touched; solve_unknown
/// recovers a single blank from one identity.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "strateuler/obstruction.hpp"
#include "strateuler/report.hpp"
#include "strateuler/strata.hpp"

namespace strateuler {

inline const std::string kGeneric = "generic";

using OptInt = std::optional<Int>;
/// stratum id -> value label -> entry (nullopt = blank)
using StratumValueTable = std::map<std::string, std::map<std::string, OptInt>>;

struct CriticalPoint {
  std::string id;
  std::string stratum;  ///< stratum containing q_j
  std::string value;    ///< label of f(q_j), a member of A
  /// n_ij by stratum id; absent = 0, nullopt = blank.
  std::map<std::string, OptInt> morse_counts;
  /// Eu_{f^{-1}(a)}(q_j); nullopt when not supplied.
  OptInt eu_fiber_at_q;
  /// mu(f|V_i, q_j) by stratum id, when known.
  std::optional<std::map<std::string, OptInt>> milnor_numbers;
};

class FiberedCensus {
 public:
  /// Validates the fibration data against `base`. Throws UnknownStratum,
  /// UnknownValueLabel (data keyed by a label outside A ∪ {generic}),
  /// InvalidCensus (missing generic column, duplicate ids, Morse counts on
  /// strata whose closure misses q_j, negative counts, '/' in ids).
  FiberedCensus(StratifiedCensus base, std::vector<std::string> special_values,
                StratumValueTable fiber_chi, StratumValueTable infinity_chi,
                std::vector<CriticalPoint> critical_points, bool f_general,
                std::map<std::string, StratifiedCensus> fiber_censuses = {});

  const StratifiedCensus& base() const noexcept { return base_; }
  const std::vector<std::string>& special_values() const noexcept {
    return special_values_;
  }
  const StratumValueTable& fiber_chi() const noexcept { return fiber_chi_; }
  const StratumValueTable& infinity_chi() const noexcept { return infinity_chi_; }
  const std::vector<CriticalPoint>& critical_points() const noexcept {
    return critical_points_;
  }
  bool f_general() const noexcept { return f_general_; }
  /// Censuses of special fibers f^{-1}(a), keyed by value label.
  const std::map<std::string, StratifiedCensus>& fiber_censuses() const noexcept {
    return fiber_censuses_;
  }

  bool is_special(const std::string& value) const;
  /// `value` if it is special or "generic", otherwise "generic".
  const std::string& resolve(const std::string& value) const;
  /// Throws UnknownCriticalPoint.
  const CriticalPoint& critical_point(const std::string& id) const;

  /// Field paths name single numeric slots:
  ///   fiber_chi/<stratum>/<value>      infinity_chi/<stratum>/<value>
  ///   morse_counts/<q>/<stratum>       milnor_numbers/<q>/<stratum>
  ///   eu_fiber_at_q/<q>
  /// Absent infinity_chi and morse_counts entries read as 0.
  OptInt field(const std::string& path) const;
  /// Writes a slot (nullopt blanks it). Throws std::invalid_argument on a
  /// malformed path or unknown ids.
  void set_field(const std::string& path, OptInt value);
  /// Every slot stored explicitly in the census, blank or not.
  std::vector<std::string> field_paths() const;
  std::vector<std::string> blank_fields() const;

 private:
  StratifiedCensus base_;
  std::vector<std::string> special_values_;
  StratumValueTable fiber_chi_;
  StratumValueTable infinity_chi_;
  std::vector<CriticalPoint> critical_points_;
  bool f_general_ = false;
  std::map<std::string, StratifiedCensus> fiber_censuses_;
};

/// chi(f^{-1}(a), alpha) = sum_i alpha_i fiber_chi[i][a].
Int brasselet(const FiberedCensus& c, const std::string& value,
              const std::vector<Int>& alpha);
Int brasselet(const FiberedCensus& c, const std::string& value,
              const StratumFunction& alpha);
/// B_{f,a}^X = chi(f^{-1}(a), Eu_X). Throws NotEquidimensional.
Int global_brasselet(const FiberedCensus& c, const std::string& value);
/// Eu_{f,a}^X = Eu(X) - B_{f,a}^X.
Int eu_of_f_at(const FiberedCensus& c, const std::string& value);

/// B_{f,a}^{X,inf}(alpha) = sum_i alpha_i infinity_chi[i][a]; 0 for a not in A.
Int brasselet_infinity(const FiberedCensus& c, const std::string& value,
                       const std::vector<Int>& alpha);
/// B_f^{X,inf}(alpha), summed over A.
Int brasselet_infinity_total(const FiberedCensus& c,
                             const std::vector<Int>& alpha);
Int lambda_infinity(const FiberedCensus& c, const std::string& value);
Int lambda_infinity_total(const FiberedCensus& c);
/// Brasselet numbers at infinity, alpha = Eu_X. Throw NotEquidimensional.
Int binf(const FiberedCensus& c, const std::string& value);
Int binf_total(const FiberedCensus& c);

/// 1 - chi(local Milnor fiber of f at q) = sum_i (-1)^{d_i} n_iq (1 - chi(L_{V_i}^X)).
Int local_fiber_defect(const FiberedCensus& c, const std::string& q);

/// Eu_{f, closure V_j'}(q) = (-1)^{d_j'} n_{j'q}. Throws PointNotInClosure.
Int eu_of_function_local(const FiberedCensus& c, const std::string& q,
                         const std::string& closure);

/// The fibration restricted to closure(V_j): strata, fiber data and Morse
/// counts of the sub-poset; critical points off the closure are dropped.
FiberedCensus restrict_to_closure(const FiberedCensus& c, const std::string& j);

/// Labels a in A with some nonzero infinity_chi[i][a], sorted. One-sided: a
/// value regular at infinity is never flagged, the converse is not claimed.
/// Throws InsufficientData when a blank entry could change the answer.
std::vector<std::string> detect_irregular_values(const FiberedCensus& c);

// ---------------------------------------------------------------------------
// Identity verifiers

enum class Identity {
  prop_brasselet_vs_fiber_eu,
  bdk_global_1,
  thm_generic_fiber,
  cor_constructible,
  cor_equi,
  bdk_global_2,
  bdk_global_3,
  prop_any_value,
  cor_generic_vs_any,
  value_consistency,
};

/// In the fixed reporting order.
const std::vector<Identity>& all_identities();
std::string identity_name(Identity id);
/// Throws UnknownIdentity.
Identity identity_from_name(const std::string& name);

struct IdentityParams {
  std::string value = kGeneric;  ///< a, for per-value identities
  std::vector<Int> alpha;        ///< dense; empty means 1_X
  std::string alpha_label = "1_X";
  bool milnor_variant = false;   ///< use mu^T in place of Morse counts

  static IdentityParams at(std::string value) {
    IdentityParams p;
    p.value = std::move(value);
    return p;
  }
  IdentityParams& with_alpha(std::vector<Int> a, std::string label) {
    alpha = std::move(a);
    alpha_label = std::move(label);
    return *this;
  }
};

/// Eu_X as an alpha; throws NotEquidimensional.
std::vector<Int> eu_alpha(const FiberedCensus& c);

/// Evaluates both sides of one identity instance from census data.
/// Throws InsufficientData, NotEquidimensional, MissingLinkEntry.
IdentityReport evaluate(const FiberedCensus& c, Identity id,
                        const IdentityParams& params);

/// Every applicable instance of one identity: per special value, for
/// alpha in {1_X, Eu_X}, and the Milnor-number variant when f is general.
/// Instances lacking data become skipped rows.
std::vector<IdentityReport> check_identity(const FiberedCensus& c, Identity id);
std::vector<IdentityReport> check_all(const FiberedCensus& c);

/// Maps "lambda_total" to the unique blank infinity_chi slot and "n_t" to the
/// unique blank Morse count on the regular part; other names pass through.
std::string resolve_unknown_field(const FiberedCensus& c,
                                  const std::string& field);

/// The value of the blank `field` that makes the identity instance hold.
/// Throws NotSolvable when the field is not blank, other needed fields are
/// blank, the identity does not depend on the field, or it is not linear in
/// it with an integer solution.
Int solve_unknown(const FiberedCensus& c, Identity id,
                  const IdentityParams& params, const std::string& field);

}  // namespace strateuler
