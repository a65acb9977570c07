#include "strateuler/fibered.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace strateuler {

namespace {

std::vector<std::string> split_path(const std::string& path) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : path) {
    if (ch == '/') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  return parts;
}

void check_id(const std::string& id, const std::string& what) {
  if (id.empty()) throw InvalidCensus("empty " + what);
  if (id.find('/') != std::string::npos) {
    throw InvalidCensus(what + " '" + id + "' contains '/'");
  }
}

void require_equidimensional(const FiberedCensus& c) {
  if (!c.base().equidimensional()) {
    throw NotEquidimensional("census '" + c.base().name() +
                             "' is not flagged equidimensional");
  }
}

// Reads census fields, collecting the paths of blank ones so a single
// InsufficientData can name all of them.
class Reader {
 public:
  explicit Reader(const FiberedCensus& c) : c_(c) {}

  Int fiber(std::size_t i, const std::string& value) {
    const auto& id = c_.base().stratum(i).id;
    const auto& v = c_.resolve(value);
    auto row = c_.fiber_chi().find(id);
    if (row != c_.fiber_chi().end()) {
      auto it = row->second.find(v);
      if (it != row->second.end() && it->second) return *it->second;
    }
    return missing("fiber_chi/" + id + "/" + v);
  }

  Int infinity(std::size_t i, const std::string& value) {
    if (!c_.is_special(value)) return 0;
    const auto& id = c_.base().stratum(i).id;
    auto row = c_.infinity_chi().find(id);
    if (row == c_.infinity_chi().end()) return 0;
    auto it = row->second.find(value);
    if (it == row->second.end()) return 0;
    if (it->second) return *it->second;
    return missing("infinity_chi/" + id + "/" + value);
  }

  Int morse(const CriticalPoint& q, std::size_t i) {
    const auto& id = c_.base().stratum(i).id;
    auto it = q.morse_counts.find(id);
    if (it == q.morse_counts.end()) return 0;
    if (it->second) return *it->second;
    return missing("morse_counts/" + q.id + "/" + id);
  }

  /// mu(f|V, q) on the stratum V containing q.
  Int milnor(const CriticalPoint& q) {
    if (q.milnor_numbers) {
      auto it = q.milnor_numbers->find(q.stratum);
      if (it != q.milnor_numbers->end() && it->second) return *it->second;
    }
    return missing("milnor_numbers/" + q.id + "/" + q.stratum);
  }

  Int eu_fiber(const CriticalPoint& q) {
    if (q.eu_fiber_at_q) return *q.eu_fiber_at_q;
    return missing("eu_fiber_at_q/" + q.id);
  }

  const StratifiedCensus* fiber_census(const std::string& value) {
    const auto& v = c_.resolve(value);
    auto it = c_.fiber_censuses().find(v);
    if (it != c_.fiber_censuses().end()) return &it->second;
    missing("fiber_censuses/" + v);
    return nullptr;
  }

  void done() const {
    if (missing_.empty()) return;
    throw InsufficientData(
        std::vector<std::string>(missing_.begin(), missing_.end()));
  }

 private:
  Int missing(std::string path) {
    missing_.insert(std::move(path));
    return 0;
  }

  const FiberedCensus& c_;
  std::set<std::string> missing_;
};

// Eu_{closure V_j} as a dense function on the whole census, solved on the
// restricted census of the closure.
std::vector<Int> closure_obstruction(const StratifiedCensus& base,
                                     std::size_t j) {
  const auto sub = restrict_to_closure(base, base.stratum(j).id);
  const auto table = solve_bdk(sub);
  std::vector<Int> out(base.size(), 0);
  for (std::size_t k = 0; k < sub.size(); ++k) {
    out[base.index_of(sub.stratum(k).id)] = table.eu_x_at(k);
  }
  return out;
}

std::vector<Int> one_if_empty(const FiberedCensus& c,
                              const std::vector<Int>& alpha) {
  if (alpha.empty()) return c.base().one();
  if (alpha.size() != c.base().size()) {
    throw std::invalid_argument("alpha has the wrong number of strata");
  }
  return alpha;
}

Int fiber_integral(Reader& r, const FiberedCensus& c, const std::string& value,
                   const std::vector<Int>& alpha) {
  Int total = 0;
  for (std::size_t i = 0; i < c.base().size(); ++i) {
    const Int f = r.fiber(i, value);
    total = checked_add(total, checked_mul(alpha[i], f));
  }
  return total;
}

Int infinity_integral(Reader& r, const FiberedCensus& c,
                      const std::string& value, const std::vector<Int>& alpha) {
  Int total = 0;
  for (std::size_t i = 0; i < c.base().size(); ++i) {
    total = checked_add(total, checked_mul(alpha[i], r.infinity(i, value)));
  }
  return total;
}

Int infinity_total(Reader& r, const FiberedCensus& c,
                   const std::vector<Int>& alpha) {
  Int total = 0;
  for (const auto& a : c.special_values()) {
    total = checked_add(total, infinity_integral(r, c, a, alpha));
  }
  return total;
}

enum class ValueFilter { all, equal, not_equal };

bool passes(const CriticalPoint& q, ValueFilter filter,
            const std::string& value) {
  switch (filter) {
    case ValueFilter::all: return true;
    case ValueFilter::equal: return q.value == value;
    case ValueFilter::not_equal: return q.value != value;
  }
  return true;
}

// Critical points of the Morsefication on V_i near the selected q_j, or the
// total Milnor number of f|V_i over the selected q_j in V_i.
Int critical_count(Reader& r, const FiberedCensus& c, std::size_t i,
                   bool milnor, ValueFilter filter = ValueFilter::all,
                   const std::string& value = {}) {
  Int total = 0;
  for (const auto& q : c.critical_points()) {
    if (!passes(q, filter, value)) continue;
    if (milnor) {
      if (c.base().index_of(q.stratum) == i) total = checked_add(total, r.milnor(q));
    } else {
      total = checked_add(total, r.morse(q, i));
    }
  }
  return total;
}

// sum_i (-1)^{d_i} N_i eta(V_i, alpha)
Int critical_eta_sum(Reader& r, const FiberedCensus& c,
                     const std::vector<Int>& alpha, bool milnor,
                     ValueFilter filter = ValueFilter::all,
                     const std::string& value = {}) {
  const auto& base = c.base();
  Int total = 0;
  for (std::size_t i = 0; i < base.size(); ++i) {
    const Int n = critical_count(r, c, i, milnor, filter, value);
    if (n == 0) continue;
    const Int term = checked_mul(sign_power(base.stratum(i).dim),
                                 checked_mul(n, eta(base, i, alpha)));
    total = checked_add(total, term);
  }
  return total;
}

Int defect_of(Reader& r, const FiberedCensus& c, const CriticalPoint& q) {
  const auto& base = c.base();
  const auto one = base.one();
  Int total = 0;
  for (std::size_t i = 0; i < base.size(); ++i) {
    const Int n = r.morse(q, i);
    if (n == 0) continue;
    total = checked_add(total, checked_mul(sign_power(base.stratum(i).dim),
                                           checked_mul(n, eta(base, i, one))));
  }
  return total;
}

std::string context_of(bool per_value, const IdentityParams& p,
                       bool uses_alpha) {
  std::vector<std::string> parts;
  if (per_value) parts.push_back("a=" + p.value);
  if (uses_alpha) parts.push_back("alpha=" + p.alpha_label);
  if (p.milnor_variant) parts.push_back("mu^T");
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ", ";
    out += parts[i];
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// FiberedCensus

FiberedCensus::FiberedCensus(StratifiedCensus base,
                             std::vector<std::string> special_values,
                             StratumValueTable fiber_chi,
                             StratumValueTable infinity_chi,
                             std::vector<CriticalPoint> critical_points,
                             bool f_general,
                             std::map<std::string, StratifiedCensus> fiber_censuses)
    : base_(std::move(base)),
      special_values_(std::move(special_values)),
      fiber_chi_(std::move(fiber_chi)),
      infinity_chi_(std::move(infinity_chi)),
      critical_points_(std::move(critical_points)),
      f_general_(f_general),
      fiber_censuses_(std::move(fiber_censuses)) {
  for (const auto& s : base_.strata()) check_id(s.id, "stratum id");
  std::set<std::string> seen;
  for (const auto& a : special_values_) {
    check_id(a, "special value");
    if (a == kGeneric) {
      throw InvalidCensus("'generic' is reserved and cannot be a special value");
    }
    if (!seen.insert(a).second) throw InvalidCensus("duplicate special value " + a);
  }

  for (const auto& [sid, row] : fiber_chi_) {
    base_.index_of(sid);
    for (const auto& [v, _] : row) {
      if (v != kGeneric && !is_special(v)) {
        throw UnknownValueLabel("fiber_chi/" + sid + "/" + v);
      }
    }
  }
  for (const auto& s : base_.strata()) {
    auto row = fiber_chi_.find(s.id);
    if (row == fiber_chi_.end() || !row->second.count(kGeneric)) {
      throw InvalidCensus("fiber_chi has no generic entry for stratum " + s.id);
    }
  }
  for (const auto& [sid, row] : infinity_chi_) {
    base_.index_of(sid);
    for (const auto& [v, _] : row) {
      if (!is_special(v)) throw UnknownValueLabel("infinity_chi/" + sid + "/" + v);
    }
  }

  std::set<std::string> qids;
  for (const auto& q : critical_points_) {
    check_id(q.id, "critical point id");
    if (!qids.insert(q.id).second) throw InvalidCensus("duplicate critical point " + q.id);
    const std::size_t home = base_.index_of(q.stratum);
    if (!is_special(q.value)) {
      throw UnknownValueLabel("critical point " + q.id + " has value '" +
                              q.value + "' outside the special values");
    }
    for (const auto& [sid, n] : q.morse_counts) {
      const std::size_t i = base_.index_of(sid);
      if (n && *n < 0) {
        throw InvalidCensus("negative Morse count morse_counts/" + q.id + "/" + sid);
      }
      if (!base_.leq(home, i) && (!n || *n != 0)) {
        throw InvalidCensus("morse_counts/" + q.id + "/" + sid + ": " + q.id +
                            " is not in the closure of " + sid);
      }
    }
    if (q.milnor_numbers) {
      for (const auto& [sid, mu] : *q.milnor_numbers) {
        base_.index_of(sid);
        if (mu && *mu < 0) throw InvalidCensus("negative Milnor number for " + q.id);
      }
    }
  }
  for (const auto& [v, _] : fiber_censuses_) {
    if (v != kGeneric && !is_special(v)) {
      throw UnknownValueLabel("fiber_censuses/" + v);
    }
  }
}

bool FiberedCensus::is_special(const std::string& value) const {
  return std::find(special_values_.begin(), special_values_.end(), value) !=
         special_values_.end();
}

const std::string& FiberedCensus::resolve(const std::string& value) const {
  return is_special(value) ? value : kGeneric;
}

const CriticalPoint& FiberedCensus::critical_point(const std::string& id) const {
  for (const auto& q : critical_points_) {
    if (q.id == id) return q;
  }
  throw UnknownCriticalPoint(id);
}

OptInt FiberedCensus::field(const std::string& path) const {
  const auto p = split_path(path);
  auto bad = [&]() { return std::invalid_argument("unknown field path " + path); };
  if (p.size() == 3 && (p[0] == "fiber_chi" || p[0] == "infinity_chi")) {
    const auto& table = p[0] == "fiber_chi" ? fiber_chi_ : infinity_chi_;
    if (!base_.has_stratum(p[1])) throw bad();
    if (p[0] == "infinity_chi" && !is_special(p[2])) throw bad();
    if (p[0] == "fiber_chi" && p[2] != kGeneric && !is_special(p[2])) throw bad();
    auto row = table.find(p[1]);
    const bool absent = row == table.end() || !row->second.count(p[2]);
    if (absent) {
      if (p[0] == "infinity_chi") return Int{0};
      return std::nullopt;
    }
    return row->second.at(p[2]);
  }
  if (p.size() == 3 && (p[0] == "morse_counts" || p[0] == "milnor_numbers")) {
    const auto& q = critical_point(p[1]);
    if (!base_.has_stratum(p[2])) throw bad();
    if (p[0] == "morse_counts") {
      auto it = q.morse_counts.find(p[2]);
      return it == q.morse_counts.end() ? OptInt{0} : it->second;
    }
    if (!q.milnor_numbers) return std::nullopt;
    auto it = q.milnor_numbers->find(p[2]);
    return it == q.milnor_numbers->end() ? std::nullopt : it->second;
  }
  if (p.size() == 2 && p[0] == "eu_fiber_at_q") {
    return critical_point(p[1]).eu_fiber_at_q;
  }
  throw bad();
}

void FiberedCensus::set_field(const std::string& path, OptInt value) {
  field(path);  // validates the path
  const auto p = split_path(path);
  if (p[0] == "fiber_chi") {
    fiber_chi_[p[1]][p[2]] = value;
  } else if (p[0] == "infinity_chi") {
    infinity_chi_[p[1]][p[2]] = value;
  } else {
    auto it = std::find_if(critical_points_.begin(), critical_points_.end(),
                           [&](const CriticalPoint& q) { return q.id == p[1]; });
    if (p[0] == "morse_counts") {
      it->morse_counts[p[2]] = value;
    } else if (p[0] == "milnor_numbers") {
      if (!it->milnor_numbers) it->milnor_numbers.emplace();
      (*it->milnor_numbers)[p[2]] = value;
    } else {
      it->eu_fiber_at_q = value;
    }
  }
}

std::vector<std::string> FiberedCensus::field_paths() const {
  std::vector<std::string> out;
  for (const auto& [sid, row] : fiber_chi_) {
    for (const auto& [v, _] : row) out.push_back("fiber_chi/" + sid + "/" + v);
  }
  for (const auto& [sid, row] : infinity_chi_) {
    for (const auto& [v, _] : row) out.push_back("infinity_chi/" + sid + "/" + v);
  }
  for (const auto& q : critical_points_) {
    for (const auto& [sid, _] : q.morse_counts) {
      out.push_back("morse_counts/" + q.id + "/" + sid);
    }
    if (q.milnor_numbers) {
      for (const auto& [sid, _] : *q.milnor_numbers) {
        out.push_back("milnor_numbers/" + q.id + "/" + sid);
      }
    }
    if (q.eu_fiber_at_q) out.push_back("eu_fiber_at_q/" + q.id);
  }
  return out;
}

std::vector<std::string> FiberedCensus::blank_fields() const {
  std::vector<std::string> out;
  for (const auto& path : field_paths()) {
    if (!field(path)) out.push_back(path);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Invariants

Int brasselet(const FiberedCensus& c, const std::string& value,
              const std::vector<Int>& alpha) {
  Reader r(c);
  const Int out = fiber_integral(r, c, value, one_if_empty(c, alpha));
  r.done();
  return out;
}

Int brasselet(const FiberedCensus& c, const std::string& value,
              const StratumFunction& alpha) {
  return brasselet(c, value, c.base().dense(alpha));
}

std::vector<Int> eu_alpha(const FiberedCensus& c) {
  require_equidimensional(c);
  return solve_bdk(c.base()).eu_x();
}

Int global_brasselet(const FiberedCensus& c, const std::string& value) {
  return brasselet(c, value, eu_alpha(c));
}

Int eu_of_f_at(const FiberedCensus& c, const std::string& value) {
  return checked_sub(global_euler_obstruction(c.base()),
                     global_brasselet(c, value));
}

Int brasselet_infinity(const FiberedCensus& c, const std::string& value,
                       const std::vector<Int>& alpha) {
  Reader r(c);
  const Int out = infinity_integral(r, c, value, one_if_empty(c, alpha));
  r.done();
  return out;
}

Int brasselet_infinity_total(const FiberedCensus& c,
                             const std::vector<Int>& alpha) {
  Reader r(c);
  const Int out = infinity_total(r, c, one_if_empty(c, alpha));
  r.done();
  return out;
}

Int lambda_infinity(const FiberedCensus& c, const std::string& value) {
  return brasselet_infinity(c, value, c.base().one());
}

Int lambda_infinity_total(const FiberedCensus& c) {
  return brasselet_infinity_total(c, c.base().one());
}

Int binf(const FiberedCensus& c, const std::string& value) {
  return brasselet_infinity(c, value, eu_alpha(c));
}

Int binf_total(const FiberedCensus& c) {
  return brasselet_infinity_total(c, eu_alpha(c));
}

Int local_fiber_defect(const FiberedCensus& c, const std::string& q) {
  Reader r(c);
  const Int out = defect_of(r, c, c.critical_point(q));
  r.done();
  return out;
}

Int eu_of_function_local(const FiberedCensus& c, const std::string& q,
                         const std::string& closure) {
  const auto& point = c.critical_point(q);
  const auto& base = c.base();
  const std::size_t j = base.index_of(closure);
  if (!base.leq(base.index_of(point.stratum), j)) {
    throw PointNotInClosure(q + " is not in the closure of " + closure);
  }
  Reader r(c);
  const Int n = r.morse(point, j);
  r.done();
  return checked_mul(sign_power(base.stratum(j).dim), n);
}

FiberedCensus restrict_to_closure(const FiberedCensus& c, const std::string& j) {
  const auto sub = restrict_to_closure(c.base(), j);
  const bool whole = c.base().index_of(j) == c.base().top();
  StratumValueTable fiber, inf;
  for (const auto& [sid, row] : c.fiber_chi()) {
    if (sub.has_stratum(sid)) fiber[sid] = row;
  }
  for (const auto& [sid, row] : c.infinity_chi()) {
    if (sub.has_stratum(sid)) inf[sid] = row;
  }
  std::vector<CriticalPoint> points;
  for (const auto& q : c.critical_points()) {
    if (!sub.has_stratum(q.stratum)) continue;
    CriticalPoint r = q;
    r.morse_counts.clear();
    for (const auto& [sid, n] : q.morse_counts) {
      if (sub.has_stratum(sid)) r.morse_counts[sid] = n;
    }
    if (q.milnor_numbers) {
      r.milnor_numbers.emplace();
      for (const auto& [sid, mu] : *q.milnor_numbers) {
        if (sub.has_stratum(sid)) (*r.milnor_numbers)[sid] = mu;
      }
    }
    // Fiber obstructions at q refer to the fiber of the whole set.
    if (!whole) r.eu_fiber_at_q.reset();
    points.push_back(std::move(r));
  }
  return FiberedCensus(sub, c.special_values(), std::move(fiber), std::move(inf),
                       std::move(points), c.f_general(),
                       whole ? c.fiber_censuses()
                             : std::map<std::string, StratifiedCensus>{});
}

std::vector<std::string> detect_irregular_values(const FiberedCensus& c) {
  std::vector<std::string> out;
  std::vector<std::string> blanks;
  for (const auto& a : c.special_values()) {
    bool flagged = false;
    std::vector<std::string> unknown;
    for (const auto& [sid, row] : c.infinity_chi()) {
      auto it = row.find(a);
      if (it == row.end()) continue;
      if (!it->second) {
        unknown.push_back("infinity_chi/" + sid + "/" + a);
      } else if (*it->second != 0) {
        flagged = true;
      }
    }
    // A blank only matters when the known entries leave the answer open.
    if (flagged) {
      out.push_back(a);
    } else {
      blanks.insert(blanks.end(), unknown.begin(), unknown.end());
    }
  }
  if (!blanks.empty()) throw InsufficientData(blanks);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Identities

const std::vector<Identity>& all_identities() {
  static const std::vector<Identity> ids = {
      Identity::prop_brasselet_vs_fiber_eu, Identity::bdk_global_1,
      Identity::thm_generic_fiber,          Identity::cor_constructible,
      Identity::cor_equi,                   Identity::bdk_global_2,
      Identity::bdk_global_3,               Identity::prop_any_value,
      Identity::cor_generic_vs_any,         Identity::value_consistency,
  };
  return ids;
}

std::string identity_name(Identity id) {
  switch (id) {
    case Identity::prop_brasselet_vs_fiber_eu: return "prop_brasselet_vs_fiber_eu";
    case Identity::bdk_global_1: return "bdk_global_1";
    case Identity::thm_generic_fiber: return "thm_generic_fiber";
    case Identity::cor_constructible: return "cor_constructible";
    case Identity::cor_equi: return "cor_equi";
    case Identity::bdk_global_2: return "bdk_global_2";
    case Identity::bdk_global_3: return "bdk_global_3";
    case Identity::prop_any_value: return "prop_any_value";
    case Identity::cor_generic_vs_any: return "cor_generic_vs_any";
    case Identity::value_consistency: return "value_consistency";
  }
  return "?";
}

Identity identity_from_name(const std::string& name) {
  for (const auto id : all_identities()) {
    if (identity_name(id) == name) return id;
  }
  throw UnknownIdentity(name);
}

namespace {

bool is_per_value(Identity id) {
  switch (id) {
    case Identity::prop_brasselet_vs_fiber_eu:
    case Identity::bdk_global_1:
    case Identity::bdk_global_3:
    case Identity::prop_any_value:
    case Identity::cor_generic_vs_any:
    case Identity::value_consistency:
      return true;
    default:
      return false;
  }
}

bool uses_alpha(Identity id) {
  switch (id) {
    case Identity::bdk_global_1:
    case Identity::cor_constructible:
    case Identity::bdk_global_2:
    case Identity::bdk_global_3:
    case Identity::prop_any_value:
      return true;
    default:
      return false;
  }
}

bool needs_equidimensional(Identity id) {
  switch (id) {
    case Identity::prop_brasselet_vs_fiber_eu:
    case Identity::bdk_global_1:
    case Identity::cor_equi:
    case Identity::bdk_global_2:
    case Identity::bdk_global_3:
    case Identity::cor_generic_vs_any:
      return true;
    default:
      return false;
  }
}

bool has_milnor_variant(Identity id) {
  switch (id) {
    case Identity::thm_generic_fiber:
    case Identity::cor_constructible:
    case Identity::cor_equi:
    case Identity::prop_any_value:
    case Identity::cor_generic_vs_any:
      return true;
    default:
      return false;
  }
}

// Per-closure Brasselet-type number sum_k Eu_{closure V_i}(V_k) data(k).
template <typename Data>
Int closure_weighted(const std::vector<Int>& eu_closure, std::size_t n,
                     Data data) {
  Int total = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (eu_closure[k] == 0) continue;
    total = checked_add(total, checked_mul(eu_closure[k], data(k)));
  }
  return total;
}

}  // namespace

IdentityReport evaluate(const FiberedCensus& c, Identity id,
                        const IdentityParams& params) {
  const auto& base = c.base();
  const std::size_t n = base.size();
  if (needs_equidimensional(id)) require_equidimensional(c);
  if (params.milnor_variant && !has_milnor_variant(id)) {
    throw std::invalid_argument(identity_name(id) + " has no Milnor variant");
  }
  if (params.milnor_variant && !c.f_general()) {
    throw InsufficientData({"f_general"});
  }
  const auto alpha = one_if_empty(c, params.alpha);
  const auto& a = params.value;
  const bool mu = params.milnor_variant;
  const std::size_t top = base.top();
  const Int top_sign = sign_power(base.dim());

  Reader r(c);
  Int lhs = 0;
  Int rhs = 0;
  switch (id) {
    case Identity::prop_brasselet_vs_fiber_eu: {
      const auto table = solve_bdk(base);
      lhs = fiber_integral(r, c, a, table.eu_x());
      const auto* fiber = r.fiber_census(a);
      if (fiber) rhs = global_euler_obstruction(*fiber);
      if (c.is_special(a)) {
        for (const auto& q : c.critical_points()) {
          if (q.value != a) continue;
          const Int eu_x = table.eu_x_at(base.index_of(q.stratum));
          rhs = checked_add(rhs, checked_sub(eu_x, r.eu_fiber(q)));
        }
      }
      break;
    }
    case Identity::bdk_global_1: {
      lhs = fiber_integral(r, c, a, alpha);
      for (std::size_t i = 0; i < n; ++i) {
        const Int e = eta(base, i, alpha);
        if (e == 0) continue;
        const auto eu = closure_obstruction(base, i);
        const Int b = closure_weighted(eu, n, [&](std::size_t k) { return r.fiber(k, a); });
        rhs = checked_add(rhs, checked_mul(b, e));
      }
      break;
    }
    case Identity::thm_generic_fiber: {
      lhs = checked_sub(chi_global(base, base.one()),
                        fiber_integral(r, c, kGeneric, base.one()));
      rhs = checked_sub(critical_eta_sum(r, c, base.one(), mu),
                        infinity_total(r, c, base.one()));
      break;
    }
    case Identity::cor_constructible: {
      lhs = checked_sub(chi_global(base, alpha),
                        fiber_integral(r, c, kGeneric, alpha));
      rhs = checked_sub(critical_eta_sum(r, c, alpha, mu),
                        infinity_total(r, c, alpha));
      break;
    }
    case Identity::cor_equi: {
      const auto eu = solve_bdk(base).eu_x();
      lhs = checked_sub(chi_global(base, eu), fiber_integral(r, c, kGeneric, eu));
      rhs = checked_sub(checked_mul(top_sign, critical_count(r, c, top, mu)),
                        infinity_total(r, c, eu));
      break;
    }
    case Identity::bdk_global_2:
    case Identity::bdk_global_3: {
      const bool total = id == Identity::bdk_global_2;
      lhs = total ? infinity_total(r, c, alpha) : infinity_integral(r, c, a, alpha);
      for (std::size_t i = 0; i < n; ++i) {
        const Int e = eta(base, i, alpha);
        if (e == 0) continue;
        const auto eu = closure_obstruction(base, i);
        Int b = 0;
        if (total) {
          for (const auto& v : c.special_values()) {
            b = checked_add(b, closure_weighted(eu, n, [&](std::size_t k) {
                              return r.infinity(k, v);
                            }));
          }
        } else {
          b = closure_weighted(eu, n, [&](std::size_t k) { return r.infinity(k, a); });
        }
        rhs = checked_add(rhs, checked_mul(b, e));
      }
      break;
    }
    case Identity::prop_any_value: {
      lhs = checked_sub(chi_global(base, alpha), fiber_integral(r, c, a, alpha));
      rhs = critical_eta_sum(r, c, alpha, mu, ValueFilter::not_equal, a);
      rhs = checked_sub(rhs, infinity_total(r, c, alpha));
      rhs = checked_add(rhs, infinity_integral(r, c, a, alpha));
      break;
    }
    case Identity::cor_generic_vs_any: {
      const auto eu = solve_bdk(base).eu_x();
      lhs = checked_sub(fiber_integral(r, c, a, eu),
                        fiber_integral(r, c, kGeneric, eu));
      const Int on_fiber = critical_count(r, c, top, mu, ValueFilter::equal, a);
      rhs = checked_sub(checked_mul(top_sign, on_fiber),
                        infinity_integral(r, c, a, eu));
      break;
    }
    case Identity::value_consistency: {
      lhs = fiber_integral(r, c, kGeneric, base.one());
      rhs = fiber_integral(r, c, a, base.one());
      for (const auto& q : c.critical_points()) {
        if (c.is_special(a) && q.value == a) rhs = checked_sub(rhs, defect_of(r, c, q));
      }
      rhs = checked_add(rhs, infinity_integral(r, c, a, base.one()));
      break;
    }
  }
  r.done();
  return IdentityReport::compare(identity_name(id),
                                 context_of(is_per_value(id), params,
                                            uses_alpha(id)),
                                 lhs, rhs);
}

std::vector<IdentityReport> check_identity(const FiberedCensus& c, Identity id) {
  std::vector<IdentityReport> rows;
  const std::string name = identity_name(id);
  if (needs_equidimensional(id) && !c.base().equidimensional()) {
    rows.push_back(IdentityReport::skip(name, "", "requires an equidimensional census"));
    return rows;
  }

  std::vector<std::string> values;
  if (is_per_value(id)) {
    values = c.special_values();
    const bool generic_row =
        id == Identity::bdk_global_1 ||
        (id == Identity::prop_brasselet_vs_fiber_eu &&
         c.fiber_censuses().count(kGeneric));
    if (generic_row) values.push_back(kGeneric);
  } else {
    values.push_back(kGeneric);
  }

  std::vector<std::pair<std::vector<Int>, std::string>> alphas = {{{}, "1_X"}};
  if (uses_alpha(id) && c.base().equidimensional()) {
    alphas.emplace_back(solve_bdk(c.base()).eu_x(), "Eu_X");
  }
  std::vector<bool> variants = {false};
  if (has_milnor_variant(id) && c.f_general()) variants.push_back(true);

  for (const bool mu : variants) {
    for (const auto& v : values) {
      for (const auto& [alpha, label] : alphas) {
        IdentityParams p = IdentityParams::at(v);
        p.with_alpha(alpha, label);
        p.milnor_variant = mu;
        try {
          rows.push_back(evaluate(c, id, p));
        } catch (const InsufficientData& e) {
          std::string fields;
          for (const auto& f : e.fields()) fields += (fields.empty() ? "" : ", ") + f;
          rows.push_back(IdentityReport::skip(
              name, context_of(is_per_value(id), p, uses_alpha(id)),
              "insufficient data: " + fields));
        } catch (const NotEquidimensional& e) {
          rows.push_back(IdentityReport::skip(
              name, context_of(is_per_value(id), p, uses_alpha(id)), e.what()));
        }
      }
    }
  }
  return rows;
}

std::vector<IdentityReport> check_all(const FiberedCensus& c) {
  std::vector<IdentityReport> rows;
  for (const auto id : all_identities()) {
    auto part = check_identity(c, id);
    rows.insert(rows.end(), part.begin(), part.end());
  }
  return rows;
}

std::string resolve_unknown_field(const FiberedCensus& c,
                                  const std::string& field) {
  std::vector<std::string> hits;
  if (field == "lambda_total" || field == "lambda") {
    for (const auto& path : c.blank_fields()) {
      if (path.rfind("infinity_chi/", 0) == 0) hits.push_back(path);
    }
  } else if (field == "n_t") {
    const auto& top = c.base().stratum(c.base().top()).id;
    for (const auto& path : c.blank_fields()) {
      if (path.rfind("morse_counts/", 0) == 0 &&
          path.size() > top.size() &&
          path.compare(path.size() - top.size() - 1, std::string::npos, "/" + top) == 0) {
        hits.push_back(path);
      }
    }
  } else {
    return field;
  }
  if (hits.size() != 1) {
    throw NotSolvable("'" + field + "' must name exactly one blank field, found " +
                      std::to_string(hits.size()));
  }
  return hits.front();
}

Int solve_unknown(const FiberedCensus& c, Identity id,
                  const IdentityParams& params, const std::string& field_name) {
  const std::string field = resolve_unknown_field(c, field_name);
  OptInt current;
  try {
    current = c.field(field);
  } catch (const std::invalid_argument& e) {
    throw NotSolvable(e.what());
  } catch (const UnknownCriticalPoint& e) {
    throw NotSolvable(e.what());
  }
  if (current) throw NotSolvable("no unknown: " + field + " is already specified");

  auto residual = [&](Int x) {
    FiberedCensus trial = c;
    trial.set_field(field, x);
    try {
      const auto rep = evaluate(trial, id, params);
      return checked_sub(rep.lhs, rep.rhs);
    } catch (const InsufficientData& e) {
      std::string fields;
      for (const auto& f : e.fields()) fields += (fields.empty() ? "" : ", ") + f;
      throw NotSolvable("multiple unknowns: " + field + " and " + fields);
    }
  };
  const Int r0 = residual(0);
  const Int slope = checked_sub(residual(1), r0);
  if (slope == 0) {
    throw NotSolvable(identity_name(id) + " does not depend on " + field);
  }
  for (const Int x : {Int{-1}, Int{2}, Int{7}}) {
    if (residual(x) != checked_add(r0, checked_mul(slope, x))) {
      throw NotSolvable(identity_name(id) + " is not linear in " + field);
    }
  }
  if (r0 % slope != 0) {
    throw NotSolvable("no integer value of " + field + " satisfies " +
                      identity_name(id));
  }
  return -r0 / slope;
}

}  // namespace strateuler
