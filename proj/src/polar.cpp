#include "strateuler/polar.hpp"

namespace strateuler {

namespace {

const std::vector<Int>& column(const PolarData& polar, const std::string& v) {
  auto it = polar.gamma.find(v);
  if (it == polar.gamma.end()) throw MissingPolarData("no gamma column for " + v);
  return it->second;
}

// sum_{i=1}^d (-1)^{d-i} gamma^(d-i); list[i-1] holds gamma^(d-i).
Int alternating(const PolarData& polar, const std::vector<Int>& list) {
  Int total = 0;
  for (int i = 1; i <= polar.d; ++i) {
    total = checked_add(total, checked_mul(sign_power(polar.d - i), list[i - 1]));
  }
  return total;
}

Int eu_f_over(const FiberedCensus& c, const std::string& value) {
  if (!c.is_special(value)) return 0;
  const auto& top = c.base().stratum(c.base().top()).id;
  Int total = 0;
  for (const auto& q : c.critical_points()) {
    if (q.value == value) total = checked_add(total, eu_of_function_local(c, q.id, top));
  }
  return total;
}

void check_dimension(const FiberedCensus& c, const PolarData& polar) {
  if (polar.d != c.base().dim()) {
    throw InvalidCensus("polar data has d=" + std::to_string(polar.d) +
                        " but the census has dimension " +
                        std::to_string(c.base().dim()));
  }
}

}  // namespace

void PolarData::validate() const {
  if (d < 1) throw InvalidCensus("polar data needs d >= 1");
  for (const auto& [v, list] : gamma) {
    if (list.size() != static_cast<std::size_t>(d)) {
      throw InvalidCensus("gamma column " + v + " must have " + std::to_string(d) +
                          " entries");
    }
    for (Int g : list) {
      if (g < 0) throw InvalidCensus("negative gamma entry in column " + v);
    }
  }
  if (alpha) {
    if (alpha->size() != static_cast<std::size_t>(d) + 1) {
      throw InvalidCensus("alpha must have " + std::to_string(d + 1) + " entries");
    }
    for (Int a : *alpha) {
      if (a < 0) throw InvalidCensus("negative alpha entry");
    }
  }
}

Int PolarData::gamma_at(const std::string& value, int k) const {
  if (k < 0 || k >= d) throw MissingPolarData("no gamma^(" + std::to_string(k) + ")");
  return column(*this, value)[static_cast<std::size_t>(d - 1 - k)];
}

Int brasselet_from_polar(const FiberedCensus& c, const PolarData& polar,
                         const std::string& value) {
  check_dimension(c, polar);
  const auto& v = c.resolve(value);
  return checked_add(alternating(polar, column(polar, v)), eu_f_over(c, v));
}

Int infinity_from_polar(const FiberedCensus& c, const PolarData& polar,
                        const std::string& value) {
  check_dimension(c, polar);
  const auto& generic = column(polar, kGeneric);
  const auto& at = column(polar, c.resolve(value));
  std::vector<Int> diff(generic.size());
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = checked_sub(generic[i], at[i]);
  return alternating(polar, diff);
}

IdentityReport stv_global_eu(const FiberedCensus& c, const PolarData& polar) {
  check_dimension(c, polar);
  if (!polar.alpha) throw MissingPolarData("no alpha list");
  Int lhs = 0;
  for (std::size_t i = 0; i < polar.alpha->size(); ++i) {
    lhs = checked_add(lhs, checked_mul(sign_power(static_cast<Int>(i)), (*polar.alpha)[i]));
  }
  return IdentityReport::compare("stv_global_eu", "", lhs,
                                 global_euler_obstruction(c.base()));
}

IdentityReport hyperplane_step(const FiberedCensus& x, const FiberedCensus* section,
                               const PolarData& polar, const std::string& value) {
  check_dimension(x, polar);
  const auto& v = x.resolve(value);
  Int lhs = global_brasselet(x, v);
  if (polar.d > 1) {
    if (!section) throw InsufficientData({"hyperplane_section"});
    lhs = checked_sub(lhs, global_brasselet(*section, v));
  }
  const Int rhs = checked_add(checked_mul(sign_power(polar.d - 1),
                                          polar.gamma_at(v, polar.d - 1)),
                              eu_f_over(x, v));
  return IdentityReport::compare("hyperplane_step", "a=" + v, lhs, rhs);
}

std::vector<IdentityReport> polar_checks(const FiberedCensus& c,
                                         const PolarData& polar,
                                         const FiberedCensus* section) {
  std::vector<IdentityReport> rows;
  std::vector<std::string> values = c.special_values();
  values.push_back(kGeneric);
  auto guarded = [&](const std::string& name, const std::string& ctx, auto fn) {
    try {
      rows.push_back(fn());
    } catch (const MissingPolarData& e) {
      rows.push_back(IdentityReport::skip(name, ctx, e.what()));
    } catch (const InsufficientData& e) {
      rows.push_back(IdentityReport::skip(name, ctx, e.what()));
    } catch (const NotEquidimensional& e) {
      rows.push_back(IdentityReport::skip(name, ctx, e.what()));
    }
  };
  for (const auto& v : values) {
    guarded("polar_brasselet", "a=" + v, [&] {
      return IdentityReport::compare("polar_brasselet", "a=" + v,
                                     brasselet_from_polar(c, polar, v),
                                     global_brasselet(c, v));
    });
  }
  for (const auto& v : c.special_values()) {
    guarded("polar_infinity", "a=" + v, [&] {
      return IdentityReport::compare("polar_infinity", "a=" + v,
                                     infinity_from_polar(c, polar, v), binf(c, v));
    });
  }
  if (polar.alpha) guarded("stv_global_eu", "", [&] { return stv_global_eu(c, polar); });
  if (section || polar.d == 1) {
    for (const auto& v : values) {
      guarded("hyperplane_step", "a=" + v,
              [&] { return hyperplane_step(c, section, polar, v); });
    }
  }
  return rows;
}

}  // namespace strateuler
