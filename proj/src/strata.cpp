#include "strateuler/strata.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace strateuler {

StratifiedCensus::StratifiedCensus(
    std::string name, std::vector<Stratum> strata,
    const std::vector<std::pair<std::string, std::string>>& order,
    const std::vector<LinkEntry>& links, bool equidimensional)
    : name_(std::move(name)),
      strata_(std::move(strata)),
      equidimensional_(equidimensional) {
  if (strata_.empty()) throw InvalidCensus("census has no strata");
  std::sort(strata_.begin(), strata_.end(),
            [](const Stratum& a, const Stratum& b) {
              return std::tie(a.dim, a.id) < std::tie(b.dim, b.id);
            });
  const std::size_t n = strata_.size();
  std::size_t regular_count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = strata_[i];
    if (s.id.empty()) throw InvalidCensus("empty stratum id");
    if (s.dim < 0) throw InvalidCensus("stratum " + s.id + " has negative dim");
    if (!index_.emplace(s.id, i).second) {
      throw InvalidCensus("duplicate stratum id " + s.id);
    }
    if (s.regular_part) {
      ++regular_count;
      top_ = i;
    }
  }
  if (regular_count != 1) {
    throw InvalidCensus("exactly one stratum must be the regular part, found " +
                        std::to_string(regular_count));
  }

  less_.assign(n, std::vector<bool>(n, false));
  for (const auto& [a, b] : order) {
    const auto i = index_of(a);
    const auto j = index_of(b);
    if (i == j) throw InvalidCensus("order pair " + a + " < " + a);
    less_[i][j] = true;
  }
  // Frontier condition: close transitively (Floyd-Warshall on booleans).
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!less_[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (less_[k][j]) less_[i][j] = true;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (less_[i][i]) throw InvalidCensus("order has a cycle through " + strata_[i].id);
    for (std::size_t j = 0; j < n; ++j) {
      if (less_[i][j] && strata_[i].dim >= strata_[j].dim) {
        throw InvalidCensus(strata_[i].id + " < " + strata_[j].id +
                            " but its dimension is not smaller");
      }
    }
  }
  // The regular part is dense, so every other stratum lies in its frontier.
  for (std::size_t i = 0; i < n; ++i) {
    if (i != top_ && !less_[i][top_]) {
      throw InvalidCensus("stratum " + strata_[i].id +
                          " is not in the closure of the regular part " +
                          strata_[top_].id);
    }
  }

  for (const auto& e : links) {
    const auto i = index_of(e.at);
    const auto j = index_of(e.in_closure);
    if (!less_[i][j]) {
      throw InvalidCensus("link entry (" + e.at + ", " + e.in_closure +
                          ") is not a strict order pair");
    }
    if (!links_.emplace(std::make_pair(i, j), e.chi).second) {
      throw InvalidCensus("duplicate link entry (" + e.at + ", " +
                          e.in_closure + ")");
    }
  }
}

std::size_t StratifiedCensus::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw UnknownStratum(id);
  return it->second;
}

Int StratifiedCensus::link(std::size_t i, std::size_t j) const {
  auto it = links_.find({i, j});
  if (it == links_.end()) {
    throw MissingLinkEntry("(" + strata_[i].id + ", " + strata_[j].id + ")");
  }
  return it->second;
}

Int StratifiedCensus::link_in_whole(std::size_t i) const {
  return i == top_ ? 0 : link(i, top_);
}

std::vector<std::pair<std::string, std::string>> StratifiedCensus::order_pairs()
    const {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) {
      if (less_[i][j]) out.emplace_back(strata_[i].id, strata_[j].id);
    }
  }
  return out;
}

std::vector<LinkEntry> StratifiedCensus::link_entries() const {
  std::vector<LinkEntry> out;
  for (const auto& [key, chi] : links_) {
    out.push_back({strata_[key.first].id, strata_[key.second].id, chi});
  }
  return out;
}

std::vector<Int> StratifiedCensus::dense(const StratumFunction& alpha) const {
  std::vector<Int> out(size(), 0);
  for (const auto& [id, v] : alpha) out[index_of(id)] = v;
  return out;
}

StratumFunction StratifiedCensus::sparse(const std::vector<Int>& values) const {
  StratumFunction out;
  for (std::size_t i = 0; i < size() && i < values.size(); ++i) {
    if (values[i] != 0) out[strata_[i].id] = values[i];
  }
  return out;
}

std::vector<Int> StratifiedCensus::closure_indicator(std::size_t j) const {
  std::vector<Int> out(size(), 0);
  for (std::size_t i = 0; i < size(); ++i) out[i] = leq(i, j) ? 1 : 0;
  return out;
}

namespace {

Int eta_entry(const StratifiedCensus& c, std::size_t v, std::size_t j) {
  if (v == j) return 1;
  if (c.less(v, j)) return checked_sub(1, c.link(v, j));
  return 0;
}

}  // namespace

IntMatrix eta_closure_matrix(const StratifiedCensus& census) {
  const std::size_t n = census.size();
  IntMatrix m(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t j = 0; j < n; ++j) m(v, j) = eta_entry(census, v, j);
  }
  return m;
}

IntMatrix zeta_matrix(const StratifiedCensus& census) {
  const std::size_t n = census.size();
  IntMatrix z(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) z(i, k) = census.leq(i, k) ? 1 : 0;
  }
  return z;
}

IntMatrix mobius_matrix(const StratifiedCensus& census) {
  return invert_upper_unitriangular(zeta_matrix(census));
}

std::vector<Int> to_closure_basis(const StratifiedCensus& census,
                                  const std::vector<Int>& alpha) {
  // alpha(V_i) = sum_{k >= i} a_k, solved from the top of the poset down.
  const std::size_t n = census.size();
  std::vector<Int> a(n, 0);
  for (std::size_t k = n; k-- > 0;) {
    Int acc = alpha.at(k);
    for (std::size_t m = k + 1; m < n; ++m) {
      if (census.less(k, m)) acc = checked_sub(acc, a[m]);
    }
    a[k] = acc;
  }
  return a;
}

std::vector<Int> from_closure_basis(const StratifiedCensus& census,
                                    const std::vector<Int>& coeffs) {
  const std::size_t n = census.size();
  std::vector<Int> alpha(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (census.leq(i, k)) alpha[i] = checked_add(alpha[i], coeffs.at(k));
    }
  }
  return alpha;
}

Int eta(const StratifiedCensus& census, std::size_t v,
        const std::vector<Int>& alpha) {
  if (v >= census.size()) throw UnknownStratum("index " + std::to_string(v));
  const auto a = to_closure_basis(census, alpha);
  Int total = 0;
  for (std::size_t k = 0; k < census.size(); ++k) {
    if (a[k] == 0) continue;
    total = checked_add(total, checked_mul(a[k], eta_entry(census, v, k)));
  }
  return total;
}

Int eta(const StratifiedCensus& census, const std::string& v,
        const StratumFunction& alpha) {
  return eta(census, census.index_of(v), census.dense(alpha));
}

Int chi_global(const StratifiedCensus& census, const std::vector<Int>& alpha) {
  Int total = 0;
  for (std::size_t i = 0; i < census.size(); ++i) {
    total = checked_add(total, checked_mul(alpha.at(i), census.stratum(i).chi));
  }
  return total;
}

Int chi_global(const StratifiedCensus& census, const StratumFunction& alpha) {
  return chi_global(census, census.dense(alpha));
}

StratifiedCensus restrict_to_closure(const StratifiedCensus& census,
                                     const std::string& j) {
  const std::size_t top = census.index_of(j);
  std::vector<Stratum> strata;
  for (std::size_t i = 0; i < census.size(); ++i) {
    if (!census.leq(i, top)) continue;
    Stratum s = census.stratum(i);
    s.regular_part = (i == top);
    strata.push_back(std::move(s));
  }
  std::vector<std::pair<std::string, std::string>> order;
  std::vector<LinkEntry> links;
  for (std::size_t a = 0; a < census.size(); ++a) {
    for (std::size_t b = 0; b < census.size(); ++b) {
      if (!census.less(a, b) || !census.leq(b, top)) continue;
      order.emplace_back(census.stratum(a).id, census.stratum(b).id);
      if (census.has_link(a, b)) {
        links.push_back({census.stratum(a).id, census.stratum(b).id,
                         census.link(a, b)});
      }
    }
  }
  const bool equi = (top == census.top()) ? census.equidimensional() : true;
  std::string name = (top == census.top())
                         ? census.name()
                         : census.name() + "|closure(" + j + ")";
  return StratifiedCensus(std::move(name),
                          std::move(strata), order, links, equi);
}

}  // namespace strateuler
