#include "strateuler/census_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace strateuler {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::string escape_token(const std::string& key) {
  std::string out;
  for (char ch : key) {
    if (ch == '~') {
      out += "~0";
    } else if (ch == '/') {
      out += "~1";
    } else {
      out += ch;
    }
  }
  return out;
}

std::string child(const std::string& path, const std::string& key) {
  return path + "/" + escape_token(key);
}

std::string child(const std::string& path, std::size_t index) {
  return path + "/" + std::to_string(index);
}

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw SchemaError(path, msg);
}

const json& require(const json& obj, const std::string& key,
                    const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(child(path, key), "missing required key");
  return *it;
}

void expect_object(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
}

void expect_array(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
}

void only_keys(const json& obj, const std::string& path,
               std::initializer_list<const char*> allowed) {
  for (const auto& [key, _] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) fail(child(path, key), "unknown key");
  }
}

Int as_int(const json& j, const std::string& path) {
  if (j.is_number_integer()) return j.get<Int>();
  if (j.is_number_unsigned()) {
    const auto u = j.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(INT64_MAX)) fail(path, "integer out of range");
    return static_cast<Int>(u);
  }
  fail(path, "expected an integer");
}

OptInt as_opt_int(const json& j, const std::string& path) {
  if (j.is_null()) return std::nullopt;
  return as_int(j, path);
}

std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

bool as_bool(const json& j, const std::string& path) {
  if (!j.is_boolean()) fail(path, "expected a boolean");
  return j.get<bool>();
}

/// Value labels may be written as strings or integers.
std::string as_label(const json& j, const std::string& path) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<Int>());
  fail(path, "expected a value label");
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("", std::string("malformed JSON: ") + e.what());
  }
}

StratifiedCensus parse_strata(const json& j, const std::string& path,
                              const std::string& fallback_name) {
  std::vector<Stratum> strata;
  const auto& js = require(j, "strata", path);
  expect_array(js, child(path, "strata"));
  for (std::size_t i = 0; i < js.size(); ++i) {
    const auto p = child(child(path, "strata"), i);
    const auto& s = js[i];
    expect_object(s, p);
    only_keys(s, p, {"id", "dim", "chi", "regular_part"});
    Stratum st;
    st.id = as_string(require(s, "id", p), child(p, "id"));
    const Int dim = as_int(require(s, "dim", p), child(p, "dim"));
    if (dim < 0 || dim > 64) fail(child(p, "dim"), "dimension out of range");
    st.dim = static_cast<int>(dim);
    st.chi = as_int(require(s, "chi", p), child(p, "chi"));
    if (s.contains("regular_part")) {
      st.regular_part = as_bool(s["regular_part"], child(p, "regular_part"));
    }
    strata.push_back(std::move(st));
  }

  std::vector<std::pair<std::string, std::string>> order;
  if (j.contains("order")) {
    const auto po = child(path, "order");
    expect_array(j["order"], po);
    for (std::size_t i = 0; i < j["order"].size(); ++i) {
      const auto& pair = j["order"][i];
      const auto pp = child(po, i);
      if (!pair.is_array() || pair.size() != 2) fail(pp, "expected a pair [lower, upper]");
      order.emplace_back(as_string(pair[0], child(pp, 0)), as_string(pair[1], child(pp, 1)));
    }
  }

  std::vector<LinkEntry> links;
  if (j.contains("links")) {
    const auto pl = child(path, "links");
    expect_array(j["links"], pl);
    for (std::size_t i = 0; i < j["links"].size(); ++i) {
      const auto& l = j["links"][i];
      const auto p = child(pl, i);
      expect_object(l, p);
      only_keys(l, p, {"at", "in_closure", "chi"});
      links.push_back({as_string(require(l, "at", p), child(p, "at")),
                       as_string(require(l, "in_closure", p), child(p, "in_closure")),
                       as_int(require(l, "chi", p), child(p, "chi"))});
    }
  }

  bool equidimensional = false;
  if (j.contains("equidimensional")) {
    equidimensional = as_bool(j["equidimensional"], child(path, "equidimensional"));
  }
  std::string name = fallback_name;
  if (j.contains("name")) name = as_string(j["name"], child(path, "name"));
  return StratifiedCensus(name, std::move(strata), order, links, equidimensional);
}

StratumValueTable parse_table(const json& j, const std::string& path) {
  expect_object(j, path);
  StratumValueTable out;
  for (const auto& [sid, row] : j.items()) {
    const auto p = child(path, sid);
    expect_object(row, p);
    auto& dst = out[sid];
    for (const auto& [v, x] : row.items()) dst[v] = as_opt_int(x, child(p, v));
  }
  return out;
}

std::map<std::string, OptInt> parse_counts(const json& j, const std::string& path) {
  expect_object(j, path);
  std::map<std::string, OptInt> out;
  for (const auto& [k, x] : j.items()) out[k] = as_opt_int(x, child(path, k));
  return out;
}

FiberedCensus parse_fibration(const StratifiedCensus& base, const json& j,
                              const std::string& path) {
  expect_object(j, path);
  only_keys(j, path, {"special_values", "fiber_chi", "infinity_chi",
                      "critical_points", "f_general", "fiber_censuses"});
  std::vector<std::string> values;
  if (j.contains("special_values")) {
    const auto pv = child(path, "special_values");
    expect_array(j["special_values"], pv);
    for (std::size_t i = 0; i < j["special_values"].size(); ++i) {
      values.push_back(as_label(j["special_values"][i], child(pv, i)));
    }
  }
  auto fiber = parse_table(require(j, "fiber_chi", path), child(path, "fiber_chi"));
  StratumValueTable inf;
  if (j.contains("infinity_chi")) {
    inf = parse_table(j["infinity_chi"], child(path, "infinity_chi"));
  }

  std::vector<CriticalPoint> points;
  if (j.contains("critical_points")) {
    const auto pc = child(path, "critical_points");
    expect_array(j["critical_points"], pc);
    for (std::size_t i = 0; i < j["critical_points"].size(); ++i) {
      const auto& q = j["critical_points"][i];
      const auto p = child(pc, i);
      expect_object(q, p);
      only_keys(q, p, {"id", "stratum", "value", "morse_counts", "eu_fiber_at_q",
                       "milnor_numbers"});
      CriticalPoint cp;
      cp.id = as_string(require(q, "id", p), child(p, "id"));
      cp.stratum = as_string(require(q, "stratum", p), child(p, "stratum"));
      cp.value = as_label(require(q, "value", p), child(p, "value"));
      if (q.contains("morse_counts")) {
        cp.morse_counts = parse_counts(q["morse_counts"], child(p, "morse_counts"));
      }
      if (q.contains("eu_fiber_at_q")) {
        cp.eu_fiber_at_q = as_opt_int(q["eu_fiber_at_q"], child(p, "eu_fiber_at_q"));
      }
      if (q.contains("milnor_numbers")) {
        cp.milnor_numbers = parse_counts(q["milnor_numbers"], child(p, "milnor_numbers"));
      }
      points.push_back(std::move(cp));
    }
  }

  bool f_general = false;
  if (j.contains("f_general")) f_general = as_bool(j["f_general"], child(path, "f_general"));

  std::map<std::string, StratifiedCensus> fibers;
  if (j.contains("fiber_censuses")) {
    const auto pf = child(path, "fiber_censuses");
    expect_object(j["fiber_censuses"], pf);
    for (const auto& [v, fc] : j["fiber_censuses"].items()) {
      const auto p = child(pf, v);
      expect_object(fc, p);
      only_keys(fc, p, {"name", "strata", "order", "links", "equidimensional"});
      fibers.emplace(v, parse_strata(fc, p, base.name() + "|fiber(" + v + ")"));
    }
  }
  return FiberedCensus(base, std::move(values), std::move(fiber), std::move(inf),
                       std::move(points), f_general, std::move(fibers));
}

PolarData parse_polar(const StratifiedCensus& base, const json& j,
                      const std::string& path) {
  expect_object(j, path);
  only_keys(j, path, {"gamma", "alpha"});
  PolarData polar;
  polar.d = base.dim();
  if (j.contains("gamma")) {
    const auto pg = child(path, "gamma");
    expect_object(j["gamma"], pg);
    for (const auto& [v, list] : j["gamma"].items()) {
      const auto p = child(pg, v);
      expect_array(list, p);
      std::vector<Int> col;
      for (std::size_t i = 0; i < list.size(); ++i) col.push_back(as_int(list[i], child(p, i)));
      polar.gamma[v] = std::move(col);
    }
  }
  if (j.contains("alpha")) {
    const auto pa = child(path, "alpha");
    expect_array(j["alpha"], pa);
    std::vector<Int> alpha;
    for (std::size_t i = 0; i < j["alpha"].size(); ++i) {
      alpha.push_back(as_int(j["alpha"][i], child(pa, i)));
    }
    polar.alpha = std::move(alpha);
  }
  try {
    polar.validate();
  } catch (const InvalidCensus& e) {
    throw SchemaError(path, e.what());
  }
  return polar;
}

CensusDocument parse_document_json(const json& j, const std::string& path) {
  expect_object(j, path);
  only_keys(j, path, {"name", "strata", "order", "links", "equidimensional",
                      "fibration", "polar", "hyperplane_section", "expected",
                      "derivation_note", "description"});
  CensusDocument doc;
  doc.base = parse_strata(j, path, "census");
  if (j.contains("fibration")) {
    doc.fibered = parse_fibration(doc.base, j["fibration"], child(path, "fibration"));
  }
  if (j.contains("polar")) doc.polar = parse_polar(doc.base, j["polar"], child(path, "polar"));
  if (j.contains("hyperplane_section")) {
    doc.hyperplane_section = std::make_shared<CensusDocument>(
        parse_document_json(j["hyperplane_section"], child(path, "hyperplane_section")));
  }
  if (j.contains("expected")) {
    const auto pe = child(path, "expected");
    expect_object(j["expected"], pe);
    for (const auto& [key, v] : j["expected"].items()) {
      const auto p = child(pe, key);
      if (v.is_array()) {
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < v.size(); ++i) labels.push_back(as_label(v[i], child(p, i)));
        doc.expected[key] = std::move(labels);
      } else {
        doc.expected[key] = as_int(v, p);
      }
    }
  }
  if (j.contains("derivation_note")) {
    doc.derivation_note = as_string(j["derivation_note"], child(path, "derivation_note"));
  }
  return doc;
}

// ---------------------------------------------------------------------------
// Serialization

ordered_json opt_to_json(const OptInt& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json strata_to_json(const StratifiedCensus& c) {
  ordered_json j;
  j["name"] = c.name();
  j["equidimensional"] = c.equidimensional();
  j["strata"] = ordered_json::array();
  for (const auto& s : c.strata()) {
    ordered_json st;
    st["id"] = s.id;
    st["dim"] = s.dim;
    st["chi"] = s.chi;
    if (s.regular_part) st["regular_part"] = true;
    j["strata"].push_back(st);
  }
  j["order"] = ordered_json::array();
  for (const auto& [a, b] : c.order_pairs()) j["order"].push_back({a, b});
  j["links"] = ordered_json::array();
  for (const auto& l : c.link_entries()) {
    j["links"].push_back({{"at", l.at}, {"in_closure", l.in_closure}, {"chi", l.chi}});
  }
  return j;
}

ordered_json table_to_json(const StratumValueTable& t) {
  ordered_json j = ordered_json::object();
  for (const auto& [sid, row] : t) {
    ordered_json r = ordered_json::object();
    for (const auto& [v, x] : row) r[v] = opt_to_json(x);
    j[sid] = r;
  }
  return j;
}

ordered_json counts_to_json(const std::map<std::string, OptInt>& m) {
  ordered_json j = ordered_json::object();
  for (const auto& [k, v] : m) j[k] = opt_to_json(v);
  return j;
}

ordered_json fibration_to_json(const FiberedCensus& c) {
  ordered_json j;
  j["special_values"] = c.special_values();
  j["fiber_chi"] = table_to_json(c.fiber_chi());
  j["infinity_chi"] = table_to_json(c.infinity_chi());
  j["critical_points"] = ordered_json::array();
  for (const auto& q : c.critical_points()) {
    ordered_json jq;
    jq["id"] = q.id;
    jq["stratum"] = q.stratum;
    jq["value"] = q.value;
    jq["morse_counts"] = counts_to_json(q.morse_counts);
    if (q.eu_fiber_at_q) jq["eu_fiber_at_q"] = *q.eu_fiber_at_q;
    if (q.milnor_numbers) jq["milnor_numbers"] = counts_to_json(*q.milnor_numbers);
    j["critical_points"].push_back(jq);
  }
  j["f_general"] = c.f_general();
  if (!c.fiber_censuses().empty()) {
    ordered_json fc = ordered_json::object();
    for (const auto& [v, census] : c.fiber_censuses()) fc[v] = strata_to_json(census);
    j["fiber_censuses"] = fc;
  }
  return j;
}

ordered_json document_to_json(const CensusDocument& doc) {
  ordered_json j = strata_to_json(doc.base);
  if (doc.fibered) j["fibration"] = fibration_to_json(*doc.fibered);
  if (doc.polar) {
    ordered_json p;
    ordered_json g = ordered_json::object();
    for (const auto& [v, col] : doc.polar->gamma) g[v] = col;
    p["gamma"] = g;
    if (doc.polar->alpha) p["alpha"] = *doc.polar->alpha;
    j["polar"] = p;
  }
  if (doc.hyperplane_section) {
    j["hyperplane_section"] = document_to_json(*doc.hyperplane_section);
  }
  if (!doc.expected.empty()) {
    ordered_json e = ordered_json::object();
    for (const auto& [k, v] : doc.expected) {
      if (const auto* n = std::get_if<Int>(&v)) {
        e[k] = *n;
      } else {
        e[k] = std::get<std::vector<std::string>>(v);
      }
    }
    j["expected"] = e;
  }
  if (!doc.derivation_note.empty()) j["derivation_note"] = doc.derivation_note;
  return j;
}

SimplicialComplex complex_from_json(const json& j, const std::string& path) {
  expect_object(j, path);
  only_keys(j, path, {"simplices"});
  const auto ps = child(path, "simplices");
  const auto& list = require(j, "simplices", path);
  expect_array(list, ps);
  std::set<Simplex> simplices;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const auto p = child(ps, i);
    expect_array(list[i], p);
    if (list[i].empty()) fail(p, "empty simplex");
    if (static_cast<int>(list[i].size()) - 1 > kMaxSimplexDim) {
      throw DimensionCapExceeded(p + ": simplex of dimension " +
                                 std::to_string(list[i].size() - 1) +
                                 " exceeds the cap " + std::to_string(kMaxSimplexDim));
    }
    std::vector<Vertex> vs;
    for (std::size_t k = 0; k < list[i].size(); ++k) {
      vs.push_back(as_int(list[i][k], child(p, k)));
      if (k > 0 && vs[k] <= vs[k - 1]) fail(p, "vertex list must be strictly increasing");
    }
    simplices.insert(Simplex(std::move(vs)));
  }
  return SimplicialComplex(std::move(simplices));
}

}  // namespace

CensusDocument parse_document(const std::string& text) {
  return parse_document_json(parse_json(text), "");
}

CensusDocument load_document(const std::string& path) {
  return parse_document(read_text_file(path));
}

std::string dump_document(const CensusDocument& doc) {
  return document_to_json(doc).dump(2) + "\n";
}

SimplicialComplex parse_complex(const std::string& text) {
  return complex_from_json(parse_json(text), "");
}

FubiniBundle parse_fubini(const std::string& text) {
  const json j = parse_json(text);
  expect_object(j, "");
  only_keys(j, "", {"complex_src", "complex_dst", "vertex_map", "weights"});
  auto src = std::make_shared<const SimplicialComplex>(
      complex_from_json(require(j, "complex_src", ""), "/complex_src"));
  auto dst = std::make_shared<const SimplicialComplex>(
      complex_from_json(require(j, "complex_dst", ""), "/complex_dst"));

  std::map<Vertex, Vertex> vmap;
  const auto& jm = require(j, "vertex_map", "");
  expect_array(jm, "/vertex_map");
  for (std::size_t i = 0; i < jm.size(); ++i) {
    const auto p = child("/vertex_map", i);
    if (!jm[i].is_array() || jm[i].size() != 2) fail(p, "expected a pair [source, target]");
    const Vertex s = as_int(jm[i][0], child(p, 0));
    if (!vmap.emplace(s, as_int(jm[i][1], child(p, 1))).second) {
      fail(p, "vertex mapped twice");
    }
  }

  std::map<Simplex, Int> weights;
  if (j.contains("weights")) {
    expect_array(j["weights"], "/weights");
    for (std::size_t i = 0; i < j["weights"].size(); ++i) {
      const auto& w = j["weights"][i];
      const auto p = child("/weights", i);
      expect_object(w, p);
      only_keys(w, p, {"simplex", "weight"});
      const auto& js = require(w, "simplex", p);
      expect_array(js, child(p, "simplex"));
      std::vector<Vertex> vs;
      for (std::size_t k = 0; k < js.size(); ++k) {
        vs.push_back(as_int(js[k], child(child(p, "simplex"), k)));
        if (k > 0 && vs[k] <= vs[k - 1]) {
          fail(child(p, "simplex"), "vertex list must be strictly increasing");
        }
      }
      if (vs.empty()) fail(child(p, "simplex"), "empty simplex");
      Simplex s(std::move(vs));
      if (weights.count(s)) fail(p, "duplicate weight for " + s.to_string());
      weights[s] = as_int(require(w, "weight", p), child(p, "weight"));
    }
  }
  SimplicialMap map(src, dst, std::move(vmap));
  SimplicialConstructibleFunction alpha(src, std::move(weights));
  return {std::move(map), std::move(alpha)};
}

FubiniBundle load_fubini(const std::string& path) {
  return parse_fubini(read_text_file(path));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("", "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SchemaError("", "cannot write " + path);
  out << text;
  if (!out) throw SchemaError("", "failed writing " + path);
}

}  // namespace strateuler
