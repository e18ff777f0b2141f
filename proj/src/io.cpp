#include "hnp/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "hnp/catalog.hpp"
#include "hnp/numbers.hpp"

namespace hnp {

namespace {

[[noreturn]] void schema(const std::string& what) { throw Error(ErrorKind::SchemaError, what); }

template <typename T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) schema(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    schema(std::string("field '") + key + "' has the wrong type");
  }
}

const char* kind_name(GroupSpec::Kind k) {
  switch (k) {
    case GroupSpec::Kind::Table: return "table";
    case GroupSpec::Kind::Permutations: return "permutations";
    case GroupSpec::Kind::Semidirect: return "semidirect";
    case GroupSpec::Kind::Product: return "product";
  }
  return "?";
}

json matrix_json(const IntMat& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    rows.push_back(row);
  }
  return rows;
}

IntMat matrix_from_json(const json& j, int m) {
  if (!j.is_array() || static_cast<int>(j.size()) != m) schema("action matrix must be " + std::to_string(m) + " x " + std::to_string(m));
  IntMat M(m, m);
  for (int i = 0; i < m; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != m) schema("action matrix row has the wrong length");
    for (int k = 0; k < m; ++k) {
      if (!j[i][k].is_number_integer()) schema("action matrix entries must be integers");
      M(i, k) = j[i][k].get<std::int64_t>();
    }
  }
  return M;
}

json cocycle_json(const Cocycle& z) {
  return {{"degree", z.degree}, {"group_order", z.group_order}, {"rank", z.rank},
          {"values", std::vector<std::int64_t>(z.values.data(), z.values.data() + z.values.size())}};
}

Cocycle cocycle_from_json(const json& j) {
  Cocycle z;
  z.degree = j.at("degree").get<int>();
  z.group_order = j.at("group_order").get<int>();
  z.rank = j.at("rank").get<int>();
  auto v = j.at("values").get<std::vector<std::int64_t>>();
  z.values = Eigen::Map<IntVec>(v.data(), static_cast<Eigen::Index>(v.size()));
  return z;
}

Subgroup subgroup_from_json(const json& j) { return Subgroup{j.get<std::vector<int>>()}; }

json subgroups_json(const std::vector<Subgroup>& v) {
  json a = json::array();
  for (const auto& H : v) a.push_back(to_json(H));
  return a;
}

std::vector<Subgroup> subgroups_from_json(const json& j) {
  std::vector<Subgroup> out;
  for (const auto& x : j) out.push_back(subgroup_from_json(x));
  return out;
}

}  // namespace

json to_json(const GroupSpec& s) {
  json j;
  j["kind"] = kind_name(s.kind);
  if (!s.label.empty()) j["label"] = s.label;
  switch (s.kind) {
    case GroupSpec::Kind::Table:
      j["n"] = s.n;
      j["mul"] = s.mul;
      if (!s.table_generators.empty()) j["generators"] = s.table_generators;
      break;
    case GroupSpec::Kind::Permutations:
      j["degree"] = s.degree;
      j["generators"] = s.cycles;
      break;
    case GroupSpec::Kind::Semidirect: {
      j["p"] = s.p;
      j["m"] = s.m;
      json mats = json::array();
      for (const auto& M : s.matrices) mats.push_back(matrix_json(M));
      j["matrices"] = mats;
      j["acting"] = to_json(s.children.at(0));
      break;
    }
    case GroupSpec::Kind::Product: {
      json fs = json::array();
      for (const auto& c : s.children) fs.push_back(to_json(c));
      j["factors"] = fs;
      break;
    }
  }
  return j;
}

GroupSpec group_spec_from_json(const json& j) {
  if (!j.is_object()) schema("group spec must be an object");
  const auto kind = field<std::string>(j, "kind");
  const std::string label = j.contains("label") ? field<std::string>(j, "label") : std::string();
  if (kind == "table") {
    GroupSpec s = table_spec(field<int>(j, "n"), field<std::vector<int>>(j, "mul"), label);
    if (j.contains("generators")) s.table_generators = field<std::vector<int>>(j, "generators");
    return s;
  }
  if (kind == "permutations")
    return permutation_spec(field<int>(j, "degree"), field<std::vector<std::string>>(j, "generators"), label);
  if (kind == "semidirect") {
    const int p = field<int>(j, "p"), m = field<int>(j, "m");
    if (m < 1) schema("m must be positive");
    if (!j.contains("matrices") || !j["matrices"].is_array()) schema("missing field 'matrices'");
    std::vector<IntMat> mats;
    for (const auto& x : j["matrices"]) mats.push_back(matrix_from_json(x, m));
    if (!j.contains("acting")) schema("missing field 'acting'");
    return semidirect_spec(p, m, mats, group_spec_from_json(j["acting"]), label);
  }
  if (kind == "product") {
    if (!j.contains("factors") || !j["factors"].is_array()) schema("missing field 'factors'");
    std::vector<GroupSpec> fs;
    for (const auto& x : j["factors"]) fs.push_back(group_spec_from_json(x));
    return product_spec(fs, label);
  }
  schema("unknown kind '" + kind + "'");
}

GroupSpec load_group_spec(const std::string& source) {
  GroupSpec spec;
  if (source.rfind("catalog:", 0) == 0) {
    spec = catalog_spec(source.substr(8));
  } else {
    std::string text = source;
    const auto first = source.find_first_not_of(" \t\r\n");
    if (first == std::string::npos || source[first] != '{') {
      std::ifstream in(source);
      if (!in) throw Error(ErrorKind::ParseError, "cannot read group spec file '" + source + "'");
      std::stringstream ss;
      ss << in.rdbuf();
      text = ss.str();
    }
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw Error(ErrorKind::ParseError, "at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    spec = group_spec_from_json(j);
  }
  try {
    build_group(spec);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::SpecInvalid) schema(e.what());
    throw;
  }
  return spec;
}

Subgroup parse_subgroup_ref(const FiniteGroup& G, const std::string& ref) {
  if (ref == "trivial") return trivial_subgroup();
  if (ref == "all") return whole_group(G);
  if (ref == "derived") return derived_subgroup(G);
  if (ref.rfind("sylow:", 0) == 0) {
    std::int64_t p = 0;
    try {
      p = std::stoll(ref.substr(6));
    } catch (const std::exception&) {
      schema("bad prime in '" + ref + "'");
    }
    if (!is_prime(p)) schema("'" + ref + "': not a prime");
    return sylow_subgroup(G, p).subgroup;
  }
  std::vector<int> gens;
  std::stringstream ss(ref);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty() || tok.find_first_not_of(" 0123456789") != std::string::npos) schema("bad subgroup reference '" + ref + "'");
    const int g = std::stoi(tok);
    if (g < 0 || g >= G.n) schema("element " + tok + " out of range");
    gens.push_back(g);
  }
  if (gens.empty()) schema("empty subgroup reference");
  return subgroup_closure(G, gens);
}

json to_json(const FinAb& a) { return a.factors; }

FinAb finab_from_json(const json& j) { return FinAb::from_cyclic_orders(j.get<std::vector<std::int64_t>>()); }

json to_json(const Subgroup& H) { return H.elements; }

json to_json(const Conditions418& c) {
  return {{"p", c.p},
          {"sylow", to_json(c.sylow)},
          {"prereq_prime_divides", c.prereq_prime_divides},
          {"prereq_sylow_normal", c.prereq_sylow_normal},
          {"prereq_core_trivial", c.prereq_core_trivial},
          {"prereq_ordp_index_one", c.prereq_ordp_index_one},
          {"a", c.a},
          {"b", c.b},
          {"c", c.c}};
}

namespace {

Conditions418 conditions_from_json(const json& j) {
  Conditions418 c;
  c.p = j.at("p").get<std::int64_t>();
  c.sylow = subgroup_from_json(j.at("sylow"));
  c.prereq_prime_divides = j.at("prereq_prime_divides").get<bool>();
  c.prereq_sylow_normal = j.at("prereq_sylow_normal").get<bool>();
  c.prereq_core_trivial = j.at("prereq_core_trivial").get<bool>();
  c.prereq_ordp_index_one = j.at("prereq_ordp_index_one").get<bool>();
  c.a = j.at("a").get<bool>();
  c.b = j.at("b").get<bool>();
  c.c = j.at("c").get<bool>();
  return c;
}

}  // namespace

json to_json(const ShaReport& r, bool with_cocycles) {
  json j;
  j["group"] = {{"label", r.group_label}, {"order", r.group_order}};
  j["subgroup"] = to_json(r.subgroup);
  j["p"] = r.p ? json(*r.p) : json(nullptr);
  j["raw_dset"] = subgroups_json(r.raw_dset);
  j["dset"] = subgroups_json(r.dset);
  j["method"] = to_string(r.method);
  j["result"] = to_json(r.result);
  j["theorem_result"] = r.theorem_result ? to_json(*r.theorem_result) : json(nullptr);
  j["brute_result"] = r.brute_result ? to_json(*r.brute_result) : json(nullptr);
  j["agreement"] = r.agreement ? json(*r.agreement) : json(nullptr);
  j["conditions"] = r.conditions ? to_json(*r.conditions) : json(nullptr);
  j["p_part"] = r.p_part ? to_json(*r.p_part) : json(nullptr);
  if (r.prime_to_p) {
    j["prime_to_p"] = {{"structure", to_json(r.prime_to_p->structure)},
                       {"certificate", r.prime_to_p->certificate},
                       {"complement", to_json(r.prime_to_p->complement)},
                       {"hprime", to_json(r.prime_to_p->hprime)}};
  } else {
    j["prime_to_p"] = nullptr;
  }
  j["generator_count"] = r.generators.size();
  if (with_cocycles) {
    json gs = json::array();
    for (const auto& z : r.generators) gs.push_back(cocycle_json(z));
    j["generators"] = gs;
  }
  j["warnings"] = r.warnings;
  j["seconds"] = r.seconds;
  return j;
}

ShaReport sha_report_from_json(const json& j) {
  ShaReport r;
  try {
    r.group_label = j.at("group").at("label").get<std::string>();
    r.group_order = j.at("group").at("order").get<int>();
    r.subgroup = subgroup_from_json(j.at("subgroup"));
    if (!j.at("p").is_null()) r.p = j.at("p").get<std::int64_t>();
    r.raw_dset = subgroups_from_json(j.at("raw_dset"));
    r.dset = subgroups_from_json(j.at("dset"));
    r.method = parse_method(j.at("method").get<std::string>());
    r.result = finab_from_json(j.at("result"));
    if (!j.at("theorem_result").is_null()) r.theorem_result = finab_from_json(j.at("theorem_result"));
    if (!j.at("brute_result").is_null()) r.brute_result = finab_from_json(j.at("brute_result"));
    if (!j.at("agreement").is_null()) r.agreement = j.at("agreement").get<bool>();
    if (!j.at("conditions").is_null()) r.conditions = conditions_from_json(j.at("conditions"));
    if (!j.at("p_part").is_null()) r.p_part = finab_from_json(j.at("p_part"));
    if (!j.at("prime_to_p").is_null()) {
      const auto& q = j.at("prime_to_p");
      r.prime_to_p = PrimeToP{finab_from_json(q.at("structure")), q.at("certificate").get<std::string>(),
                              subgroup_from_json(q.at("complement")), subgroup_from_json(q.at("hprime"))};
    }
    if (j.contains("generators"))
      for (const auto& z : j.at("generators")) r.generators.push_back(cocycle_from_json(z));
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    r.seconds = j.at("seconds").get<double>();
  } catch (const json::exception& e) {
    schema(std::string("malformed sha report: ") + e.what());
  }
  return r;
}

json to_json(const ScanReport& r) {
  json hits = json::array();
  for (const auto& h : r.hits)
    hits.push_back({{"gprime", h.gprime},
                    {"gprime_order", h.gprime_order},
                    {"gprime_cyclic", h.gprime_cyclic},
                    {"hprime", h.hprime},
                    {"line", {h.line[0], h.line[1]}},
                    {"core_trivial", h.core_trivial}});
  return {{"p", r.p},
          {"n", r.n},
          {"conclusive", r.conclusive},
          {"closures", r.closures},
          {"budget", r.budget},
          {"classes", r.classes},
          {"matrix_encoding", "a + p b + p^2 c + p^3 d for [[a, b], [c, d]]"},
          {"hits", hits}};
}

json to_json(const DMembership& m) {
  return {{"d", m.d}, {"p", m.p}, {"in_pZ", m.in_pZ}, {"in_p2Z", m.in_p2Z},
          {"in_D1", m.in_D1}, {"in_D2", m.in_D2}, {"in_S", m.in_S}};
}

std::string digest(const json& j) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : j.dump()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace hnp
