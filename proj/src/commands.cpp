#include "hnp/commands.hpp"

#include <chrono>
#include <map>
#include <set>

#include "hnp/group.hpp"
#include "hnp/numbers.hpp"
#include "hnp/selftest.hpp"

namespace hnp {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::SchemaError, what); }

struct OptionSpec {
  std::set<std::string> required;
  std::set<std::string> allowed;
};

const std::map<std::string, OptionSpec>& option_table() {
  static const std::map<std::string, OptionSpec> t{
      {"sha", {{"group", "subgroup"}, {"group", "subgroup", "p", "method", "dset", "cocycles"}}},
      {"scan-reps", {{"p", "n"}, {"p", "n", "budget"}}},
      {"dset", {{"p"}, {"p", "max"}}},
      {"classify", {{"group", "subgroup"}, {"group", "subgroup"}}},
      {"witness", {{"p", "variant"}, {"p", "variant", "l", "method"}}},
      {"selftest", {{}, {"scope"}}},
  };
  return t;
}

std::int64_t int_opt(const json& o, const std::string& key) {
  const auto& v = o.at(key);
  if (!v.is_number_integer()) bad("--" + key + " must be an integer");
  return v.get<std::int64_t>();
}

std::string str_opt(const json& o, const std::string& key) {
  const auto& v = o.at(key);
  if (!v.is_string()) bad("--" + key + " must be a string");
  return v.get<std::string>();
}

void validate(const Command& cmd) {
  auto it = option_table().find(cmd.verb);
  if (it == option_table().end()) bad("unknown verb '" + cmd.verb + "'");
  if (!cmd.options.is_object()) bad("options must be an object");
  for (const auto& key : it->second.required)
    if (!cmd.options.contains(key)) bad("missing --" + key);
  for (const auto& [key, v] : cmd.options.items()) {
    if (!it->second.allowed.count(key)) bad("unknown option --" + key + " for " + cmd.verb);
    if (key == "p" || key == "n" || key == "l" || key == "max" || key == "budget") {
      if (int_opt(cmd.options, key) < 1) bad("--" + key + " must be positive");
    } else if (key == "cocycles") {
      if (!v.is_boolean()) bad("--cocycles is a flag");
    } else if (key == "dset") {
      if (!v.is_array()) bad("--dset must be a list");
      for (const auto& e : v)
        if (!e.is_string()) bad("--dset entries must be strings");
    } else {
      str_opt(cmd.options, key);
    }
  }
  if (cmd.options.contains("method")) parse_method(str_opt(cmd.options, "method"));
  if (cmd.options.contains("variant")) {
    auto v = str_opt(cmd.options, "variant");
    if (v != "i" && v != "ii") bad("--variant must be i or ii");
    if (v == "ii" && !cmd.options.contains("l")) bad("--variant ii needs --l");
  }
  if (cmd.options.contains("scope")) {
    auto s = str_opt(cmd.options, "scope");
    if (s != "quick" && s != "full") bad("--scope must be quick or full");
  }
}

json to_json(const ClassifyResult& c) {
  json j{{"kind", to_string(c.kind)}, {"p", c.p}, {"l", c.l}, {"reason", c.reason}};
  if (c.conditions) j["conditions"] = to_json(*c.conditions);
  return j;
}

json to_json(const Check& c) {
  json j{{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}, {"seconds", c.seconds}};
  if (c.limit_seconds > 0) j["limit_seconds"] = c.limit_seconds;
  return j;
}

struct Loaded {
  json spec;
  GroupPtr group;
  Subgroup H;
};

Loaded load_pair(const json& o) {
  auto spec = load_group_spec(str_opt(o, "group"));
  auto G = share(build_group(spec));
  auto H = parse_subgroup_ref(*G, str_opt(o, "subgroup"));
  return {to_json(spec), G, H};
}

json run_sha(const json& o, json& inputs, std::vector<std::string>& warnings) {
  auto [spec, G, H] = load_pair(o);
  inputs["group"] = spec;
  std::vector<Subgroup> dset;
  if (o.contains("dset"))
    for (const auto& ref : o["dset"]) dset.push_back(parse_subgroup_ref(*G, ref.get<std::string>()));
  std::optional<std::int64_t> p;
  if (o.contains("p")) p = int_opt(o, "p");
  const Method m = o.contains("method") ? parse_method(str_opt(o, "method")) : Method::Both;
  auto r = sha_full(G, H, p, dset, m);
  warnings.insert(warnings.end(), r.warnings.begin(), r.warnings.end());
  return to_json(r, o.value("cocycles", false));
}

json run_scan(const json& o) {
  ScanBudget b;
  if (o.contains("budget")) b.max_closures = int_opt(o, "budget");
  auto r = exhaustive_scan(int_opt(o, "p"), int_opt(o, "n"), b);
  return to_json(r);
}

json run_dset(const json& o) {
  const std::int64_t p = int_opt(o, "p");
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  const std::int64_t max = o.contains("max") ? int_opt(o, "max") : 10 * p * p;
  json list = json::array();
  for (std::int64_t d = p; d <= max; d += p) {
    auto m = d_membership(d, p);
    if (m.in_S) list.push_back(to_json(m));
  }
  return {{"p", p}, {"max", max}, {"s_min", s_min(p)}, {"members", list}};
}

json run_classify(const json& o, json& inputs) {
  auto [spec, G, H] = load_pair(o);
  inputs["group"] = spec;
  auto c = classify_6_11(*G, H);
  json j = to_json(c);
  j["group_order"] = G->n;
  j["subgroup"] = to_json(H);
  return j;
}

json run_witness(const json& o, std::vector<std::string>& warnings) {
  const std::int64_t p = int_opt(o, "p");
  const bool first = str_opt(o, "variant") == "i";
  auto w = first ? witness_6_12_i(p) : witness_6_12_ii(p, int_opt(o, "l"));
  const Method m = o.contains("method") ? parse_method(str_opt(o, "method")) : Method::Both;
  auto r = sha_full(w.group, w.H, p, {}, m);
  warnings.insert(warnings.end(), r.warnings.begin(), r.warnings.end());
  return {{"group", to_json(w.spec)},
          {"index", w.index},
          {"prediction", to_json(w.prediction)},
          {"matches_prediction", r.result == w.prediction},
          {"sha", to_json(r)}};
}

json run_selftest(const json& o, int& exit_code) {
  const std::string scope = o.value("scope", std::string("quick"));
  auto criteria = quick_criteria();
  if (scope == "full")
    for (auto& c : acceptance_criteria()) criteria.push_back(std::move(c));
  json checks = json::array();
  bool all = true;
  for (const auto& c : criteria) {
    auto r = run_criterion(c);
    all &= r.pass;
    checks.push_back(to_json(r));
  }
  exit_code = all ? 0 : 1;
  return {{"scope", scope}, {"passed", all}, {"checks", checks}};
}

}  // namespace

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::HypothesisViolated:
    case ErrorKind::NotPrime:
    case ErrorKind::NotCoprime:
    case ErrorKind::PreconditionFailed:
    case ErrorKind::CertificateUnavailable:
    case ErrorKind::EmptyFamily:
    case ErrorKind::NotCyclic:
    case ErrorKind::GroupMismatch:
      return 1;
    case ErrorKind::BudgetExceeded:
    case ErrorKind::OrderBudgetExceeded:
    case ErrorKind::SearchBudgetExceeded:
    case ErrorKind::Overflow:
      return 2;
    case ErrorKind::ParseError:
    case ErrorKind::SchemaError:
    case ErrorKind::SpecInvalid:
      return 3;
  }
  return 1;
}

json strip_timing(const json& report) {
  if (report.is_object()) {
    json out = json::object();
    for (const auto& [k, v] : report.items())
      if (k != "seconds") out[k] = strip_timing(v);
    return out;
  }
  if (report.is_array()) {
    json out = json::array();
    for (const auto& v : report) out.push_back(strip_timing(v));
    return out;
  }
  return report;
}

CommandResult run(const Command& cmd) {
  CommandResult out;
  json& rep = out.report;
  rep["command"] = {{"verb", cmd.verb}, {"options", cmd.options}};
  json inputs{{"verb", cmd.verb}, {"options", cmd.options}};
  std::vector<std::string> warnings;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    validate(cmd);
    const json& o = cmd.options;
    if (cmd.verb == "sha")
      rep["results"] = run_sha(o, inputs, warnings);
    else if (cmd.verb == "scan-reps") {
      rep["results"] = run_scan(o);
      if (!rep["results"]["conclusive"].get<bool>()) {
        warnings.push_back("scan stopped at its closure budget; the hit list may be incomplete");
        out.exit_code = 2;
      }
    } else if (cmd.verb == "dset")
      rep["results"] = run_dset(o);
    else if (cmd.verb == "classify")
      rep["results"] = run_classify(o, inputs);
    else if (cmd.verb == "witness")
      rep["results"] = run_witness(o, warnings);
    else
      rep["results"] = run_selftest(o, out.exit_code);
  } catch (const Error& e) {
    rep["error"] = {{"kind", to_string(e.kind())}, {"message", e.what()}};
    out.exit_code = exit_code_for(e.kind());
  } catch (const std::exception& e) {
    rep["error"] = {{"kind", "Internal"}, {"message", e.what()}};
    out.exit_code = 1;
  }
  std::string method = cmd.options.is_object() && cmd.options.contains("method") && cmd.options["method"].is_string()
                           ? cmd.options["method"].get<std::string>()
                           : (cmd.verb == "sha" || cmd.verb == "witness" ? "both" : "n/a");
  rep["inputs_digest"] = digest(inputs);
  rep["provenance"] = {{"method", method},
                       {"budget", Budget::from_env().max_columns},
                       {"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()}};
  rep["warnings"] = warnings;
  rep["exit_code"] = out.exit_code;
  rep["report_digest"] = digest(strip_timing(rep));
  return out;
}

}  // namespace hnp
