#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "hnp/commands.hpp"

using hnp::json;

namespace {

struct Flags {
  std::string group, subgroup, method, variant, scope;
  std::vector<std::string> dset;
  std::optional<std::int64_t> p, n, l, max, budget;
  bool cocycles = false;
};

void put(json& o, const std::string& key, const std::string& v) {
  if (!v.empty()) o[key] = v;
}
void put(json& o, const std::string& key, const std::optional<std::int64_t>& v) {
  if (v) o[key] = *v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tate-Shafarevich groups of norm-one-torus character lattices"};
  app.require_subcommand(1);
  Flags f;

  auto* sha = app.add_subcommand("sha", "Sha^2_D(G, J_{G/H}) by the structural criteria and/or brute force");
  sha->add_option("--group", f.group, "group spec: file, inline JSON, or catalog:<name>")->required();
  sha->add_option("--subgroup", f.subgroup, "trivial, all, derived, sylow:<p>, or element indices \"0,1\"")->required();
  sha->add_option("--p", f.p, "prime for the structural path");
  sha->add_option("--method", f.method, "theorem, brute, or both (default)");
  sha->add_option("--dset", f.dset, "decomposition-group subgroup (repeatable); default: cyclic subgroups");
  sha->add_flag("--cocycles", f.cocycles, "include generating cocycles");

  auto* scan = app.add_subcommand("scan-reps", "exhaustive search of 2-dim F_p-representations");
  scan->add_option("--p", f.p)->required();
  scan->add_option("--n", f.n, "index (G':H')")->required();
  scan->add_option("--budget", f.budget, "maximum subgroup closures");

  auto* dset = app.add_subcommand("dset", "list the exceptional degrees for p");
  dset->add_option("--p", f.p)->required();
  dset->add_option("--max", f.max, "largest degree (default 10 p^2)");

  auto* classify = app.add_subcommand("classify", "classify an index-pl pair");
  classify->add_option("--group", f.group)->required();
  classify->add_option("--subgroup", f.subgroup)->required();

  auto* witness = app.add_subcommand("witness", "build and evaluate a counterexample family member");
  witness->add_option("--p", f.p)->required();
  witness->add_option("--variant", f.variant, "i or ii")->required();
  witness->add_option("--l", f.l, "second prime for variant ii");
  witness->add_option("--method", f.method);

  auto* selftest = app.add_subcommand("selftest", "run the built-in checks");
  selftest->add_option("--scope", f.scope, "quick (default) or full");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 3;
  }

  hnp::Command cmd;
  cmd.verb = app.get_subcommands().front()->get_name();
  json& o = cmd.options;
  put(o, "group", f.group);
  put(o, "subgroup", f.subgroup);
  put(o, "method", f.method);
  put(o, "variant", f.variant);
  put(o, "scope", f.scope);
  put(o, "p", f.p);
  put(o, "n", f.n);
  put(o, "l", f.l);
  put(o, "max", f.max);
  put(o, "budget", f.budget);
  if (!f.dset.empty()) o["dset"] = f.dset;
  if (f.cocycles) o["cocycles"] = true;

  auto r = hnp::run(cmd);
  std::cout << r.report.dump(2) << "\n";
  if (r.report.contains("error"))
    std::cerr << "hnp: " << r.report["error"]["message"].get<std::string>() << "\n";
  return r.exit_code;
}
