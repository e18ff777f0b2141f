#include "hnp/selftest.hpp"

#include <chrono>
#include <numeric>
#include <sstream>

#include "hnp/catalog.hpp"
#include "hnp/cohomology.hpp"
#include "hnp/numbers.hpp"
#include "hnp/reps.hpp"
#include "hnp/theorems.hpp"

namespace hnp {

namespace {

GroupPtr cat(const std::string& name) { return share(build_group(catalog_spec(name))); }

FinAb brute(GroupPtr G, const Family& fam, const std::vector<Subgroup>& dset = {}) {
  return sha(j_lattice(G, fam).lattice, dset).structure;
}

std::vector<Subgroup> of_index(const FiniteGroup& G, int idx) {
  std::vector<Subgroup> out;
  for (auto& H : all_subgroups(G))
    if (G.n / H.order() == idx) out.push_back(H);
  return out;
}

// Appends a mismatch note; returns ok.
bool expect(bool ok, std::ostringstream& log, const std::string& what) {
  if (!ok) log << what << "; ";
  return ok;
}

std::string str(const FinAb& a) { return a.str(); }

bool shapiro_on(GroupPtr G, std::ostringstream& log, int& count) {
  bool ok = true;
  for (const auto& H : all_subgroups(*G)) {
    auto I = induced_perm_lattice(G, H).lattice;
    auto h2 = cohomology(I, 2).structure;
    auto ab = abelianization(subgroup_as_group(*G, H)).structure;
    ok &= expect(h2 == ab, log, G->label + " H=" + describe(H) + ": H2(Ind) " + str(h2) + " vs H^ab " + str(ab));
    auto s = sha(I, {}).structure;
    ok &= expect(s.trivial(), log, G->label + " H=" + describe(H) + ": Sha(Ind) = " + str(s));
    ++count;
  }
  return ok;
}

}  // namespace

Check run_criterion(const Criterion& c) {
  Check out{c.id, c.name, false, {}, 0, c.limit_seconds};
  const auto t0 = std::chrono::steady_clock::now();
  try {
    out.pass = c.body(out.detail);
  } catch (const std::exception& e) {
    out.pass = false;
    out.detail += std::string("exception: ") + e.what();
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (c.limit_seconds > 0 && out.seconds > c.limit_seconds) {
    out.pass = false;
    out.detail += " (over the time limit)";
  }
  return out;
}

std::vector<Criterion> quick_criteria() {
  std::vector<Criterion> out;
  for (const auto& name : catalog_names()) {
    GroupPtr G = cat(name);
    if (G->n > 16) continue;
    out.push_back({"quick:" + name, "invariants on " + name, 0, [G](std::string& detail) {
                     std::ostringstream log;
                     bool ok = true;
                     int instances = 0;
                     for (const auto& H : all_subgroups(*G)) {
                       auto J = j_lattice(G, {{H, 1}}).lattice;
                       const std::int64_t idx = G->n / H.order();
                       auto s = sha(J, {}).structure;
                       ok &= expect(idx % s.exponent() == 0, log, "exponent does not divide the index");
                       ok &= expect(sha(J, {whole_group(*G)}).structure.trivial(), log, "Sha with G in D is not trivial");
                       ok &= expect(cohomology(J, 1).structure == h1_j_formula(*G, {{H, 1}}), log, "H1 formula differs");
                       for (auto q : prime_divisors(G->n))
                         if (evaluate_conditions_4_18(*G, H, q).prerequisites()) {
                           auto r = sha_full(G, H, q, {}, Method::Both);
                           ok &= expect(r.agreement == true, log, "theorem and brute differ");
                         }
                       ++instances;
                     }
                     ok &= shapiro_on(G, log, instances);
                     detail = std::to_string(instances) + " instances " + log.str();
                     return ok;
                   }});
  }
  return out;
}

std::vector<Criterion> acceptance_criteria() {
  std::vector<Criterion> out;

  out.push_back({"1", "Z/n1 x Z/n2 with J_G: brute Sha_omega = Z/n1", 90, [](std::string& detail) {
                   std::ostringstream log;
                   bool ok = true;
                   for (auto [n1, n2] : std::vector<std::pair<int, int>>{{2, 2}, {2, 4}, {3, 3}}) {
                     const auto t0 = std::chrono::steady_clock::now();
                     auto G = share(build_group(product_spec({cyclic_spec(n1), cyclic_spec(n2)})));
                     auto s = brute(G, {{trivial_subgroup(), 1}});
                     const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
                     ok &= expect(s == FinAb::cyclic(n1) && s == sha_prop_3_8(n1, n2) && dt < 30, log,
                                  "(" + std::to_string(n1) + "," + std::to_string(n2) + ") gave " + str(s));
                     log << "(" << n1 << "," << n2 << ")->" << str(s) << " ";
                   }
                   detail = log.str();
                   return ok;
                 }});

  out.push_back({"2", "normal prime-index families: brute equals the closed formula", 300, [](std::string& detail) {
                   std::ostringstream log;
                   bool ok = true;
                   auto run = [&](const std::string& name, const Family& fam, const FinAb* want) {
                     auto G = cat(name);
                     auto t = sha_theorem_3_9(*G, fam);
                     auto b = brute(G, fam);
                     ok &= expect(t == b, log, name + " r=" + std::to_string(fam.size()) + " formula " + str(t) + " brute " + str(b));
                     if (want) ok &= expect(b == *want, log, name + " expected " + str(*want));
                     log << name << " r=" << fam.size() << "->" << str(b) << " ";
                   };
                   auto K = cat("klein");
                   auto k2 = of_index(*K, 2);
                   for (std::size_t r = 2; r <= 3; ++r) {
                     Family f;
                     for (std::size_t i = 0; i < r; ++i) f.push_back({k2[i], 1});
                     run("klein", f, nullptr);
                   }
                   auto Z = cat("z3xz3");
                   auto z3 = of_index(*Z, 3);
                   const FinAb z33 = FinAb::elementary(3, 2);
                   for (std::size_t r = 2; r <= 4; ++r) {
                     Family f;
                     for (std::size_t i = 0; i < r; ++i) f.push_back({z3[i], 1});
                     run("z3xz3", f, r == 4 ? &z33 : nullptr);
                   }
                   auto E = cat("z2xz2xz2");
                   Family coords;
                   for (int i = 0; i < 3; ++i) {
                     std::vector<int> gens;
                     for (int j = 0; j < 3; ++j)
                       if (j != i) gens.push_back(1 << j);
                     coords.push_back({subgroup_closure(*E, gens), 1});
                   }
                   const FinAb zero;
                   run("z2xz2xz2", coords, &zero);
                   detail = log.str();
                   return ok;
                 }});

  out.push_back({"3", "(Z/2)^2 x| Z/3 with H of order 2: conditions, dset dependence, agreement", 60,
                 [](std::string& detail) {
                   std::ostringstream log;
                   auto A = cat("a4shape");
                   auto H = subgroup_closure(*A, {1});
                   auto c = conditions_4_18(*A, H, 2);
                   bool ok = expect(c.a && c.b && c.c, log, "conditions not all true");
                   auto cg = brute(A, {{H, 1}});
                   auto s2 = brute(A, {{H, 1}}, {c.sylow});
                   ok &= expect(cg == FinAb::cyclic(2), log, "C_G gave " + str(cg));
                   ok &= expect(s2.trivial(), log, "with S_2 gave " + str(s2));
                   auto r = sha_full(A, H, 2, {}, Method::Both);
                   ok &= expect(r.agreement == true, log, "paths disagree");
                   auto r2 = sha_full(A, H, 2, {c.sylow}, Method::Both);
                   ok &= expect(r2.agreement == true && r2.result.trivial(), log, "paths disagree with S_2 in D");
                   detail = log.str() + "C_G->" + str(cg) + " with S_2->" + str(s2);
                   return ok;
                 }});

  out.push_back({"4", "prime-index subgroups give trivial Sha_omega", 300, [](std::string& detail) {
                   std::ostringstream log;
                   bool ok = true;
                   int count = 0;
                   for (const auto& name : catalog_names()) {
                     auto G = cat(name);
                     if (G->n > 24) continue;
                     for (const auto& H : all_subgroups(*G)) {
                       if (!is_prime(G->n / H.order())) continue;
                       auto s = brute(G, {{H, 1}});
                       ok &= expect(s.trivial(), log, name + " H=" + describe(H) + " gave " + str(s));
                       ++count;
                     }
                   }
                   detail = std::to_string(count) + " instances " + log.str();
                   return ok && count > 0;
                 }});

  out.push_back({"5", "exponent bounds on the catalog", 300, [](std::string& detail) {
                   std::ostringstream log;
                   bool ok = true;
                   int count = 0, skipped = 0;
                   for (const auto& name : catalog_names()) {
                     auto G = cat(name);
                     auto subs = all_subgroups(*G);
                     for (std::size_t i = 0; i < subs.size(); ++i) {
                       std::vector<Family> fams{{{subs[i], 1}}};
                       if (i + 1 < subs.size()) fams.push_back({{subs[i], 1}, {subs[i + 1], 1}});
                       for (const auto& fam : fams) {
                         FinAb s;
                         try {
                           s = brute(G, fam);
                         } catch (const Error& e) {
                           if (e.kind() != ErrorKind::BudgetExceeded) throw;
                           ++skipped;
                           continue;
                         }
                         const std::int64_t g = annihilator_bound(*G, fam);
                         ok &= expect(g % s.exponent() == 0, log, name + ": exponent does not divide gcd of indices");
                         if (fam.size() == 1) {
                           const std::int64_t idx = G->n / fam[0].first.order();
                           for (auto q : prime_divisors(idx))
                             if (q > 2 && idx == 2 * q)
                               ok &= expect(2 % s.exponent() == 0, log, name + ": index 2p but exponent " + std::to_string(s.exponent()));
                         }
                         ++count;
                       }
                     }
                   }
                   detail = std::to_string(count) + " instances, " + std::to_string(skipped) + " over budget " + log.str();
                   return ok;
                 }});

  out.push_back({"6", "degree-set membership and least degrees", 1, [](std::string& detail) {
                   std::ostringstream log;
                   bool ok = true;
                   const std::vector<std::pair<std::int64_t, std::int64_t>> mins{{2, 4}, {3, 9}, {5, 15}, {7, 21}, {11, 33}};
                   for (auto [p, want] : mins) {
                     auto got = s_min(p);
                     ok &= expect(got == want, log, "s_min(" + std::to_string(p) + ") = " + std::to_string(got));
                     log << "s_min(" << p << ")=" << got << " ";
                   }
                   ok &= expect(d_membership(55, 11).in_D1, log, "55 not in D_1(11)");
                   ok &= expect(d_membership(91, 13).in_D2, log, "91 not in D_2(13)");
                   ok &= expect(d_membership(95, 19).in_D2, log, "95 not in D_2(19)");
                   detail = log.str();
                   return ok;
                 }});

  out.push_back({"7", "GL_2(F_5) scan: hits exactly on the degree sets, index 4 only cyclic", 600,
                 [](std::string& detail) {
                   std::ostringstream log;
                   bool ok = true;
                   for (std::int64_t n : {2, 3, 4, 6}) {
                     auto s = exhaustive_scan(5, n);
                     auto d = d_membership(5 * n, 5);
                     ok &= expect(s.conclusive, log, "scan n=" + std::to_string(n) + " hit its budget");
                     ok &= expect(s.hits.empty() == !(d.in_D1 || d.in_D2), log, "n=" + std::to_string(n) + " mismatch");
                     if (n == 4)
                       for (const auto& h : s.hits)
                         ok &= expect(h.gprime_order == 4 && h.gprime_cyclic, log, "index-4 hit with G' not Z/4");
                     log << "n=" << n << ":" << s.hits.size() << " hits/" << s.classes << " classes/" << s.closures
                         << " closures (budget " << s.budget << ") ";
                   }
                   detail = log.str();
                   return ok;
                 }});

  out.push_back({"8", "(B),(C) of witness representations match (b),(c) on the semidirect product", 120,
                 [](std::string& detail) {
                   std::ostringstream log;
                   bool ok = true;
                   int count = 0;
                   for (std::int64_t p : {2, 3, 5})
                     for (std::int64_t n = 1; n <= 12; ++n) {
                       if (n % p == 0) continue;
                       auto w = witness_rep(p, n);
                       if (!w) continue;
                       auto sd = build_semidirect(*w);
                       auto c = conditions_4_18(*sd.group, sd.H, p);
                       auto bc = check_BC(*w);
                       ok &= expect(bc.B == c.b && bc.C == c.c, log, "p=" + std::to_string(p) + " n=" + std::to_string(n));
                       ++count;
                     }
                   detail = std::to_string(count) + " witnesses " + log.str();
                   return ok && count > 0;
                 }});

  out.push_back({"9", "2-Sylow subgroups of GL_2(F_p): orders and relations", 10, [](std::string& detail) {
                   std::ostringstream log;
                   bool ok = true;
                   for (std::int64_t p : {3, 5, 7, 11, 13}) {
                     auto s = sylow2_gl2(p);
                     ok &= expect(s.order == s.expected_order, log, "p=" + std::to_string(p) + " order " + std::to_string(s.order));
                     if (p % 4 == 3) ok &= expect(s.relations_hold == true, log, "relations fail at p=" + std::to_string(p));
                     log << "p=" << p << ":" << s.order << " ";
                   }
                   detail = log.str();
                   return ok;
                 }});

  out.push_back({"10", "order-36 witness at p=2: theorem path [6] = [2] + [3], brute confirmation", 900,
                 [](std::string& detail) {
                   std::ostringstream log;
                   auto w = witness_6_12_i(2);
                   bool ok = expect(w.group->n == 36 && w.index == 18, log, "wrong witness shape");
                   auto t = sha_full(w.group, w.H, 2, {}, Method::Theorem);
                   ok &= expect(t.result == FinAb::cyclic(6), log, "theorem path gave " + str(t.result));
                   ok &= expect(*t.p_part == FinAb::cyclic(2), log, "p-part " + str(*t.p_part));
                   ok &= expect(t.prime_to_p->structure == sha_prop_3_8(3, 3), log, "prime-to-p part " + str(t.prime_to_p->structure));
                   try {
                     auto b = brute(w.group, {{w.H, 1}});
                     ok &= expect(b == t.result, log, "brute gave " + str(b));
                     log << "brute " << str(b) << " ";
                   } catch (const Error& e) {
                     if (e.kind() != ErrorKind::BudgetExceeded) throw;
                     // p-part through the restriction to S_p
                     auto b = sha(restrict(j_lattice(w.group, {{w.H, 1}}).lattice, sylow_subgroup(*w.group, 2).subgroup), {});
                     ok &= expect(b.structure.p_part(2) == FinAb::cyclic(2), log, "restricted p-part " + str(b.structure));
                     log << "brute over budget; p-part via S_p ";
                   }
                   detail = log.str() + "theorem " + str(t.result);
                   return ok;
                 }});

  out.push_back({"11", "induced lattices: H^2 is the abelianization, Sha_omega vanishes", 300, [](std::string& detail) {
                   std::ostringstream log;
                   bool ok = true;
                   int count = 0;
                   for (const auto& name : catalog_names()) {
                     auto G = cat(name);
                     if (G->n > 16) continue;
                     ok &= shapiro_on(G, log, count);
                   }
                   auto S3 = cat("s3");
                   Subgroup A3 = subgroup_closure(*S3, {S3->generators[0]});
                   auto h2 = cohomology(induced_perm_lattice(S3, A3).lattice, 2).structure;
                   ok &= expect(h2 == FinAb::cyclic(3), log, "(S3, A3) gave " + str(h2));
                   detail = std::to_string(count) + " pairs, (S3,A3)->" + str(h2) + " " + log.str();
                   return ok;
                 }});
  return out;
}

}  // namespace hnp
