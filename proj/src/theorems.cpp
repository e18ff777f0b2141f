#include "hnp/theorems.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>

#include "hnp/catalog.hpp"
#include "hnp/numbers.hpp"

namespace hnp {

namespace {

[[noreturn]] void violated(const std::string& what) { throw Error(ErrorKind::HypothesisViolated, what); }

Subgroup checked_subgroup(const FiniteGroup& G, const Subgroup& H) {
  if (!is_subgroup(G, H.elements)) violated("not a subgroup: " + describe(H));
  return H;
}

FinAb p_part_from(const FiniteGroup& G, const Conditions418& cond, const std::vector<Subgroup>& dset) {
  if (!cond.all()) return {};
  for (const auto& D : close_dset(G, dset))
    if (is_subset(cond.sylow, D)) return {};
  return FinAb::cyclic(cond.p);
}

PrimeToP prime_to_p_from(const FiniteGroup& G, const Subgroup& H, const Conditions418& cond,
                         const std::vector<Subgroup>& dset, const Budget& budget) {
  PrimeToP out;
  const Subgroup SH = join(G, cond.sylow, H);
  const std::int64_t idx = G.n / SH.order();
  if (idx == 1 || is_prime(idx)) {
    out.certificate = "prime-index";
    return out;
  }
  for (const auto& D : dset)
    if (!is_cyclic(G, D))
      throw Error(ErrorKind::CertificateUnavailable,
                  "(G : S_p H) = " + std::to_string(idx) + " is not prime and the dset has a non-cyclic member");
  out.certificate = "cyclic-dset";
  out.complement = complement(G, cond.sylow);
  out.hprime = intersection(out.complement, SH);
  GroupPtr Gp = share(subgroup_as_group(G, out.complement));
  auto J = j_lattice(Gp, {{to_local(out.complement, out.hprime), 1}});
  out.structure = sha(J.lattice, {}, budget).structure;
  return out;
}

std::optional<std::int64_t> default_prime(const FiniteGroup& G, const Subgroup& H) {
  for (auto q : prime_divisors(G.n))
    if (evaluate_conditions_4_18(G, H, q).prerequisites()) return q;
  return std::nullopt;
}

}  // namespace

FinAb sha_theorem_3_9(const FiniteGroup& G, const Family& pairs) {
  if (pairs.empty()) violated("empty family");
  std::int64_t p = 0;
  Subgroup N = whole_group(G);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const Subgroup& Hi = checked_subgroup(G, pairs[i].first);
    if (pairs[i].second < 1) violated("multiplicity must be positive");
    const std::int64_t idx = G.n / Hi.order();
    if (!is_prime(idx)) violated("index " + std::to_string(idx) + " is not prime");
    if (p == 0) p = idx;
    if (idx != p) violated("indices differ");
    if (!is_normal(G, Hi)) violated(describe(Hi) + " is not normal");
    for (std::size_t j = 0; j < pairs.size(); ++j)
      if (i != j && is_subset(Hi, pairs[j].first)) violated("family members are nested");
    N = intersection(N, Hi);
  }
  const int r = static_cast<int>(pairs.size());
  const int m = ord_p(G.n / N.order(), p);
  if (m == 2 && r >= 3) return FinAb::elementary(p, r - 2);
  return {};
}

FinAb sha_prop_3_8(std::int64_t n1, std::int64_t n2) {
  if (n1 < 1 || n2 < 1 || n2 % n1 != 0) violated("need n1 | n2");
  return FinAb::cyclic(n1);
}

std::int64_t annihilator_bound(const FiniteGroup& G, const Family& pairs) {
  std::int64_t g = 0;
  for (const auto& [H, e] : pairs) g = std::gcd(g, static_cast<std::int64_t>(G.n / H.order()));
  return g;
}

Conditions418 evaluate_conditions_4_18(const FiniteGroup& G, const Subgroup& H, std::int64_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p));
  Conditions418 c;
  c.p = p;
  c.prereq_prime_divides = G.n % p == 0;
  if (!c.prereq_prime_divides) return c;
  auto syl = sylow_subgroup(G, p);
  c.sylow = syl.subgroup;
  c.prereq_sylow_normal = syl.is_normal;
  c.prereq_core_trivial = core(G, H).order() == 1;
  c.prereq_ordp_index_one = ord_p(G.n / H.order(), p) == 1;
  if (!c.prerequisites()) return c;
  const Subgroup& S = c.sylow;
  const FiniteGroup SG = subgroup_as_group(G, S);
  c.a = S.order() == p * p && is_abelian(SG) && exponent(SG) == p;
  c.b = commutator_subgroup(G, S, whole_group(G)) == S;
  auto [Nz, Zz] = normalizer_centralizer(G, intersection(S, H));
  c.c = Nz == Zz;
  return c;
}

Conditions418 conditions_4_18(const FiniteGroup& G, const Subgroup& H, std::int64_t p) {
  checked_subgroup(G, H);
  auto c = evaluate_conditions_4_18(G, H, p);
  if (!c.prereq_prime_divides) violated(std::to_string(p) + " does not divide |G| = " + std::to_string(G.n));
  if (!c.prereq_sylow_normal) violated("Sylow " + std::to_string(p) + "-subgroup is not normal");
  if (!c.prereq_core_trivial) violated("core(G, H) is not trivial");
  if (!c.prereq_ordp_index_one) violated("ord_p (G : H) != 1");
  return c;
}

FinAb sha_p_part_4_18(const FiniteGroup& G, const Subgroup& H, std::int64_t p,
                      const std::vector<Subgroup>& dset) {
  return p_part_from(G, conditions_4_18(G, H, p), dset);
}

PrimeToP sha_prime_to_p_4_8(const FiniteGroup& G, const Subgroup& H, std::int64_t p,
                            const std::vector<Subgroup>& dset, const Budget& budget) {
  return prime_to_p_from(G, H, conditions_4_18(G, H, p), dset, budget);
}

const char* to_string(Method m) {
  switch (m) {
    case Method::Theorem: return "theorem";
    case Method::Brute: return "brute";
    case Method::Both: return "both";
  }
  return "?";
}

Method parse_method(const std::string& s) {
  if (s == "theorem") return Method::Theorem;
  if (s == "brute") return Method::Brute;
  if (s == "both") return Method::Both;
  throw Error(ErrorKind::SchemaError, "unknown method '" + s + "'");
}

ShaReport sha_full(GroupPtr Gp, const Subgroup& H, std::optional<std::int64_t> p,
                   const std::vector<Subgroup>& dset, Method method, const Budget& budget) {
  const auto t0 = std::chrono::steady_clock::now();
  const FiniteGroup& G = *Gp;
  checked_subgroup(G, H);
  for (const auto& D : dset) checked_subgroup(G, D);
  if (p && (!is_prime(*p) || G.n % *p != 0))
    violated(std::to_string(*p) + " is not a prime divisor of |G| = " + std::to_string(G.n));

  ShaReport rep;
  rep.group_label = G.label;
  rep.group_order = G.n;
  rep.subgroup = H;
  rep.p = p;
  rep.raw_dset = dset;
  rep.dset = close_dset(G, dset);
  rep.method = method;

  auto theorem = [&] {
    auto q = p ? p : default_prime(G, H);
    if (!q) violated("no prime meets the prerequisites (normal Sylow, trivial core, ord_p index 1)");
    rep.p = q;
    auto cond = conditions_4_18(G, H, *q);
    rep.conditions = cond;
    rep.p_part = p_part_from(G, cond, dset);
    rep.prime_to_p = prime_to_p_from(G, H, cond, dset, budget);
    rep.theorem_result = direct_sum(*rep.p_part, rep.prime_to_p->structure);
  };
  auto brute = [&] {
    auto J = j_lattice(Gp, {{H, 1}});
    auto s = sha(J.lattice, dset, budget);
    rep.brute_result = s.structure;
    rep.generators = s.generators;
  };

  if (method == Method::Theorem) {
    theorem();
  } else if (method == Method::Brute) {
    brute();
  } else {
    std::optional<Error> terr, berr;
    try {
      theorem();
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::HypothesisViolated && e.kind() != ErrorKind::CertificateUnavailable) throw;
      terr = e;
      rep.warnings.push_back(std::string("theorem path unavailable: ") + e.what());
    }
    try {
      brute();
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::BudgetExceeded) throw;
      berr = e;
      rep.warnings.push_back(std::string("brute path unavailable: ") + e.what());
    }
    if (terr && berr) throw *berr;
    if (rep.theorem_result && rep.brute_result) rep.agreement = *rep.theorem_result == *rep.brute_result;
  }
  rep.result = rep.brute_result ? *rep.brute_result : *rep.theorem_result;
  if (rep.agreement == false) rep.warnings.push_back("theorem and brute results differ");
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

bool vanishing_4_16(const FiniteGroup& G, const Subgroup& H, std::int64_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p));
  const std::int64_t idx = G.n / H.order();
  if (p > 2 && idx == 2 * p) return true;
  if (G.n % p != 0) return false;
  auto syl = sylow_subgroup(G, p);
  return syl.is_normal && ord_p(idx, p) == 1 && ord_p(syl.subgroup.order(), p) != 2;
}

const char* to_string(Classification c) {
  switch (c) {
    case Classification::HnpHolds: return "hnp_holds";
    case Classification::Alpha: return "alpha";
    case Classification::Beta: return "beta";
    case Classification::Uncovered: return "uncovered";
  }
  return "?";
}

std::vector<int> find_isomorphism(const FiniteGroup& G, const Subgroup& H, const FiniteGroup& R,
                                  const Subgroup& HR, int order_bound) {
  if (G.n != R.n || H.order() != HR.order()) return {};
  if (G.n > order_bound)
    throw Error(ErrorKind::SearchBudgetExceeded, "isomorphism search is bounded to order " + std::to_string(order_bound));
  const auto gens = generating_set(R, whole_group(R));
  const int k = static_cast<int>(gens.size());
  std::vector<int> prefix_order(k);
  for (int i = 0; i < k; ++i)
    prefix_order[i] = subgroup_closure(R, std::vector<int>(gens.begin(), gens.begin() + i + 1)).order();
  std::vector<std::vector<int>> cand(k);
  for (int i = 0; i < k; ++i) {
    const int o = element_order(R, gens[i]);
    for (int g = 0; g < G.n; ++g)
      if (element_order(G, g) == o) cand[i].push_back(g);
  }
  std::vector<Subgroup> conjugates;
  for (int g = 0; g < G.n; ++g) conjugates.push_back(conjugate(G, H, g));

  std::vector<int> images(k), found;
  std::function<bool(int)> go = [&](int d) {
    if (d == k) {
      auto m = extend_homomorphism(R, gens, G, images);
      if (m.empty()) return false;
      std::vector<int> seen(m);
      std::sort(seen.begin(), seen.end());
      if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
      Subgroup img;
      for (int x : HR.elements) img.elements.push_back(m[x]);
      std::sort(img.elements.begin(), img.elements.end());
      if (std::find(conjugates.begin(), conjugates.end(), img) == conjugates.end()) return false;
      found = std::move(m);
      return true;
    }
    for (int g : cand[d]) {
      images[d] = g;
      if (subgroup_closure(G, std::vector<int>(images.begin(), images.begin() + d + 1)).order() != prefix_order[d])
        continue;
      if (go(d + 1)) return true;
    }
    return false;
  };
  go(0);
  return found;
}

ClassifyResult classify_6_11(const FiniteGroup& G, const Subgroup& H) {
  checked_subgroup(G, H);
  const std::int64_t idx = G.n / H.order();
  auto ps = prime_divisors(idx);
  if (ps.size() != 2 || ps[0] * ps[1] != idx) violated("(G : H) = " + std::to_string(idx) + " is not a product of two distinct primes");
  if (core(G, H).order() != 1) violated("core(G, H) is not trivial");

  std::vector<ClassifyResult> results;
  for (int k = 0; k < 2; ++k) {
    const std::int64_t p = ps[k], l = ps[1 - k];
    if (!sylow_subgroup(G, p).is_normal) continue;
    ClassifyResult r;
    r.p = p;
    r.l = l;
    r.conditions = evaluate_conditions_4_18(G, H, p);
    if (p > 2 && l == 2) {
      r.kind = Classification::HnpHolds;
      r.reason = "p > 2 = l";
    } else if ((p * p - 1) % l != 0) {
      r.kind = Classification::HnpHolds;
      r.reason = "l does not divide p^2 - 1";
    } else if (l == 3) {
      r.kind = Classification::HnpHolds;
      r.reason = "l = 3 and neither exceptional shape matches";
      try {
        if (G.n == 3 * p * p) {
          FiniteGroup A = build_group(alpha_spec(static_cast<int>(p)));
          if (!find_isomorphism(G, H, A, subgroup_closure(A, {1})).empty()) {
            r.kind = Classification::Alpha;
            r.reason = "isomorphic to (Z/p)^2 x|_phi1 Z/3 with H -> <(1,0)> x| {0}";
          }
        } else if (p >= 5 && G.n == 6 * p * p) {
          FiniteGroup S3 = build_group(s3_spec());
          FiniteGroup B = build_group(beta_spec(static_cast<int>(p)));
          const int pi = static_cast<int>(p);
          Subgroup HB = subgroup_closure(
              B, {semidirect_index(pi, 2, {1, 1}, 0), semidirect_index(pi, 2, {0, 0}, S3.generators[1])});
          if (!find_isomorphism(G, H, B, HB).empty()) {
            r.kind = Classification::Beta;
            r.reason = "isomorphic to (Z/p)^2 x|_phi2 S3 with H -> <(1,1)> x| <(1 2)>";
          }
        }
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::SearchBudgetExceeded) throw;
        r.kind = Classification::Uncovered;
        r.reason = e.what();
      }
    } else {
      r.kind = Classification::Uncovered;
      r.reason = "l >= 5 divides p^2 - 1; no classification statement applies";
    }
    results.push_back(r);
  }
  if (results.empty()) violated("no prime factor of the index has a normal Sylow subgroup");
  for (auto want : {Classification::Alpha, Classification::Beta, Classification::HnpHolds})
    for (auto& r : results)
      if (r.kind == want) return r;
  return results.front();
}

Witness witness_6_12_i(std::int64_t p) {
  if (!is_prime(p) || p == 3) throw Error(ErrorKind::PreconditionFailed, "need a prime p != 3");
  const int pi = static_cast<int>(p);
  Witness w;
  w.spec = semidirect_spec(pi, 2, {phi1_matrix(), IntMat::Identity(2, 2)},
                           product_spec({cyclic_spec(3), cyclic_spec(3)}),
                           "(Z/" + std::to_string(p) + ")^2 x| (Z/3)^2");
  w.group = share(build_group(w.spec, 1 << 20));
  w.H = subgroup_closure(*w.group, {semidirect_index(pi, 2, {1, 0}, 0)});
  w.index = w.group->n / w.H.order();
  w.prediction = FinAb::cyclic(3 * p);
  return w;
}

Witness witness_6_12_ii(std::int64_t p, std::int64_t l) {
  if (!is_prime(p) || p == 3) throw Error(ErrorKind::PreconditionFailed, "need a prime p != 3");
  if (!is_prime(l) || l == 3 || l == p) throw Error(ErrorKind::PreconditionFailed, "need a prime l not dividing 3p");
  const int pi = static_cast<int>(p), li = static_cast<int>(l);
  const IntMat I = IntMat::Identity(2, 2);
  Witness w;
  w.spec = semidirect_spec(pi, 2, {I, I, phi1_matrix()}, alpha_spec(li),
                           "(Z/" + std::to_string(p) + ")^2 x| ((Z/" + std::to_string(l) + ")^2 x| Z/3)");
  w.group = share(build_group(w.spec, 1 << 20));
  // L_l x| {0} is element 1 of the acting group
  w.H = subgroup_closure(*w.group, {semidirect_index(pi, 2, {1, 0}, 0), semidirect_index(pi, 2, {0, 0}, 1)});
  w.index = w.group->n / w.H.order();
  w.prediction = FinAb::cyclic(p * l);
  return w;
}

}  // namespace hnp
