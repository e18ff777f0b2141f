#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hnp/cohomology.hpp"
#include "hnp/finab.hpp"
#include "hnp/group.hpp"
#include "hnp/group_spec.hpp"

namespace hnp {

using Family = std::vector<std::pair<Subgroup, int>>;

// Family of normal subgroups of one prime index p, pairwise non-nested:
// (Z/p)^(r-2) when (G : intersection) = p^2 and r >= 3, trivial otherwise.
FinAb sha_theorem_3_9(const FiniteGroup& G, const Family& pairs);
// Sha_omega(Z/n1 x Z/n2, J_G) = Z/n1 for n1 | n2.
FinAb sha_prop_3_8(std::int64_t n1, std::int64_t n2);
// gcd of the indices (G : H_i); it kills Sha_omega.
std::int64_t annihilator_bound(const FiniteGroup& G, const Family& pairs);

struct Conditions418 {
  std::int64_t p = 0;
  Subgroup sylow;
  bool prereq_prime_divides = false;
  bool prereq_sylow_normal = false;
  bool prereq_core_trivial = false;
  bool prereq_ordp_index_one = false;
  bool a = false;  // S_p elementary abelian of rank 2
  bool b = false;  // [S_p, G] = S_p
  bool c = false;  // N_G(S_p cap H) = Z_G(S_p cap H)
  bool prerequisites() const {
    return prereq_prime_divides && prereq_sylow_normal && prereq_core_trivial && prereq_ordp_index_one;
  }
  bool all() const { return a && b && c; }
};

// Never throws on failed prerequisites; a, b, c are left false then.
Conditions418 evaluate_conditions_4_18(const FiniteGroup& G, const Subgroup& H, std::int64_t p);
// Throws HypothesisViolated naming the first failed prerequisite.
Conditions418 conditions_4_18(const FiniteGroup& G, const Subgroup& H, std::int64_t p);

// p-primary part of Sha_D(G, J_{G/H}); dset is the raw set (cyclic subgroups are implied).
FinAb sha_p_part_4_18(const FiniteGroup& G, const Subgroup& H, std::int64_t p,
                      const std::vector<Subgroup>& dset);

struct PrimeToP {
  FinAb structure;
  std::string certificate;  // "prime-index" or "cyclic-dset"
  Subgroup complement;      // G', empty when not needed
  Subgroup hprime;          // G' cap S_p H
};
// Prime-to-p part, as Sha_omega(G', J_{G'/H'}) on a complement G' of S_p.
PrimeToP sha_prime_to_p_4_8(const FiniteGroup& G, const Subgroup& H, std::int64_t p,
                            const std::vector<Subgroup>& dset, const Budget& budget = Budget::from_env());

enum class Method { Theorem, Brute, Both };
const char* to_string(Method m);
Method parse_method(const std::string& s);

struct ShaReport {
  std::string group_label;
  int group_order = 0;
  Subgroup subgroup;
  std::optional<std::int64_t> p;
  std::vector<Subgroup> raw_dset;
  std::vector<Subgroup> dset;
  Method method = Method::Both;
  FinAb result;
  std::optional<FinAb> theorem_result;
  std::optional<FinAb> brute_result;
  std::optional<bool> agreement;
  std::optional<Conditions418> conditions;
  std::optional<FinAb> p_part;
  std::optional<PrimeToP> prime_to_p;
  std::vector<Cocycle> generators;
  std::vector<std::string> warnings;
  double seconds = 0;
};

// When p is absent the theorem path uses the least prime that meets the prerequisites.
ShaReport sha_full(GroupPtr G, const Subgroup& H, std::optional<std::int64_t> p,
                   const std::vector<Subgroup>& dset, Method method,
                   const Budget& budget = Budget::from_env());

// True when Sha_omega(G, J_{G/H})[p^inf] is certified zero; false means no certificate.
bool vanishing_4_16(const FiniteGroup& G, const Subgroup& H, std::int64_t p);

enum class Classification { HnpHolds, Alpha, Beta, Uncovered };
const char* to_string(Classification c);

struct ClassifyResult {
  Classification kind = Classification::Uncovered;
  std::int64_t p = 0;
  std::int64_t l = 0;
  std::string reason;
  std::optional<Conditions418> conditions;
};

// Index p*l with distinct primes, trivial core, normal S_p for at least one ordering.
ClassifyResult classify_6_11(const FiniteGroup& G, const Subgroup& H);

// Isomorphism G -> R carrying H onto a conjugate of HR; element map or empty.
std::vector<int> find_isomorphism(const FiniteGroup& G, const Subgroup& H, const FiniteGroup& R,
                                  const Subgroup& HR, int order_bound = 200);

struct Witness {
  GroupSpec spec;
  GroupPtr group;
  Subgroup H;
  FinAb prediction;
  std::int64_t index = 0;
};
// V_p x| (Z/3)^2 acting through the first factor, H = L_p x| {0}: Sha = Z/3p.
Witness witness_6_12_i(std::int64_t p);
// V_p x| (V_l x| Z/3) acting through Z/3, H = L_p x| (L_l x| {0}): Sha = Z/pl.
Witness witness_6_12_ii(std::int64_t p, std::int64_t l);

}  // namespace hnp
