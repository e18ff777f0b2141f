#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hnp/finab.hpp"
#include "hnp/types.hpp"

namespace hnp {

// Explicit finite group by multiplication table. Element 0 is the identity.
struct FiniteGroup {
  int n = 1;
  std::vector<int> table{0};  // table[a * n + b] = a * b
  std::vector<int> inverse{0};
  std::vector<int> generators;  // a generating set, may be empty for the trivial group
  std::string label;

  int order() const { return n; }
  int mul(int a, int b) const { return table[static_cast<std::size_t>(a) * n + b]; }
  int inv(int a) const { return inverse[a]; }
  int conj(int g, int x) const { return mul(mul(g, x), inverse[g]); }  // g x g^-1
  int commutator(int a, int b) const { return mul(mul(a, b), mul(inverse[a], inverse[b])); }
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Validates associativity (exhaustive up to `exhaustive_bound`, sampled above),
// identity 0 and inverses; fills inverse. Throws SpecInvalid.
FiniteGroup make_group(int n, std::vector<int> table, std::string label = {},
                       int exhaustive_bound = 64);

// Subgroup as a strictly sorted element list of a parent group.
struct Subgroup {
  std::vector<int> elements;
  int order() const { return static_cast<int>(elements.size()); }
  bool contains(int g) const;
  bool operator==(const Subgroup& o) const { return elements == o.elements; }
  bool operator<(const Subgroup& o) const;  // by order, then lexicographic
};

int element_order(const FiniteGroup& G, int g);
int exponent(const FiniteGroup& G);
bool is_abelian(const FiniteGroup& G);

Subgroup subgroup_closure(const FiniteGroup& G, const std::vector<int>& gens);
Subgroup trivial_subgroup();
Subgroup whole_group(const FiniteGroup& G);
bool is_subgroup(const FiniteGroup& G, const std::vector<int>& elems);
bool is_normal(const FiniteGroup& G, const Subgroup& H);
bool is_subset(const Subgroup& A, const Subgroup& B);  // A inside B
Subgroup intersection(const Subgroup& A, const Subgroup& B);
Subgroup join(const FiniteGroup& G, const Subgroup& A, const Subgroup& B);
Subgroup conjugate(const FiniteGroup& G, const Subgroup& H, int g);  // g H g^-1
bool is_cyclic(const FiniteGroup& G, const Subgroup& H);

// Greedy small generating set (largest closure gain, least index on ties).
std::vector<int> generating_set(const FiniteGroup& G, const Subgroup& H);

std::vector<Subgroup> cyclic_subgroups(const FiniteGroup& G);
// All subgroups, by iterated joins of cyclic subgroups; sorted.
std::vector<Subgroup> all_subgroups(const FiniteGroup& G);

struct SylowResult {
  Subgroup subgroup;
  bool is_normal = false;
};
SylowResult sylow_subgroup(const FiniteGroup& G, std::int64_t p);

Subgroup core(const FiniteGroup& G, const Subgroup& H);
Subgroup normalizer(const FiniteGroup& G, const Subgroup& H);
Subgroup centralizer(const FiniteGroup& G, const Subgroup& H);
std::pair<Subgroup, Subgroup> normalizer_centralizer(const FiniteGroup& G, const Subgroup& H);
Subgroup commutator_subgroup(const FiniteGroup& G, const Subgroup& A, const Subgroup& B);
Subgroup derived_subgroup(const FiniteGroup& G);

// Left cosets gH, ordered by least element; each coset sorted.
std::vector<std::vector<int>> left_cosets(const FiniteGroup& G, const Subgroup& H);
// coset_index[g] = index of the coset gH in left_cosets
std::vector<int> left_coset_index(const FiniteGroup& G, const Subgroup& H);

struct DoubleCoset {
  int representative;
  std::vector<int> elements;  // sorted
};
std::vector<DoubleCoset> double_cosets(const FiniteGroup& G, const Subgroup& D, const Subgroup& H);

struct Abelianization {
  FinAb structure;
  // image[g] = coordinates of g in Z/d_1 x ... x Z/d_k (reduced)
  std::vector<std::vector<std::int64_t>> image;
};
Abelianization abelianization(const FiniteGroup& G);

Subgroup complement(const FiniteGroup& G, const Subgroup& S, int search_budget = 200000);

// H viewed as a group on its own; local element i is H.elements[i].
FiniteGroup subgroup_as_group(const FiniteGroup& G, const Subgroup& H);
// Position of g in H.elements, or -1.
int local_index(const Subgroup& H, int g);
// Image of a parent subgroup K (inside H) in local indices of H.
Subgroup to_local(const Subgroup& H, const Subgroup& K);
Subgroup to_parent(const Subgroup& H, const Subgroup& K);

struct Quotient {
  FiniteGroup group;
  std::vector<int> projection;  // element of G -> element of G/N
};
Quotient quotient_group(const FiniteGroup& G, const Subgroup& N);

// Homomorphism given by generator images; returns full element map or empty if
// the assignment does not extend to a homomorphism.
std::vector<int> extend_homomorphism(const FiniteGroup& src, const std::vector<int>& gens,
                                     const FiniteGroup& dst, const std::vector<int>& images);

std::string describe(const Subgroup& H);

}  // namespace hnp
