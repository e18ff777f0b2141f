#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hnp/finab.hpp"
#include "hnp/group.hpp"
#include "hnp/lattice.hpp"
#include "hnp/types.hpp"

namespace hnp {

// Limit on (|G|-1)^j * rank for the cochain spaces touched.
struct Budget {
  std::int64_t max_columns = 200000;
  // SHA_BUDGET overrides the default when set
  static Budget from_env();
};

// Normalized cochain with values in Z^rank.
// degree 0: values(c); degree 1: values(g*rank + c); degree 2: values((g*n + h)*rank + c).
struct Cocycle {
  int degree = 2;
  int group_order = 1;
  int rank = 0;
  IntVec values;

  auto at(int g, int h) const { return values.segment((static_cast<Eigen::Index>(g) * group_order + h) * rank, rank); }
  auto at(int g) const { return values.segment(static_cast<Eigen::Index>(g) * rank, rank); }
};

struct PrimaryPart {
  std::int64_t prime = 0;
  std::vector<Cocycle> basis;  // basis[i] has order prime^exponents[i]
  std::vector<int> exponents;
};

struct CohomologyGroup {
  int degree = 0;
  GLattice lattice;
  FinAb structure;  // torsion (degrees 1, 2)
  int free_rank = 0;  // degree 0
  std::vector<Cocycle> generators;  // degree 0: basis of M^G; else one per invariant factor
  std::vector<PrimaryPart> primary;  // degree 2 only
};

CohomologyGroup cohomology(const GLattice& M, int degree, const Budget& budget = Budget::from_env());
CohomologyGroup cohomology(const FiniteGroup& G, const GLattice& M, int degree,
                           const Budget& budget = Budget::from_env());

// Full coboundary of a normalized 1-cochain (values g*rank + c).
Cocycle coboundary(const GLattice& M, const IntVec& f);
bool is_cocycle(const GLattice& M, const Cocycle& z);

// Literal restriction of a degree-2 cocycle over G to D (local indices of D).
Cocycle restriction_class(const FiniteGroup& G, const Cocycle& z, const Subgroup& D);

struct CoboundaryTest {
  bool is_coboundary = false;
  std::optional<IntVec> witness;  // 1-cochain b with d b = c
};
// M and c live over the same group (e.g. restrict(M, D) and restriction_class(..., D)).
CoboundaryTest is_coboundary(const GLattice& M, const Cocycle& c, bool want_witness = true);

struct ShaGroup {
  CohomologyGroup base;
  std::vector<Subgroup> raw_dset;
  std::vector<Subgroup> dset;  // raw dset plus all cyclic subgroups
  FinAb structure;
  std::vector<Cocycle> generators;
};
std::vector<Subgroup> close_dset(const FiniteGroup& G, const std::vector<Subgroup>& raw);
ShaGroup sha(const GLattice& M, const std::vector<Subgroup>& dset, const Budget& budget = Budget::from_env());

// Tate cohomology of a cyclic group; the generator is the least element of full order
// unless sigma is given. Even j: M^D / N M, odd j: ker N / (sigma - 1) M.
FinAb tate_cyclic(const GLattice& M, int j, int sigma = -1);

// Ker(G^dual -> (+) H_i^dual), computed as G^ab / <images of the H_i>.
FinAb h1_j_formula(const FiniteGroup& G, const std::vector<std::pair<Subgroup, int>>& pairs);

}  // namespace hnp
