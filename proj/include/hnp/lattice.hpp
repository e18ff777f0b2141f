#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "hnp/group.hpp"
#include "hnp/types.hpp"

namespace hnp {

// Z^rank with a left action of `group`; action[g] for every element g.
struct GLattice {
  GroupPtr group;
  int rank = 0;
  std::vector<IntMat> action;

  const IntMat& operator()(int g) const { return action[g]; }
};

struct LatticeMap {
  GLattice source;
  GLattice target;
  IntMat matrix;  // target.rank x source.rank
};

GroupPtr share(FiniteGroup G);

// Extends generator images to all elements; throws SpecInvalid if they do not
// define a homomorphism or are not unimodular.
GLattice lattice_from_generators(GroupPtr G, const std::vector<IntMat>& images);
// identity, homomorphism and determinant +-1 for every element
bool is_valid_lattice(const GLattice& M);
bool is_equivariant(const LatticeMap& f);
bool is_unimodular(const IntMat& A);

GLattice trivial_lattice(GroupPtr G, int rank);

struct InducedLattice {
  GLattice lattice;
  std::vector<std::vector<int>> cosets;  // basis vector i is the coset cosets[i]
};
InducedLattice induced_perm_lattice(GroupPtr G, const Subgroup& H);

struct JLattice {
  GLattice lattice;
  GLattice ambient;     // (+)_i (Ind_{H_i}^G Z)^{e_i}
  LatticeMap quotient;  // ambient -> lattice, kernel = diagonal Z
  IntMat section;       // quotient.matrix * section = I
};
JLattice j_lattice(GroupPtr G, const std::vector<std::pair<Subgroup, int>>& pairs);

// M restricted to D; the acting group becomes D with local element indices.
GLattice restrict(const GLattice& M, const Subgroup& D);

// M is a lattice over H (local indices of H inside the ambient G).
// Result is over g H g^-1 with action'(x) = action(g^-1 x g).
GLattice twist(const FiniteGroup& G, const Subgroup& H, const GLattice& M, int g);

struct MackeySummand {
  int representative;
  Subgroup intersection;  // D cap g H g^-1, parent indices
  GLattice lattice;       // Ind_{intersection}^D Z over D (local indices)
};
struct MackeyDecomposition {
  std::vector<MackeySummand> summands;
  LatticeMap iso;  // restrict(Ind_H^G Z, D) -> direct sum of summands
};
MackeyDecomposition mackey_decompose(GroupPtr G, const Subgroup& H, const Subgroup& D);

GLattice direct_sum(const GLattice& M, const GLattice& N);

// M over Q pulled back along projection: G -> Q.
GLattice inflate(const GLattice& M, GroupPtr G, const std::vector<int>& projection);

}  // namespace hnp
