#pragma once

#include <string>
#include <vector>

#include "hnp/group_spec.hpp"

namespace hnp {

// [[0,-1],[1,-1]]: order 3, no fixed vector over F_p for p != 3.
IntMat phi1_matrix();
// images of (1 2 3) and (1 2) under the S_3 action on (Z/p)^2
IntMat phi2_rotation();
IntMat phi2_swap();

GroupSpec s3_spec();
GroupSpec quaternion_spec();
GroupSpec dihedral_spec(int n);  // order 2n
// (Z/p)^2 x|_{phi1} Z/3
GroupSpec alpha_spec(int p);
// (Z/p)^2 x|_{phi2} S_3 with S_3 = <(1 2 3), (1 2)>
GroupSpec beta_spec(int p);

// Named groups: trivial, z<n>, klein, z2xz4, z3xz3, z2xz2xz2, s3, d4, d5, q8,
// z12, a4shape, a4, s4, order36, order75, order150.
std::vector<std::string> catalog_names();
GroupSpec catalog_spec(const std::string& name);

}  // namespace hnp
