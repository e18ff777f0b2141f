#include "hnp/catalog.hpp"

#include <cctype>

namespace hnp {

IntMat phi1_matrix() {
  IntMat M(2, 2);
  M << 0, -1, 1, -1;
  return M;
}

IntMat phi2_rotation() {
  IntMat M(2, 2);
  M << -1, -1, 1, 0;
  return M;
}

IntMat phi2_swap() {
  IntMat M(2, 2);
  M << 0, 1, 1, 0;
  return M;
}

GroupSpec s3_spec() { return permutation_spec(3, {"(1 2 3)", "(1 2)"}, "S3"); }

GroupSpec dihedral_spec(int n) {
  std::string rot = "(";
  for (int i = 1; i <= n; ++i) rot += std::to_string(i) + (i < n ? " " : ")");
  std::string refl;
  for (int i = 2; i <= n + 1 - i; ++i)
    if (i != n + 2 - i) refl += "(" + std::to_string(i) + " " + std::to_string(n + 2 - i) + ")";
  if (refl.empty()) refl = "()";
  return permutation_spec(n, {rot, refl}, "D" + std::to_string(n));
}

GroupSpec quaternion_spec() {
  // element 2*u + s is (-1)^s * unit[u], units 1, i, j, k
  static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int unit_sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<int> mul(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ua = a / 2, sa = a % 2, ub = b / 2, sb = b % 2;
      int u = unit_mul[ua][ub], s = (sa + sb + unit_sign[ua][ub]) % 2;
      mul[a * 8 + b] = 2 * u + s;
    }
  GroupSpec s = table_spec(8, mul, "Q8");
  s.table_generators = {2, 4};
  return s;
}

GroupSpec alpha_spec(int p) {
  return semidirect_spec(p, 2, {phi1_matrix()}, cyclic_spec(3), "(Z/" + std::to_string(p) + ")^2 x| Z/3");
}

GroupSpec beta_spec(int p) {
  return semidirect_spec(p, 2, {phi2_rotation(), phi2_swap()}, s3_spec(),
                         "(Z/" + std::to_string(p) + ")^2 x| S3");
}

std::vector<std::string> catalog_names() {
  return {"trivial", "z2",  "z3", "z4",      "z6",      "z12",     "klein",   "z2xz4",   "z3xz3",
          "z2xz2xz2", "s3", "d4", "d5", "q8", "a4shape", "a4", "s4", "order36", "order75", "order150"};
}

GroupSpec catalog_spec(const std::string& name) {
  if (name == "trivial") return cyclic_spec(1);
  if (name.size() > 1 && name[0] == 'z' &&
      name.find_first_not_of("0123456789", 1) == std::string::npos) {
    int n = std::stoi(name.substr(1));
    if (n < 1 || n > kDefaultOrderBound) throw Error(ErrorKind::SchemaError, "bad cyclic order in " + name);
    return cyclic_spec(n);
  }
  if (name == "klein") return product_spec({cyclic_spec(2), cyclic_spec(2)}, "(Z/2)^2");
  if (name == "z2xz4") return product_spec({cyclic_spec(2), cyclic_spec(4)}, "Z/2 x Z/4");
  if (name == "z3xz3") return product_spec({cyclic_spec(3), cyclic_spec(3)}, "(Z/3)^2");
  if (name == "z2xz2xz2") return product_spec({cyclic_spec(2), cyclic_spec(2), cyclic_spec(2)}, "(Z/2)^3");
  if (name == "s3") return s3_spec();
  if (name == "d4") return dihedral_spec(4);
  if (name == "d5") return dihedral_spec(5);
  if (name == "q8") return quaternion_spec();
  if (name == "a4shape") return alpha_spec(2);
  if (name == "a4") return permutation_spec(4, {"(1 2 3)", "(1 2)(3 4)"}, "A4");
  if (name == "s4") return permutation_spec(4, {"(1 2 3 4)", "(1 2)"}, "S4");
  if (name == "order36") {
    IntMat I = IntMat::Identity(2, 2);
    return semidirect_spec(2, 2, {phi1_matrix(), I}, product_spec({cyclic_spec(3), cyclic_spec(3)}),
                           "(Z/2)^2 x| (Z/3)^2");
  }
  if (name == "order75") return alpha_spec(5);
  if (name == "order150") return beta_spec(5);
  throw Error(ErrorKind::SchemaError, "unknown catalog group '" + name + "'");
}

}  // namespace hnp
