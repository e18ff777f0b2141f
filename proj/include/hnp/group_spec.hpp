#pragma once

#include <string>
#include <vector>

#include "hnp/group.hpp"
#include "hnp/types.hpp"

namespace hnp {

struct GroupSpec {
  enum class Kind { Table, Permutations, Semidirect, Product };
  Kind kind = Kind::Table;
  std::string label;

  // table: row-major n x n, identity must be element 0; optional generators
  int n = 1;
  std::vector<int> mul{0};
  std::vector<int> table_generators;

  // permutations: one-line cycle notation on points 1..degree, e.g. "(1 2 3)(4 5)"
  int degree = 0;
  std::vector<std::string> cycles;

  // semidirect F_p^m x| Q: one m x m matrix per generator of Q (children[0])
  int p = 0;
  int m = 0;
  std::vector<IntMat> matrices;

  // semidirect: children = {acting}; product: children = factors
  std::vector<GroupSpec> children;
};

constexpr int kDefaultOrderBound = 512;

// Element conventions:
//  permutations: BFS order from the identity, generators as listed;
//    products compose as functions, (g h)(i) = g(h(i)).
//  semidirect: (v, q) has index q * p^m + sum_i v_i p^i; (v,q)(v',q') = (v + phi(q) v', q q').
//  product: mixed radix, first factor least significant.
FiniteGroup build_group(const GroupSpec& spec, int order_bound = kDefaultOrderBound);

std::vector<int> parse_cycles(const std::string& text, int degree);

GroupSpec table_spec(int n, std::vector<int> mul, std::string label = {});
GroupSpec cyclic_spec(int n);
GroupSpec permutation_spec(int degree, std::vector<std::string> cycles, std::string label = {});
GroupSpec semidirect_spec(int p, int m, std::vector<IntMat> matrices, GroupSpec acting,
                          std::string label = {});
GroupSpec product_spec(std::vector<GroupSpec> factors, std::string label = {});

// Index of (v, q) in a semidirect group built from the given p, m.
int semidirect_index(int p, int m, const std::vector<int>& v, int q);

}  // namespace hnp
