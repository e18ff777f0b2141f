#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "hnp/catalog.hpp"
#include "hnp/group.hpp"
#include "hnp/group_spec.hpp"
#include "hnp/numbers.hpp"

using namespace hnp;

namespace {

FiniteGroup cat(const std::string& name) { return build_group(catalog_spec(name)); }

// independent enumeration: set of all {g^k}
std::set<std::vector<int>> powers_oracle(const FiniteGroup& G) {
  std::set<std::vector<int>> out;
  for (int g = 0; g < G.n; ++g) {
    std::vector<int> s{0};
    for (int x = g; x != 0; x = G.mul(x, g)) s.push_back(x);
    std::sort(s.begin(), s.end());
    out.insert(s);
  }
  return out;
}

bool is_group_hom(const FiniteGroup& G, const Abelianization& ab) {
  for (int a = 0; a < G.n; ++a)
    for (int b = 0; b < G.n; ++b)
      for (std::size_t i = 0; i < ab.structure.factors.size(); ++i) {
        std::int64_t d = ab.structure.factors[i];
        if ((ab.image[a][i] + ab.image[b][i]) % d != ab.image[G.mul(a, b)][i]) return false;
      }
  return true;
}

}  // namespace

TEST_CASE("build_group: semidirect, trivial table, permutations") {
  FiniteGroup A = build_group(alpha_spec(2));
  CHECK(A.order() == 12);
  // F_2^2 sits inside as the normal subgroup of elements 0..3
  Subgroup V{{0, 1, 2, 3}};
  CHECK(is_subgroup(A, V.elements));
  CHECK(is_normal(A, V));
  CHECK(build_group(cyclic_spec(1)).order() == 1);
  FiniteGroup S3 = build_group(s3_spec());
  CHECK(S3.order() == 6);  // all 3! permutations
  CHECK(!is_abelian(S3));
}

TEST_CASE("build_group rejects bad input") {
  // identity not at index 0
  CHECK_THROWS_AS(build_group(table_spec(2, {1, 0, 0, 1})), Error);
  // Latin square that is not associative (order 5 loop)
  std::vector<int> loop = {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  try {
    build_group(table_spec(5, loop));
    FAIL("expected SpecInvalid");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SpecInvalid);
  }
  // swap matrix has order 2, cannot be the image of a generator of Z/3
  try {
    build_group(semidirect_spec(2, 2, {phi2_swap()}, cyclic_spec(3)));
    FAIL("expected SpecInvalid");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SpecInvalid);
  }
  IntMat sing(2, 2);
  sing << 1, 1, 1, 1;
  CHECK_THROWS_AS(build_group(semidirect_spec(2, 2, {sing}, cyclic_spec(3))), Error);
  try {
    build_group(permutation_spec(6, {"(1 2 3 4 5 6)", "(1 2)"}));
    FAIL("expected OrderBudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OrderBudgetExceeded);
  }
}

TEST_CASE("semidirect element layout") {
  FiniteGroup A = build_group(alpha_spec(2));
  // element 1 is ((1,0), 0), element 4 is ((0,0), 1)
  CHECK(semidirect_index(2, 2, {1, 0}, 0) == 1);
  CHECK(semidirect_index(2, 2, {0, 0}, 1) == 4);
  // (0,1)(v,0)(0,1)^-1 = (phi1 v, 0); phi1 (1,0) = (0,1)
  CHECK(A.conj(4, 1) == semidirect_index(2, 2, {0, 1}, 0));
}

TEST_CASE("subgroup_closure") {
  FiniteGroup S3 = build_group(s3_spec());
  CHECK(subgroup_closure(S3, {S3.generators[0]}).order() == 3);
  CHECK(subgroup_closure(S3, {}) == trivial_subgroup());
  std::vector<int> all(6);
  for (int i = 0; i < 6; ++i) all[i] = i;
  CHECK(subgroup_closure(S3, all) == whole_group(S3));
}

TEST_CASE("cyclic_subgroups matches power enumeration") {
  for (auto name : {"klein", "trivial", "s3", "q8", "a4shape", "z12", "d4"}) {
    FiniteGroup G = cat(name);
    auto cyc = cyclic_subgroups(G);
    auto oracle = powers_oracle(G);
    CHECK(cyc.size() == oracle.size());
    for (const auto& H : cyc) CHECK(oracle.count(H.elements) == 1);
  }
  CHECK(cyclic_subgroups(cat("klein")).size() == 4);
  CHECK(cyclic_subgroups(cat("trivial")).size() == 1);
  // trivial, three of order 2, one of order 3
  auto s3 = cyclic_subgroups(cat("s3"));
  CHECK(s3.size() == 5);
  std::map<int, int> by_order;
  for (auto& H : s3) by_order[H.order()]++;
  CHECK(by_order[1] == 1);
  CHECK(by_order[2] == 3);
  CHECK(by_order[3] == 1);
}

TEST_CASE("sylow_subgroup") {
  FiniteGroup A = cat("a4shape");
  auto s2 = sylow_subgroup(A, 2);
  CHECK(s2.subgroup.order() == 4);
  CHECK(s2.is_normal);
  CHECK(s2.subgroup.elements == std::vector<int>{0, 1, 2, 3});
  auto z6 = sylow_subgroup(cat("z6"), 3);
  CHECK(z6.subgroup.order() == 3);
  CHECK(z6.is_normal);
  FiniteGroup S3 = cat("s3");
  auto t = sylow_subgroup(S3, 2);
  CHECK(t.subgroup.order() == 2);
  CHECK(!t.is_normal);
  for (auto& H : cyclic_subgroups(S3))
    if (H.order() == 2) CHECK(t.subgroup.elements <= H.elements);
  CHECK_THROWS_AS(sylow_subgroup(S3, 4), Error);
}

TEST_CASE("core") {
  FiniteGroup S3 = cat("s3");
  Subgroup T = subgroup_closure(S3, {S3.generators[1]});
  Subgroup A3 = subgroup_closure(S3, {S3.generators[0]});
  CHECK(core(S3, T) == trivial_subgroup());
  CHECK(core(S3, A3) == A3);
  FiniteGroup A = cat("a4shape");
  CHECK(core(A, subgroup_closure(A, {1})) == trivial_subgroup());
}

TEST_CASE("normalizer_centralizer") {
  FiniteGroup A = cat("a4shape");
  auto [N, Z] = normalizer_centralizer(A, subgroup_closure(A, {1}));
  Subgroup S2 = sylow_subgroup(A, 2).subgroup;
  CHECK(N == S2);
  CHECK(Z == S2);
  FiniteGroup K = cat("z2xz4");
  auto [N2, Z2] = normalizer_centralizer(K, subgroup_closure(K, {1}));
  CHECK(N2 == whole_group(K));
  CHECK(Z2 == whole_group(K));
  FiniteGroup S3 = cat("s3");
  Subgroup T = subgroup_closure(S3, {S3.generators[1]});
  auto [N3, Z3] = normalizer_centralizer(S3, T);
  CHECK(N3 == T);
  CHECK(Z3 == T);
}

TEST_CASE("commutator_subgroup") {
  FiniteGroup A = cat("a4shape");
  Subgroup S2 = sylow_subgroup(A, 2).subgroup;
  CHECK(commutator_subgroup(A, S2, whole_group(A)) == S2);
  CHECK(commutator_subgroup(A, S2, trivial_subgroup()) == trivial_subgroup());
  FiniteGroup S3 = cat("s3");
  CHECK(derived_subgroup(S3) == subgroup_closure(S3, {S3.generators[0]}));
}

TEST_CASE("double_cosets") {
  FiniteGroup S3 = cat("s3");
  Subgroup A3 = subgroup_closure(S3, {S3.generators[0]});
  Subgroup T = subgroup_closure(S3, {S3.generators[1]});
  auto dc = double_cosets(S3, A3, T);
  REQUIRE(dc.size() == 1);
  CHECK(dc[0].elements.size() == 6);
  CHECK(double_cosets(S3, whole_group(S3), T).size() == 1);
  FiniteGroup A = cat("a4shape");
  Subgroup S2 = sylow_subgroup(A, 2).subgroup;
  Subgroup H = subgroup_closure(A, {1});
  auto dca = double_cosets(A, S2, H);
  CHECK(dca.size() == 3);
  for (auto& c : dca) CHECK(c.elements.size() == 4);
  CHECK(dca[0].representative == 0);
}

TEST_CASE("double coset sizes and conjugate intersections") {
  for (auto name : {"s3", "d4", "a4shape", "q8", "z2xz4", "s4"}) {
    FiniteGroup G = cat(name);
    auto subs = all_subgroups(G);
    for (const auto& D : subs)
      for (const auto& H : subs) {
        auto dcs = double_cosets(G, D, H);
        std::size_t total = 0;
        for (const auto& c : dcs) {
          total += c.elements.size();
          Subgroup I = intersection(D, conjugate(G, H, c.representative));
          CHECK(c.elements.size() * I.order() == static_cast<std::size_t>(D.order() * H.order()));
          // another member of the same class gives a D-conjugate intersection
          int g2 = c.elements.back();
          Subgroup I2 = intersection(D, conjugate(G, H, g2));
          bool found = false;
          for (int d : D.elements)
            if (conjugate(G, I, d) == I2) found = true;
          CHECK(found);
        }
        CHECK(total == static_cast<std::size_t>(G.n));
      }
  }
}

TEST_CASE("abelianization") {
  auto a = abelianization(cat("a4shape"));
  CHECK(a.structure == FinAb::cyclic(3));
  for (int n : {1, 2, 5, 12}) {
    FiniteGroup Z = build_group(cyclic_spec(n));
    CHECK(abelianization(Z).structure == FinAb::cyclic(n));
  }
  CHECK(abelianization(cat("s3")).structure == FinAb::cyclic(2));
  CHECK(abelianization(cat("q8")).structure == FinAb::elementary(2, 2));
  CHECK(abelianization(cat("z2xz4")).structure == FinAb{{2, 4}});
  for (auto name : {"a4shape", "s3", "q8", "z2xz4", "d4", "order36"}) {
    FiniteGroup G = cat(name);
    auto ab = abelianization(G);
    CHECK(is_group_hom(G, ab));
    // order of G^ab equals (G : G^der)
    CHECK(ab.structure.order() * derived_subgroup(G).order() == G.n);
  }
}

TEST_CASE("complement") {
  FiniteGroup A = cat("a4shape");
  Subgroup C = complement(A, sylow_subgroup(A, 2).subgroup);
  CHECK(C.order() == 3);
  FiniteGroup Z6 = cat("z6");
  CHECK(complement(Z6, sylow_subgroup(Z6, 3).subgroup).order() == 2);
  FiniteGroup B = cat("order150");
  Subgroup S5 = sylow_subgroup(B, 5).subgroup;
  Subgroup C6 = complement(B, S5);
  CHECK(C6.order() == 6);
  CHECK(!is_abelian(subgroup_as_group(B, C6)));
  CHECK(intersection(C6, S5) == trivial_subgroup());
  FiniteGroup S3 = cat("s3");
  CHECK_THROWS_AS(complement(S3, sylow_subgroup(S3, 2).subgroup), Error);
}

TEST_CASE("catalog properties") {
  for (const auto& name : catalog_names()) {
    FiniteGroup G = cat(name);
    if (G.n > 48) continue;
    auto subs = all_subgroups(G);
    std::vector<Subgroup> normals;
    for (auto& H : subs) {
      CHECK(G.n % H.order() == 0);
      if (is_normal(G, H)) normals.push_back(H);
    }
    for (auto& H : subs) {
      // core is the largest normal subgroup inside H
      Subgroup c = core(G, H);
      CHECK(is_normal(G, c));
      for (auto& N : normals)
        if (is_subset(N, H)) CHECK(is_subset(N, c));
    }
    for (auto p : prime_divisors(G.n)) {
      auto S = sylow_subgroup(G, p);
      if (!S.is_normal) continue;
      Subgroup C = complement(G, S.subgroup);
      CHECK(intersection(C, S.subgroup) == trivial_subgroup());
      std::set<int> prod;
      for (int c : C.elements)
        for (int s : S.subgroup.elements) prod.insert(G.mul(c, s));
      CHECK(static_cast<int>(prod.size()) == G.n);
      // normal Sylow, trivial core, p-free index: S_p elementary abelian
      for (auto& H : subs) {
        if (ord_p(G.n / H.order(), p) != 1 || core(G, H).order() != 1) continue;
        FiniteGroup SG = subgroup_as_group(G, S.subgroup);
        CHECK(is_abelian(SG));
        CHECK(exponent(SG) == p);
      }
    }
  }
}

TEST_CASE("quotient and homomorphisms") {
  FiniteGroup A = cat("a4shape");
  Subgroup S2 = sylow_subgroup(A, 2).subgroup;
  auto q = quotient_group(A, S2);
  CHECK(q.group.order() == 3);
  for (int a = 0; a < A.n; ++a)
    for (int b = 0; b < A.n; ++b) CHECK(q.projection[A.mul(a, b)] == q.group.mul(q.projection[a], q.projection[b]));
  FiniteGroup Z4 = cat("z4"), Z2 = cat("z2");
  CHECK(extend_homomorphism(Z4, {1}, Z2, {1}).size() == 4);
  CHECK(extend_homomorphism(Z2, {1}, Z4, {1}).empty());
}
