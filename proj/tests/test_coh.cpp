#include <cstdlib>

#include "doctest.h"
#include "hnp/catalog.hpp"
#include "hnp/cohomology.hpp"
#include "hnp/numbers.hpp"
#include "hnp/snf.hpp"

using namespace hnp;

namespace {

GroupPtr cat(const std::string& name) { return share(build_group(catalog_spec(name))); }

GLattice jl(GroupPtr G, const Subgroup& H) { return j_lattice(G, {{H, 1}}).lattice; }

// Independent oracle: H^2 = ker d2 / im d1 on the full normalized bar complex.
FinAb oracle_h2(const GLattice& M) {
  const auto& G = *M.group;
  const int n = G.n, r = M.rank;
  if (n == 1 || r == 0) return {};
  auto c1 = [&](int g, int c) { return (g - 1) * r + c; };
  auto c2 = [&](int g, int h, int c) { return ((g - 1) * (n - 1) + (h - 1)) * r + c; };
  const int N1 = (n - 1) * r, N2 = (n - 1) * (n - 1) * r, N3 = (n - 1) * (n - 1) * (n - 1) * r;
  IntMat d1 = IntMat::Zero(N2, N1);
  for (int g = 1; g < n; ++g)
    for (int h = 1; h < n; ++h)
      for (int c = 0; c < r; ++c) {
        for (int k = 0; k < r; ++k) d1(c2(g, h, c), c1(h, k)) += M(g)(c, k);
        if (G.mul(g, h) != 0) d1(c2(g, h, c), c1(G.mul(g, h), c)) -= 1;
        d1(c2(g, h, c), c1(g, c)) += 1;
      }
  IntMat d2 = IntMat::Zero(N3, N2);
  int row = 0;
  for (int g = 1; g < n; ++g)
    for (int h = 1; h < n; ++h)
      for (int k = 1; k < n; ++k, row += r)
        for (int c = 0; c < r; ++c) {
          for (int m = 0; m < r; ++m) d2(row + c, c2(h, k, m)) += M(g)(c, m);
          if (G.mul(g, h) != 0) d2(row + c, c2(G.mul(g, h), k, c)) -= 1;
          if (G.mul(h, k) != 0) d2(row + c, c2(g, G.mul(h, k), c)) += 1;
          d2(row + c, c2(g, h, c)) -= 1;
        }
  IntMat K = integer_kernel(d2);
  IntMat X(K.cols(), N1);
  for (int j = 0; j < N1; ++j) {
    auto x = solve_integer(K, d1.col(j));
    REQUIRE(x);
    X.col(j) = *x;
  }
  Cokernel ck = cokernel(X);
  return ck.torsion();
}

Cocycle scaled(const Cocycle& z, std::int64_t k) {
  Cocycle w = z;
  w.values *= k;
  return w;
}

}  // namespace

TEST_CASE("cyclic groups with trivial coefficients") {
  for (int n = 1; n <= 8; ++n) {
    auto Z = share(build_group(cyclic_spec(n)));
    auto H2 = cohomology(trivial_lattice(Z, 1), 2);
    CHECK(H2.structure == FinAb::cyclic(n));
    CHECK(cohomology(trivial_lattice(Z, 1), 1).structure.trivial());
    CHECK(tate_cyclic(trivial_lattice(Z, 1), 0) == FinAb::cyclic(n));
    CHECK(tate_cyclic(trivial_lattice(Z, 1), 1).trivial());
  }
  for (const auto& name : {"s3", "d4", "q8", "a4shape", "klein", "z2xz4"}) {
    auto G = cat(name);
    CHECK(cohomology(trivial_lattice(G, 1), 1).structure.trivial());
  }
}

TEST_CASE("H2 agrees with the full bar-complex oracle") {
  struct Case {
    const char* group;
    int sub;  // index into all_subgroups, -1 for J_G
  };
  for (auto name : {"z2", "z3", "z4", "klein", "s3", "z6"}) {
    auto G = cat(name);
    auto subs = all_subgroups(*G);
    for (auto& H : subs) {
      auto J = jl(G, H);
      std::int64_t cols = J.rank;
      for (int i = 0; i < 3; ++i) cols *= (G->n - 1);
      if (cols > 1200 || J.rank == 0) continue;
      auto H2 = cohomology(J, 2);
      CHECK_MESSAGE(H2.structure == oracle_h2(J), name, " H=", describe(H));
      auto I = induced_perm_lattice(G, H).lattice;
      CHECK(cohomology(I, 2).structure == oracle_h2(I));
    }
  }
}

TEST_CASE("generators are cocycles of the reported orders") {
  for (auto name : {"klein", "s3", "a4shape", "z2xz4", "q8"}) {
    auto G = cat(name);
    for (auto& H : all_subgroups(*G)) {
      auto J = jl(G, H);
      if (J.rank == 0) continue;
      auto H2 = cohomology(J, 2);
      REQUIRE(H2.generators.size() == H2.structure.factors.size());
      for (std::size_t i = 0; i < H2.generators.size(); ++i) {
        const auto& z = H2.generators[i];
        CHECK(is_cocycle(J, z));
        std::int64_t d = H2.structure.factors[i];
        CHECK(is_coboundary(J, scaled(z, d), false).is_coboundary);
        for (auto q : prime_divisors(d)) CHECK(!is_coboundary(J, scaled(z, d / q), false).is_coboundary);
      }
      auto H1 = cohomology(J, 1);
      for (auto& z : H1.generators) CHECK(is_cocycle(J, z));
    }
  }
}

TEST_CASE("fixed points of J have rank r-1 and H1 matches the formula") {
  auto A = cat("a4shape");
  auto subs = all_subgroups(*A);
  for (std::size_t r = 1; r <= 3; ++r) {
    std::vector<std::pair<Subgroup, int>> fam;
    for (std::size_t i = 0; i < r; ++i) fam.push_back({subs[1 + 2 * i], 1});
    auto J = j_lattice(A, fam);
    CHECK(cohomology(J.lattice, 0).free_rank == static_cast<int>(r) - 1);
    CHECK(cohomology(J.lattice, 1).structure == h1_j_formula(*A, fam));
  }
}

TEST_CASE("h1_j_formula") {
  auto K = cat("klein");
  CHECK(h1_j_formula(*K, {{trivial_subgroup(), 1}}) == FinAb::elementary(2, 2));
  for (auto name : {"s3", "a4shape", "q8", "klein"}) {
    auto G = cat(name);
    CHECK(h1_j_formula(*G, {{whole_group(*G), 1}}).trivial());
    for (auto& H : all_subgroups(*G)) {
      auto J = jl(G, H);
      CHECK(h1_j_formula(*G, {{H, 1}}) == cohomology(J, 1).structure);
      CHECK(h1_j_formula(*G, {{H, 3}}) == h1_j_formula(*G, {{H, 1}}));
    }
  }
  auto S3 = cat("s3");
  CHECK(h1_j_formula(*S3, {{subgroup_closure(*S3, {S3->generators[1]}), 1}}).trivial());
}

TEST_CASE("tate_cyclic") {
  auto S3 = cat("s3");
  Subgroup A3 = subgroup_closure(*S3, {S3->generators[0]});
  Subgroup tau = subgroup_closure(*S3, {S3->generators[1]});
  auto R = restrict(induced_perm_lattice(S3, A3).lattice, tau);
  CHECK(tate_cyclic(R, 1).trivial());
  CHECK_THROWS_AS(tate_cyclic(trivial_lattice(cat("klein"), 1), 0), Error);
  // agreement with the bar complex in degrees 1 and 2
  for (auto name : {"z2", "z3", "z4", "z6", "z12"}) {
    auto G = cat(name);
    for (auto& H : all_subgroups(*G)) {
      auto J = jl(G, H);
      CHECK(tate_cyclic(J, 1) == cohomology(J, 1).structure);
      CHECK(tate_cyclic(J, 2) == cohomology(J, 2).structure);
      CHECK(tate_cyclic(J, 0) == tate_cyclic(J, 2));
      CHECK(tate_cyclic(J, -1) == tate_cyclic(J, 1));
    }
  }
}

TEST_CASE("restriction and coboundary tests") {
  auto K = cat("klein");
  auto J = jl(K, trivial_subgroup());
  auto H2 = cohomology(J, 2);
  REQUIRE(!H2.generators.empty());
  const auto& z = H2.generators.back();
  auto triv = restriction_class(*K, z, trivial_subgroup());
  CHECK(triv.values.isZero());
  CHECK(restriction_class(*K, z, whole_group(*K)).values == z.values);
  Cocycle zero{2, 4, J.rank, IntVec::Zero(z.values.size())};
  auto t0 = is_coboundary(J, zero);
  CHECK(t0.is_coboundary);
  REQUIRE(t0.witness);
  CHECK(t0.witness->isZero());
  auto Z2 = cat("z2");
  auto T = trivial_lattice(Z2, 1);
  auto h = cohomology(T, 2);
  REQUIRE(h.generators.size() == 1);
  CHECK(!is_coboundary(T, h.generators[0]).is_coboundary);
}

TEST_CASE("sha examples") {
  auto K = cat("klein");
  auto J = jl(K, trivial_subgroup());
  auto s = sha(J, {});
  CHECK(s.structure == FinAb::cyclic(2));
  for (auto& g : s.generators)
    for (auto& D : s.dset) {
      auto MD = restrict(J, D);
      auto t = is_coboundary(MD, restriction_class(*K, g, D));
      CHECK(t.is_coboundary);
      CHECK(t.witness.has_value());
    }
  auto Z6 = cat("z6");
  for (auto& H : all_subgroups(*Z6)) CHECK(sha(jl(Z6, H), {}).structure.trivial());
  auto S3 = cat("s3");
  CHECK(sha(jl(S3, subgroup_closure(*S3, {S3->generators[1]})), {}).structure.trivial());
  auto A = cat("a4shape");
  auto JA = jl(A, subgroup_closure(*A, {1}));
  auto sa = sha(JA, {});
  CHECK(sa.structure == FinAb::cyclic(2));
  for (auto& g : sa.generators)
    for (auto& D : sa.dset) {
      auto t = is_coboundary(restrict(JA, D), restriction_class(*A, g, D));
      CHECK(t.is_coboundary);
      CHECK(t.witness.has_value());
    }
  CHECK(sha(JA, {Subgroup{{0, 1, 2, 3}}}).structure.trivial());
  CHECK(sha(JA, {whole_group(*A)}).structure.trivial());
}

TEST_CASE("Shapiro and induced lattices") {
  for (auto name : {"z4", "klein", "s3", "q8", "d4", "a4shape"}) {
    auto G = cat(name);
    for (auto& H : all_subgroups(*G)) {
      auto I = induced_perm_lattice(G, H).lattice;
      auto HG = subgroup_as_group(*G, H);
      CHECK(cohomology(I, 2).structure == abelianization(HG).structure);
      CHECK(sha(I, {}).structure.trivial());
    }
  }
}

TEST_CASE("inflation invariance") {
  auto check = [](const char* big, const char* small_name) {
    auto Gt = cat(big);
    for (auto& N : all_subgroups(*Gt)) {
      if (!is_normal(*Gt, N)) continue;
      auto q = quotient_group(*Gt, N);
      if (q.group.n != cat(small_name)->n) continue;
      auto Q = share(q.group);
      for (auto& H : all_subgroups(*Q)) {
        auto M = jl(Q, H);
        auto lifted = inflate(M, Gt, q.projection);
        CHECK(sha(lifted, {}).structure == sha(M, {}).structure);
      }
      return;
    }
  };
  check("z4", "z2");
  check("a4shape", "z3");
  check("z2xz4", "klein");
  check("z2xz2xz2", "klein");
}

TEST_CASE("a nested pair splits off an induced summand") {
  for (auto name : {"a4shape", "d4", "s3"}) {
    auto G = cat(name);
    auto subs = all_subgroups(*G);
    for (auto& H : subs)
      for (auto& K : subs) {
        if (!is_subset(K, H)) continue;
        auto J1 = j_lattice(G, {{H, 1}, {K, 1}}).lattice;
        auto J2 = direct_sum(jl(G, H), induced_perm_lattice(G, K).lattice);
        for (int j = 0; j <= 2; ++j) {
          auto a = cohomology(J1, j), b = cohomology(J2, j);
          CHECK(a.structure == b.structure);
          CHECK(a.free_rank == b.free_rank);
        }
      }
  }
}

TEST_CASE("Sha bounds on the catalog") {
  for (auto name : {"s3", "d4", "q8", "z12", "a4shape", "klein", "z2xz4", "z3xz3", "d5"}) {
    auto G = cat(name);
    for (auto& H : all_subgroups(*G)) {
      auto J = jl(G, H);
      auto s = sha(J, {});
      const std::int64_t idx = G->n / H.order();
      CHECK(idx % s.structure.exponent() == 0);
      CHECK(sha(J, {whole_group(*G)}).structure.trivial());
    }
  }
}

TEST_CASE("budget") {
  auto B = cat("order150");
  auto J = jl(B, sylow_subgroup(*B, 2).subgroup);
  try {
    cohomology(J, 2);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
  }
  Budget tiny{10};
  CHECK_THROWS_AS(cohomology(jl(cat("s3"), trivial_subgroup()), 2, tiny), Error);
  setenv("SHA_BUDGET", "7", 1);
  CHECK(Budget::from_env().max_columns == 7);
  unsetenv("SHA_BUDGET");
}
