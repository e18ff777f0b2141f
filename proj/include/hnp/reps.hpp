#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hnp/group.hpp"
#include "hnp/group_spec.hpp"
#include "hnp/lattice.hpp"

namespace hnp {

// 2x2 matrix over F_p, row-major, entries in [0, p).
using Mat2 = std::array<std::int64_t, 4>;
using Vec2 = std::array<std::int64_t, 2>;

Mat2 mat2_mul(const Mat2& a, const Mat2& b, std::int64_t p);
Vec2 mat2_apply(const Mat2& a, const Vec2& v, std::int64_t p);
Mat2 mat2_identity();
Mat2 mat2_reduce(const IntMat& m, std::int64_t p);
std::int64_t mat2_code(const Mat2& a, std::int64_t p);  // a + p b + p^2 c + p^3 d
Mat2 mat2_decode(std::int64_t code, std::int64_t p);
// projective normal form: (1, x) or (0, 1)
Vec2 normalize_line(const Vec2& v, std::int64_t p);
std::vector<Vec2> all_lines(std::int64_t p);

// Least primitive root mod p.
std::int64_t primitive_root(std::int64_t p);
// zeta^j + zeta^(p j) in F_p for a fixed primitive m-th root of unity zeta in F_{p^2}, m | p^2 - 1.
std::int64_t root_trace(std::int64_t p, std::int64_t m, std::int64_t j);
// zeta^(j (p + 1)) in F_p, the norm of the same root.
std::int64_t root_norm(std::int64_t p, std::int64_t m, std::int64_t j);

struct RepTwoDim {
  std::int64_t p = 2;
  GroupSpec spec;  // the acting group G'
  GroupPtr group;
  std::vector<Mat2> generator_images;
  std::vector<Mat2> matrices;  // one per element of G'
  Vec2 line{1, 0};
  Subgroup hprime;
  std::string label;
};

// Extends generator images; throws SpecInvalid when they do not give a homomorphism,
// NotCoprime when p divides |G'|, PreconditionFailed when H' does not stabilize the line.
RepTwoDim make_rep(std::int64_t p, GroupSpec spec, std::vector<Mat2> generator_images, Vec2 line,
                   std::vector<int> hprime_generators, std::string label = {});

struct DMembership {
  std::int64_t d = 0;
  std::int64_t p = 0;
  bool in_pZ = false;
  bool in_p2Z = false;
  bool in_D1 = false;
  bool in_D2 = false;
  bool in_S = false;
};
DMembership d_membership(std::int64_t d, std::int64_t p);
std::int64_t s_min(std::int64_t p);

struct BC {
  bool B = false;
  bool C = false;
};
BC check_BC(const RepTwoDim& rep);

std::vector<RepTwoDim> reps_of_cyclic(std::int64_t p, std::int64_t n);
std::optional<RepTwoDim> witness_rep(std::int64_t p, std::int64_t n);
// J_{S3/<(1 2)>} mod p with H' = <(1 2)> and the line spanned by 2 - (1 3) - (2 3).
RepTwoDim s3_standard_rep(std::int64_t p);

struct Sylow2 {
  std::vector<Mat2> generators;
  std::int64_t order = 0;
  std::int64_t expected_order = 0;  // 2^ord_2 |GL_2(F_p)|
  std::optional<bool> relations_hold;  // p = 3 mod 4 only
};
Sylow2 sylow2_gl2(std::int64_t p);

struct ScanBudget {
  std::int64_t max_closures = 5'000'000;
};

struct ScanHit {
  std::vector<std::int64_t> gprime;  // matrix codes, sorted
  int gprime_order = 0;
  bool gprime_cyclic = false;
  std::vector<std::int64_t> hprime;
  Vec2 line{1, 0};
  bool core_trivial = false;
};

struct ScanReport {
  std::int64_t p = 0;
  std::int64_t n = 0;
  bool conclusive = true;
  std::int64_t closures = 0;
  std::int64_t budget = 0;
  int classes = 0;  // conjugacy classes of p'-subgroups of GL_2(F_p)
  std::vector<ScanHit> hits;
};
// Faithful 2-dimensional representations of p'-groups, i.e. p'-subgroups of GL_2(F_p)
// up to conjugacy, with every index-n subgroup and every stable line; hits satisfy (B) and (C).
ScanReport exhaustive_scan(std::int64_t p, std::int64_t n, const ScanBudget& budget = {});

struct SemidirectBuild {
  GroupSpec spec;
  GroupPtr group;
  Subgroup H;   // L x| H'
  Subgroup Sp;  // V x| {1}
};
SemidirectBuild build_semidirect(const RepTwoDim& rep);

}  // namespace hnp
