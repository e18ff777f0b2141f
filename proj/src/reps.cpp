#include "hnp/reps.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <unordered_set>

#include "hnp/catalog.hpp"
#include "hnp/numbers.hpp"

namespace hnp {

Mat2 mat2_mul(const Mat2& a, const Mat2& b, std::int64_t p) {
  return {(a[0] * b[0] + a[1] * b[2]) % p, (a[0] * b[1] + a[1] * b[3]) % p,
          (a[2] * b[0] + a[3] * b[2]) % p, (a[2] * b[1] + a[3] * b[3]) % p};
}

Vec2 mat2_apply(const Mat2& a, const Vec2& v, std::int64_t p) {
  return {(a[0] * v[0] + a[1] * v[1]) % p, (a[2] * v[0] + a[3] * v[1]) % p};
}

Mat2 mat2_identity() { return {1, 0, 0, 1}; }

Mat2 mat2_reduce(const IntMat& m, std::int64_t p) {
  return {mod(m(0, 0), p), mod(m(0, 1), p), mod(m(1, 0), p), mod(m(1, 1), p)};
}

std::int64_t mat2_code(const Mat2& a, std::int64_t p) { return a[0] + p * (a[1] + p * (a[2] + p * a[3])); }

Mat2 mat2_decode(std::int64_t code, std::int64_t p) {
  Mat2 a;
  for (auto& x : a) {
    x = code % p;
    code /= p;
  }
  return a;
}

Vec2 normalize_line(const Vec2& v, std::int64_t p) {
  if (v[0] % p != 0) return {1, mod(v[1] * inv_mod(v[0], p), p)};
  if (v[1] % p != 0) return {0, 1};
  throw Error(ErrorKind::PreconditionFailed, "zero vector spans no line");
}

std::vector<Vec2> all_lines(std::int64_t p) {
  std::vector<Vec2> out;
  for (std::int64_t x = 0; x < p; ++x) out.push_back({1, x});
  out.push_back({0, 1});
  return out;
}

std::int64_t primitive_root(std::int64_t p) {
  if (p == 2) return 1;
  const auto qs = prime_divisors(p - 1);
  for (std::int64_t g = 2; g < p; ++g)
    if (std::all_of(qs.begin(), qs.end(), [&](auto q) { return pow_mod(g, (p - 1) / q, p) != 1; })) return g;
  throw Error(ErrorKind::PreconditionFailed, "no primitive root");
}

namespace {

// F_p[x]/(x^2 - c) for odd p with c the least non-residue; F_2[x]/(x^2 + x + 1).
struct Fp2 {
  std::int64_t p, c;
  using E = std::pair<std::int64_t, std::int64_t>;  // a + b x

  explicit Fp2(std::int64_t p_) : p(p_), c(0) {
    if (p == 2) return;
    for (c = 2; pow_mod(c, (p - 1) / 2, p) != p - 1; ++c) {
    }
  }
  E mul(const E& u, const E& v) const {
    const std::int64_t bd = u.second * v.second % p;
    if (p == 2) return {(u.first * v.first + bd) % 2, (u.first * v.second + u.second * v.first + bd) % 2};
    return {(u.first * v.first + bd * c) % p, (u.first * v.second + u.second * v.first) % p};
  }
  E pow(E u, std::int64_t e) const {
    E r{1, 0};
    for (; e > 0; e >>= 1, u = mul(u, u))
      if (e & 1) r = mul(r, u);
    return r;
  }
  E generator() const {
    const std::int64_t N = p * p - 1;
    const auto qs = prime_divisors(N);
    for (std::int64_t code = 1; code < p * p; ++code) {
      E g{code % p, code / p};
      if (std::all_of(qs.begin(), qs.end(), [&](auto q) { return pow(g, N / q) != E{1, 0}; })) return g;
    }
    throw Error(ErrorKind::PreconditionFailed, "no generator of F_{p^2}");
  }
  E root(std::int64_t m) const {
    if ((p * p - 1) % m != 0) throw Error(ErrorKind::PreconditionFailed, "m does not divide p^2 - 1");
    return pow(generator(), (p * p - 1) / m);
  }
};

std::int64_t in_base_field(const Fp2::E& e) {
  if (e.second != 0) throw Error(ErrorKind::PreconditionFailed, "element is not in F_p");
  return e.first;
}

Mat2 companion(std::int64_t norm, std::int64_t trace, std::int64_t p) { return {0, mod(-norm, p), 1, mod(trace, p)}; }

bool fixes(const Mat2& g, const Vec2& v, std::int64_t p) { return mat2_apply(g, v, p) == Vec2{v[0] % p, v[1] % p}; }

bool stabilizes(const Mat2& g, const Vec2& line, std::int64_t p) {
  return normalize_line(mat2_apply(g, line, p), p) == line;
}

Mat2 mat2_pow(Mat2 a, std::int64_t e, std::int64_t p) {
  Mat2 r = mat2_identity();
  for (; e > 0; e >>= 1, a = mat2_mul(a, a, p))
    if (e & 1) r = mat2_mul(r, a, p);
  return r;
}

std::int64_t mat2_det(const Mat2& a, std::int64_t p) { return mod(a[0] * a[3] - a[1] * a[2], p); }

Mat2 mat2_inverse(const Mat2& a, std::int64_t p) {
  const std::int64_t di = inv_mod(mat2_det(a, p), p);
  return {a[3] * di % p, mod(-a[1], p) * di % p, mod(-a[2], p) * di % p, a[0] * di % p};
}

std::vector<std::int64_t> closure_codes(const std::vector<std::int64_t>& gens, std::int64_t p) {
  std::vector<std::int64_t> elems{mat2_code(mat2_identity(), p)};
  std::unordered_set<std::int64_t> seen(elems.begin(), elems.end());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const Mat2 x = mat2_decode(elems[i], p);
    for (auto g : gens) {
      const auto y = mat2_code(mat2_mul(x, mat2_decode(g, p), p), p);
      if (seen.insert(y).second) elems.push_back(y);
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

FiniteGroup matrix_group(const std::vector<std::int64_t>& codes, std::int64_t p) {
  const int n = static_cast<int>(codes.size());
  std::map<std::int64_t, int> at;
  // identity first
  std::vector<std::int64_t> order{mat2_code(mat2_identity(), p)};
  for (auto c : codes)
    if (c != order[0]) order.push_back(c);
  for (int i = 0; i < n; ++i) at[order[i]] = i;
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      table[static_cast<std::size_t>(i) * n + j] =
          at.at(mat2_code(mat2_mul(mat2_decode(order[i], p), mat2_decode(order[j], p), p), p));
  FiniteGroup G = make_group(n, std::move(table), "matrix group", 0);
  G.generators = generating_set(G, whole_group(G));
  return G;
}

}  // namespace

std::int64_t root_trace(std::int64_t p, std::int64_t m, std::int64_t j) {
  Fp2 F(p);
  auto z = F.pow(F.root(m), j);
  auto zp = F.pow(z, p);
  return in_base_field({(z.first + zp.first) % p, (z.second + zp.second) % p});
}

std::int64_t root_norm(std::int64_t p, std::int64_t m, std::int64_t j) {
  Fp2 F(p);
  return in_base_field(F.pow(F.pow(F.root(m), j), p + 1));
}

RepTwoDim make_rep(std::int64_t p, GroupSpec spec, std::vector<Mat2> generator_images, Vec2 line,
                   std::vector<int> hprime_generators, std::string label) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p));
  RepTwoDim r;
  r.p = p;
  r.group = share(build_group(spec));
  r.spec = std::move(spec);
  const auto& G = *r.group;
  if (G.n % p == 0) throw Error(ErrorKind::NotCoprime, "p divides |G'|");
  // a trivial group has no generators; identity images for it are accepted and dropped
  if (G.generators.empty() &&
      std::all_of(generator_images.begin(), generator_images.end(), [&](Mat2 m) {
        for (auto& x : m) x = mod(x, p);
        return m == mat2_identity();
      }))
    generator_images.clear();
  if (generator_images.size() != G.generators.size())
    throw Error(ErrorKind::SpecInvalid, "one matrix per generator required");
  for (auto& m : generator_images)
    for (auto& x : m) x = mod(x, p);
  r.generator_images = generator_images;
  std::vector<char> done(G.n, 0);
  r.matrices.assign(G.n, mat2_identity());
  done[0] = 1;
  std::vector<int> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const int x = queue[i];
    for (std::size_t k = 0; k < G.generators.size(); ++k) {
      const int y = G.mul(x, G.generators[k]);
      const Mat2 m = mat2_mul(r.matrices[x], generator_images[k], p);
      if (!done[y]) {
        done[y] = 1;
        r.matrices[y] = m;
        queue.push_back(y);
      } else if (r.matrices[y] != m) {
        throw Error(ErrorKind::SpecInvalid, "generator images do not define a homomorphism");
      }
    }
  }
  r.line = normalize_line(line, p);
  r.hprime = subgroup_closure(G, hprime_generators);
  for (int h : r.hprime.elements)
    if (!stabilizes(r.matrices[h], r.line, p))
      throw Error(ErrorKind::PreconditionFailed, "H' does not stabilize the line");
  r.label = std::move(label);
  return r;
}

DMembership d_membership(std::int64_t d, std::int64_t p) {
  if (d < 1) throw Error(ErrorKind::PreconditionFailed, "d must be positive");
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p));
  DMembership m;
  m.d = d;
  m.p = p;
  m.in_pZ = d % p == 0;
  m.in_p2Z = d % (p * p) == 0;
  m.in_D1 = m.in_pZ && std::gcd(d, p - 1) >= 3;
  m.in_D2 = m.in_pZ && !is_power_of_two(std::gcd(d, p + 1));
  m.in_S = m.in_p2Z || m.in_D1 || m.in_D2;
  return m;
}

std::int64_t s_min(std::int64_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p));
  const std::int64_t formula = p == 2 ? 4 : 3 * p;
  std::int64_t d = 1;
  while (!d_membership(d, p).in_S) ++d;
  if (d != formula) throw Error(ErrorKind::PreconditionFailed, "membership scan disagrees with 3p / 4");
  return d;
}

BC check_BC(const RepTwoDim& rep) {
  const std::int64_t p = rep.p;
  BC out;
  out.B = true;
  for (std::int64_t a = 0; a < p && out.B; ++a)
    for (std::int64_t b = 0; b < p && out.B; ++b) {
      if (a == 0 && b == 0) continue;
      const Vec2 v{a, b};
      if (std::all_of(rep.generator_images.begin(), rep.generator_images.end(),
                      [&](const Mat2& g) { return fixes(g, v, p); }))
        out.B = false;
    }
  out.C = true;
  for (const auto& g : rep.matrices)
    if (stabilizes(g, rep.line, p) && !fixes(g, rep.line, p)) out.C = false;
  return out;
}

std::vector<RepTwoDim> reps_of_cyclic(std::int64_t p, std::int64_t n) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p));
  if (n < 1 || n % p == 0) throw Error(ErrorKind::NotCoprime, "need gcd(n, p) = 1");
  const std::int64_t g1 = std::gcd(n, p - 1), g2 = std::gcd(n, p * p - 1);
  std::vector<RepTwoDim> out;
  const std::int64_t z = pow_mod(primitive_root(p), (p - 1) / g1, p);
  for (std::int64_t j1 = 0; j1 < g1; ++j1)
    for (std::int64_t j2 = j1; j2 < g1; ++j2) {
      Mat2 m{pow_mod(z, j1, p), 0, 0, pow_mod(z, j2, p)};
      out.push_back(make_rep(p, cyclic_spec(static_cast<int>(n)), {m}, {1, 0}, {},
                             "chi^" + std::to_string(j1) + "+chi^" + std::to_string(j2)));
    }
  // Frobenius orbits {j, p j} of roots of order dividing g2 that are not in F_p
  std::set<std::int64_t> used;
  for (std::int64_t j = 0; j < g2; ++j) {
    if ((j * (p - 1)) % g2 == 0 || used.count(j)) continue;
    used.insert(j);
    used.insert(j * p % g2);
    Mat2 m = companion(root_norm(p, g2, j), root_trace(p, g2, j), p);
    out.push_back(make_rep(p, cyclic_spec(static_cast<int>(n)), {m}, {1, 0}, {}, "V^" + std::to_string(j)));
  }
  return out;
}

std::optional<RepTwoDim> witness_rep(std::int64_t p, std::int64_t n) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p));
  if (n < 1 || n % p == 0) throw Error(ErrorKind::NotCoprime, "need gcd(n, p) = 1");
  const int ni = static_cast<int>(n);
  const std::int64_t g1 = std::gcd(n, p - 1), g3 = std::gcd(n, p + 1);
  for (auto l : prime_divisors(g1)) {
    if (l == 2) continue;
    const std::int64_t z = pow_mod(primitive_root(p), (p - 1) / l, p);
    Mat2 m{z, 0, 0, z * z % p};
    return make_rep(p, cyclic_spec(ni), {m}, {1, 1}, {}, "chi^1+chi^2 of order " + std::to_string(l));
  }
  if (g1 % 4 == 0) {
    const std::int64_t i = pow_mod(primitive_root(p), (p - 1) / 4, p);
    Mat2 m{i, 0, 0, i * i % p};
    return make_rep(p, cyclic_spec(ni), {m}, {1, 1}, {}, "chi^1+chi^2 of order 4");
  }
  for (auto l : prime_divisors(g3)) {
    if (l == 2) continue;
    Mat2 m = companion(1, root_trace(p, l, 1), p);
    return make_rep(p, cyclic_spec(ni), {m}, {1, 0}, {}, "V^1_{p," + std::to_string(l) + "}");
  }
  return std::nullopt;
}

RepTwoDim s3_standard_rep(std::int64_t p) {
  if (!is_prime(p) || p < 5) throw Error(ErrorKind::PreconditionFailed, "need a prime p >= 5");
  GroupPtr S3 = share(build_group(s3_spec()));
  const int t = S3->generators[1];
  Subgroup T = subgroup_closure(*S3, {t});
  auto J = j_lattice(S3, {{T, 1}});
  std::vector<Mat2> images;
  for (int g : S3->generators) images.push_back(mat2_reduce(J.lattice(g), p));
  // 2 - (1 3) - (2 3): the two involutions other than (1 2)
  const auto coset = left_coset_index(*S3, T);
  IntVec x = IntVec::Zero(J.ambient.rank);
  x(coset[0]) += 2;
  for (int g = 1; g < S3->n; ++g)
    if (g != t && element_order(*S3, g) == 2) x(coset[g]) -= 1;
  IntVec v = J.quotient.matrix * x;
  return make_rep(p, s3_spec(), images, {mod(v(0), p), mod(v(1), p)}, {t}, "J_{S3/<(1 2)>} mod p");
}

Sylow2 sylow2_gl2(std::int64_t p) {
  if (!is_prime(p) || p == 2) throw Error(ErrorKind::PreconditionFailed, "need an odd prime");
  Sylow2 out;
  out.expected_order = ipow(2, ord_p(p * (p - 1) * (p - 1) * (p + 1), 2));
  if (p % 4 == 1) {
    const int s = ord_p(p - 1, 2);
    const std::int64_t z = pow_mod(primitive_root(p), (p - 1) / ipow(2, s), p);
    out.generators = {{z, 0, 0, 1}, {1, 0, 0, z}, {0, 1, 1, 0}};
  } else {
    const int s = ord_p(p + 1, 2);
    const std::int64_t t = root_trace(p, ipow(2, s + 1), 1);
    const Mat2 X{0, 1, 1, t};
    const Mat2 Y = mat2_mul({0, 1, p - 1, 0}, X, p);
    out.generators = {X, Y};
    const std::int64_t e = ipow(2, s);
    const bool r1 = mat2_pow(X, e, p) == Mat2{p - 1, 0, 0, p - 1};
    const bool r2 = mat2_mul(Y, Y, p) == mat2_identity();
    const bool r3 = mat2_mul(mat2_mul(Y, X, p), mat2_inverse(Y, p), p) == mat2_pow(X, e - 1, p);
    out.relations_hold = r1 && r2 && r3;
  }
  std::vector<std::int64_t> codes;
  for (auto& g : out.generators) codes.push_back(mat2_code(g, p));
  out.order = static_cast<std::int64_t>(closure_codes(codes, p).size());
  return out;
}

namespace {

// GL_2(F_p) with a full multiplication table on element indices.
struct GLTable {
  std::int64_t p;
  std::vector<std::int64_t> code;  // index -> matrix code
  std::vector<int> index;          // matrix code -> index or -1
  std::vector<int> mul, inv;
  std::vector<int> pprime_cyclic;  // least generator of each cyclic p'-subgroup

  explicit GLTable(std::int64_t p_) : p(p_) {
    const std::int64_t q = p * p * p * p;
    index.assign(q, -1);
    for (std::int64_t c = 0; c < q; ++c)
      if (mat2_det(mat2_decode(c, p), p) != 0) {
        index[c] = static_cast<int>(code.size());
        code.push_back(c);
      }
    const int N = static_cast<int>(code.size());
    mul.resize(static_cast<std::size_t>(N) * N);
    inv.resize(N);
    for (int i = 0; i < N; ++i) {
      const Mat2 a = mat2_decode(code[i], p);
      inv[i] = index[mat2_code(mat2_inverse(a, p), p)];
      for (int j = 0; j < N; ++j)
        mul[static_cast<std::size_t>(i) * N + j] = index[mat2_code(mat2_mul(a, mat2_decode(code[j], p), p), p)];
    }
    std::vector<char> covered(N, 0);
    for (int i = 0; i < N; ++i) {
      if (covered[i]) continue;
      std::vector<int> powers{i};
      for (int x = m(i, i); x != i; x = m(x, i)) powers.push_back(x);
      const int order = static_cast<int>(powers.size());
      for (int k = 1; k <= order; ++k)
        if (std::gcd(k, order) == 1) covered[powers[k - 1]] = 1;
      if (order % p != 0) pprime_cyclic.push_back(i);
    }
  }
  int n() const { return static_cast<int>(code.size()); }
  int m(int a, int b) const { return mul[static_cast<std::size_t>(a) * code.size() + b]; }
  int identity() const { return index[mat2_code(mat2_identity(), p)]; }

  std::vector<int> closure(const std::vector<int>& gens) const {
    std::vector<char> in(code.size(), 0);
    std::vector<int> elems{identity()};
    in[elems[0]] = 1;
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (int g : gens) {
        const int y = m(elems[i], g);
        if (!in[y]) {
          in[y] = 1;
          elems.push_back(y);
        }
      }
    std::sort(elems.begin(), elems.end());
    return elems;
  }
};

struct ClassEnumeration {
  std::vector<std::vector<int>> classes;
  std::int64_t closures = 0;
  bool conclusive = true;
};

// p'-subgroups of GL_2(F_p) up to conjugacy, by joining known classes with cyclic subgroups.
ClassEnumeration enumerate_classes(const GLTable& T, std::int64_t max_closures) {
  ClassEnumeration out;
  std::set<std::vector<int>> seen;
  auto add_class = [&](const std::vector<int>& S) {
    if (seen.count(S)) return;
    out.classes.push_back(S);
    for (int g = 0; g < T.n(); ++g) {
      std::vector<int> conj;
      conj.reserve(S.size());
      for (int x : S) conj.push_back(T.m(T.m(g, x), T.inv[g]));
      std::sort(conj.begin(), conj.end());
      seen.insert(std::move(conj));
    }
  };
  add_class({T.identity()});
  for (std::size_t k = 0; k < out.classes.size(); ++k) {
    for (int g : T.pprime_cyclic) {
      const auto& K = out.classes[k];
      if (std::binary_search(K.begin(), K.end(), g)) continue;
      if (++out.closures > max_closures) {
        out.conclusive = false;
        return out;
      }
      std::vector<int> gens = K;
      gens.push_back(g);
      auto J = T.closure(gens);
      if (static_cast<std::int64_t>(J.size()) % T.p == 0 || seen.count(J)) continue;
      add_class(J);
    }
  }
  return out;
}

}  // namespace

ScanReport exhaustive_scan(std::int64_t p, std::int64_t n, const ScanBudget& budget) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p));
  if (n < 1 || n % p == 0) throw Error(ErrorKind::NotCoprime, "need gcd(n, p) = 1");
  ScanReport rep;
  rep.p = p;
  rep.n = n;
  rep.budget = budget.max_closures;

  // conclusive enumerations are reused across calls
  static std::mutex cache_mutex;
  static std::map<std::int64_t, std::pair<std::shared_ptr<const GLTable>, ClassEnumeration>> cache;
  std::shared_ptr<const GLTable> T;
  ClassEnumeration E;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(p);
    if (it != cache.end() && it->second.second.closures <= budget.max_closures) {
      T = it->second.first;
      E = it->second.second;
    }
  }
  if (!T) {
    T = std::make_shared<const GLTable>(p);
    E = enumerate_classes(*T, budget.max_closures);
    if (E.conclusive) {
      std::lock_guard<std::mutex> lock(cache_mutex);
      cache[p] = {T, E};
    }
  }
  rep.closures = E.closures;
  rep.conclusive = E.conclusive;
  std::vector<std::vector<std::int64_t>> classes;
  for (const auto& S : E.classes) {
    std::vector<std::int64_t> codes;
    for (int i : S) codes.push_back(T->code[i]);
    std::sort(codes.begin(), codes.end());
    classes.push_back(std::move(codes));
  }
  rep.classes = static_cast<int>(classes.size());

  const auto lines = all_lines(p);
  for (const auto& S : classes) {
    if (static_cast<std::int64_t>(S.size()) % n != 0) continue;
    FiniteGroup G = matrix_group(S, p);
    std::vector<std::int64_t> code_of(G.n);
    {
      std::vector<std::int64_t> order{mat2_code(mat2_identity(), p)};
      for (auto c : S)
        if (c != order[0]) order.push_back(c);
      code_of = order;
    }
    bool B = true;
    for (const auto& v : lines) {
      for (std::int64_t k = 1; k < p && B; ++k) {
        const Vec2 w{v[0] * k % p, v[1] * k % p};
        if (std::all_of(code_of.begin(), code_of.end(), [&](auto c) { return fixes(mat2_decode(c, p), w, p); }))
          B = false;
      }
    }
    if (!B) continue;
    for (const auto& Hp : all_subgroups(G)) {
      if (G.n / Hp.order() != n) continue;
      for (const auto& L : lines) {
        bool stable = true, C = true;
        for (int h : Hp.elements) stable = stable && stabilizes(mat2_decode(code_of[h], p), L, p);
        if (!stable) continue;
        for (auto c : code_of) {
          const Mat2 g = mat2_decode(c, p);
          if (stabilizes(g, L, p) && !fixes(g, L, p)) C = false;
        }
        if (!C) continue;
        ScanHit hit;
        hit.gprime = S;
        hit.gprime_order = G.n;
        hit.gprime_cyclic = is_cyclic(G, whole_group(G));
        for (int h : Hp.elements) hit.hprime.push_back(code_of[h]);
        std::sort(hit.hprime.begin(), hit.hprime.end());
        hit.line = L;
        hit.core_trivial = core(G, Hp).order() == 1;
        rep.hits.push_back(std::move(hit));
      }
    }
  }
  std::sort(rep.hits.begin(), rep.hits.end(), [](const ScanHit& a, const ScanHit& b) {
    return std::tie(a.gprime_order, a.gprime, a.hprime, a.line) < std::tie(b.gprime_order, b.gprime, b.hprime, b.line);
  });
  return rep;
}

SemidirectBuild build_semidirect(const RepTwoDim& rep) {
  const int p = static_cast<int>(rep.p);
  std::vector<IntMat> mats;
  for (const auto& m : rep.generator_images) {
    IntMat M(2, 2);
    M << m[0], m[1], m[2], m[3];
    mats.push_back(M);
  }
  SemidirectBuild out;
  out.spec = semidirect_spec(p, 2, mats, rep.spec, "V x| G'");
  out.group = share(build_group(out.spec, 1 << 20));
  std::vector<int> hgens{semidirect_index(p, 2, {static_cast<int>(rep.line[0]), static_cast<int>(rep.line[1])}, 0)};
  for (int h : rep.hprime.elements) hgens.push_back(semidirect_index(p, 2, {0, 0}, h));
  out.H = subgroup_closure(*out.group, hgens);
  out.Sp = subgroup_closure(*out.group, {semidirect_index(p, 2, {1, 0}, 0), semidirect_index(p, 2, {0, 1}, 0)});
  return out;
}

}  // namespace hnp
