#include "hnp/group.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <optional>
#include <numeric>
#include <random>
#include <set>

#include "hnp/numbers.hpp"
#include "hnp/snf.hpp"

namespace hnp {

namespace {

FiniteGroup from_trusted_table(int n, std::vector<int> table, std::string label) {
  FiniteGroup G;
  G.n = n;
  G.table = std::move(table);
  G.label = std::move(label);
  G.inverse.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (G.mul(a, b) == 0) {
        G.inverse[a] = b;
        break;
      }
  G.generators = generating_set(G, whole_group(G));
  return G;
}

std::vector<char> membership(int n, const Subgroup& H) {
  std::vector<char> in(n, 0);
  for (int h : H.elements) in[h] = 1;
  return in;
}

}  // namespace

FiniteGroup make_group(int n, std::vector<int> table, std::string label, int exhaustive_bound) {
  if (n < 1) throw Error(ErrorKind::SpecInvalid, "group order must be positive");
  if (table.size() != static_cast<std::size_t>(n) * n)
    throw Error(ErrorKind::SpecInvalid, "multiplication table has wrong size");
  for (int x : table)
    if (x < 0 || x >= n) throw Error(ErrorKind::SpecInvalid, "table entry out of range");
  for (int a = 0; a < n; ++a)
    if (table[a] != a || table[static_cast<std::size_t>(a) * n] != a)
      throw Error(ErrorKind::SpecInvalid, "element 0 is not a two-sided identity");
  for (int a = 0; a < n; ++a) {
    std::vector<char> seen_row(n, 0), seen_col(n, 0);
    for (int b = 0; b < n; ++b) {
      int r = table[static_cast<std::size_t>(a) * n + b], c = table[static_cast<std::size_t>(b) * n + a];
      if (seen_row[r] || seen_col[c]) throw Error(ErrorKind::SpecInvalid, "table is not a Latin square");
      seen_row[r] = seen_col[c] = 1;
    }
  }
  auto m = [&](int a, int b) { return table[static_cast<std::size_t>(a) * n + b]; };
  auto check = [&](int a, int b, int c) {
    if (m(m(a, b), c) != m(a, m(b, c)))
      throw Error(ErrorKind::SpecInvalid, "multiplication is not associative");
  };
  if (n <= exhaustive_bound) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) check(a, b, c);
  } else {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int t = 0; t < 50000; ++t) check(pick(rng), pick(rng), pick(rng));
  }
  FiniteGroup G = from_trusted_table(n, std::move(table), std::move(label));
  for (int a = 0; a < n; ++a)
    if (G.inverse[a] < 0 || G.mul(G.inverse[a], a) != 0)
      throw Error(ErrorKind::SpecInvalid, "missing two-sided inverse");
  return G;
}

bool Subgroup::contains(int g) const { return std::binary_search(elements.begin(), elements.end(), g); }

bool Subgroup::operator<(const Subgroup& o) const {
  if (elements.size() != o.elements.size()) return elements.size() < o.elements.size();
  return elements < o.elements;
}

int element_order(const FiniteGroup& G, int g) {
  int k = 1;
  for (int x = g; x != 0; x = G.mul(x, g)) ++k;
  return k;
}

int exponent(const FiniteGroup& G) {
  std::int64_t e = 1;
  for (int g = 0; g < G.n; ++g) e = std::lcm(e, static_cast<std::int64_t>(element_order(G, g)));
  return static_cast<int>(e);
}

bool is_abelian(const FiniteGroup& G) {
  for (int a = 0; a < G.n; ++a)
    for (int b = a + 1; b < G.n; ++b)
      if (G.mul(a, b) != G.mul(b, a)) return false;
  return true;
}

Subgroup subgroup_closure(const FiniteGroup& G, const std::vector<int>& gens) {
  std::vector<char> in(G.n, 0);
  std::vector<int> elems{0};
  in[0] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (int s : gens) {
      int x = G.mul(elems[i], s);
      if (!in[x]) {
        in[x] = 1;
        elems.push_back(x);
      }
    }
  std::sort(elems.begin(), elems.end());
  return Subgroup{elems};
}

Subgroup trivial_subgroup() { return Subgroup{{0}}; }

Subgroup whole_group(const FiniteGroup& G) {
  Subgroup H;
  H.elements.resize(G.n);
  std::iota(H.elements.begin(), H.elements.end(), 0);
  return H;
}

bool is_subgroup(const FiniteGroup& G, const std::vector<int>& elems) {
  std::vector<char> in(G.n, 0);
  for (int x : elems) {
    if (x < 0 || x >= G.n) return false;
    in[x] = 1;
  }
  if (elems.empty() || !in[0]) return false;
  for (int a : elems) {
    if (!in[G.inv(a)]) return false;
    for (int b : elems)
      if (!in[G.mul(a, b)]) return false;
  }
  return true;
}

bool is_normal(const FiniteGroup& G, const Subgroup& H) {
  auto in = membership(G.n, H);
  for (int g : G.generators)
    for (int h : H.elements)
      if (!in[G.conj(g, h)]) return false;
  return true;
}

bool is_subset(const Subgroup& A, const Subgroup& B) {
  return std::includes(B.elements.begin(), B.elements.end(), A.elements.begin(), A.elements.end());
}

Subgroup intersection(const Subgroup& A, const Subgroup& B) {
  Subgroup C;
  std::set_intersection(A.elements.begin(), A.elements.end(), B.elements.begin(), B.elements.end(),
                        std::back_inserter(C.elements));
  return C;
}

Subgroup join(const FiniteGroup& G, const Subgroup& A, const Subgroup& B) {
  std::vector<int> gens = generating_set(G, A);
  for (int b : generating_set(G, B)) gens.push_back(b);
  return subgroup_closure(G, gens);
}

Subgroup conjugate(const FiniteGroup& G, const Subgroup& H, int g) {
  Subgroup K;
  for (int h : H.elements) K.elements.push_back(G.conj(g, h));
  std::sort(K.elements.begin(), K.elements.end());
  return K;
}

bool is_cyclic(const FiniteGroup& G, const Subgroup& H) {
  for (int h : H.elements)
    if (element_order(G, h) == H.order()) return true;
  return false;
}

std::vector<int> generating_set(const FiniteGroup& G, const Subgroup& H) {
  std::vector<int> gens;
  Subgroup cur = trivial_subgroup();
  while (cur.order() < H.order()) {
    int best = -1, best_size = 0;
    for (int h : H.elements) {
      if (cur.contains(h)) continue;
      auto trial = gens;
      trial.push_back(h);
      int sz = subgroup_closure(G, trial).order();
      if (sz > best_size) {
        best_size = sz;
        best = h;
      }
      if (sz == H.order()) break;
    }
    gens.push_back(best);
    cur = subgroup_closure(G, gens);
  }
  return gens;
}

std::vector<Subgroup> cyclic_subgroups(const FiniteGroup& G) {
  std::set<Subgroup> out;
  for (int g = 0; g < G.n; ++g) out.insert(subgroup_closure(G, {g}));
  return {out.begin(), out.end()};
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& G) {
  auto cyc = cyclic_subgroups(G);
  std::set<Subgroup> out(cyc.begin(), cyc.end());
  std::vector<Subgroup> frontier(cyc.begin(), cyc.end());
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const auto& A : frontier)
      for (const auto& C : cyc) {
        if (is_subset(C, A)) continue;
        Subgroup J = join(G, A, C);
        if (out.insert(J).second) next.push_back(J);
      }
    frontier = std::move(next);
  }
  return {out.begin(), out.end()};
}

SylowResult sylow_subgroup(const FiniteGroup& G, std::int64_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  const int target = static_cast<int>(ipow(p, ord_p(G.n, p)));
  Subgroup S = trivial_subgroup();
  while (S.order() < target) {
    auto in = membership(G.n, S);
    int found = -1;
    for (int x = 1; x < G.n && found < 0; ++x) {
      if (in[x]) continue;
      int xp = x;
      for (int i = 1; i < p; ++i) xp = G.mul(xp, x);
      if (!in[xp]) continue;
      bool normalizes = true;
      for (int s : S.elements)
        if (!in[G.conj(x, s)]) {
          normalizes = false;
          break;
        }
      if (normalizes) found = x;
    }
    auto gens = generating_set(G, S);
    gens.push_back(found);
    S = subgroup_closure(G, gens);
  }
  SylowResult r{S, true};
  for (int g = 0; g < G.n; ++g) {
    Subgroup C = conjugate(G, S, g);
    if (C != S) r.is_normal = false;
    if (C.elements < r.subgroup.elements) r.subgroup = C;
  }
  return r;
}

Subgroup core(const FiniteGroup& G, const Subgroup& H) {
  Subgroup C = H;
  for (int g = 0; g < G.n; ++g) C = intersection(C, conjugate(G, H, g));
  return C;
}

Subgroup normalizer(const FiniteGroup& G, const Subgroup& H) {
  auto in = membership(G.n, H);
  Subgroup N;
  for (int g = 0; g < G.n; ++g) {
    bool ok = true;
    for (int h : H.elements)
      if (!in[G.conj(g, h)]) {
        ok = false;
        break;
      }
    if (ok) N.elements.push_back(g);
  }
  return N;
}

Subgroup centralizer(const FiniteGroup& G, const Subgroup& H) {
  Subgroup Z;
  for (int g = 0; g < G.n; ++g) {
    bool ok = true;
    for (int h : H.elements)
      if (G.mul(g, h) != G.mul(h, g)) {
        ok = false;
        break;
      }
    if (ok) Z.elements.push_back(g);
  }
  return Z;
}

std::pair<Subgroup, Subgroup> normalizer_centralizer(const FiniteGroup& G, const Subgroup& H) {
  return {normalizer(G, H), centralizer(G, H)};
}

Subgroup commutator_subgroup(const FiniteGroup& G, const Subgroup& A, const Subgroup& B) {
  std::set<int> comms;
  for (int a : A.elements)
    for (int b : B.elements) comms.insert(G.commutator(a, b));
  return subgroup_closure(G, {comms.begin(), comms.end()});
}

Subgroup derived_subgroup(const FiniteGroup& G) {
  auto W = whole_group(G);
  return commutator_subgroup(G, W, W);
}

std::vector<std::vector<int>> left_cosets(const FiniteGroup& G, const Subgroup& H) {
  std::vector<char> seen(G.n, 0);
  std::vector<std::vector<int>> out;
  for (int g = 0; g < G.n; ++g) {
    if (seen[g]) continue;
    std::vector<int> c;
    for (int h : H.elements) {
      int x = G.mul(g, h);
      seen[x] = 1;
      c.push_back(x);
    }
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<int> left_coset_index(const FiniteGroup& G, const Subgroup& H) {
  std::vector<int> idx(G.n, -1);
  auto cosets = left_cosets(G, H);
  for (std::size_t i = 0; i < cosets.size(); ++i)
    for (int x : cosets[i]) idx[x] = static_cast<int>(i);
  return idx;
}

std::vector<DoubleCoset> double_cosets(const FiniteGroup& G, const Subgroup& D, const Subgroup& H) {
  std::vector<char> seen(G.n, 0);
  std::vector<DoubleCoset> out;
  for (int g = 0; g < G.n; ++g) {
    if (seen[g]) continue;
    DoubleCoset dc{g, {}};
    for (int d : D.elements)
      for (int h : H.elements) {
        int x = G.mul(G.mul(d, g), h);
        if (!seen[x]) {
          seen[x] = 1;
          dc.elements.push_back(x);
        }
      }
    std::sort(dc.elements.begin(), dc.elements.end());
    out.push_back(std::move(dc));
  }
  return out;
}

Abelianization abelianization(const FiniteGroup& G) {
  Abelianization ab;
  const auto& S = G.generators;
  const int k = static_cast<int>(S.size());
  if (k == 0) {
    ab.image.assign(G.n, {});
    return ab;
  }
  // abelianized words along a BFS spanning tree
  std::vector<IntVec> word(G.n);
  std::vector<char> seen(G.n, 0);
  word[0] = IntVec::Zero(k);
  seen[0] = 1;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int g = queue.front();
    queue.pop_front();
    for (int i = 0; i < k; ++i) {
      int x = G.mul(g, S[i]);
      if (seen[x]) continue;
      seen[x] = 1;
      word[x] = word[g];
      word[x](i) += 1;
      queue.push_back(x);
    }
  }
  IntMat R(k, static_cast<Eigen::Index>(G.n) * k);
  for (int g = 0; g < G.n; ++g)
    for (int i = 0; i < k; ++i) {
      IntVec rel = word[g] - word[G.mul(g, S[i])];
      rel(i) += 1;
      R.col(static_cast<Eigen::Index>(g) * k + i) = rel;
    }
  Cokernel ck = cokernel(R);
  ab.structure = ck.torsion();
  ab.image.resize(G.n);
  for (int g = 0; g < G.n; ++g) {
    IntVec c = ck.coordinates * word[g];
    for (Eigen::Index i = 0; i < c.size(); ++i) ab.image[g].push_back(mod(c(i), ck.orders[i]));
  }
  return ab;
}

Subgroup complement(const FiniteGroup& G, const Subgroup& S, int search_budget) {
  if (!is_normal(G, S)) throw Error(ErrorKind::PreconditionFailed, "complement: subgroup is not normal");
  if (S.order() == 1) return whole_group(G);
  auto ps = prime_divisors(S.order());
  if (ps.size() != 1 || ord_p(G.n, ps[0]) != ord_p(S.order(), ps[0]))
    throw Error(ErrorKind::PreconditionFailed, "complement: subgroup is not a Sylow subgroup");
  const std::int64_t p = ps[0];
  const int target = G.n / S.order();
  if (target == 1) return trivial_subgroup();
  std::vector<int> cand;
  for (int g = 1; g < G.n; ++g)
    if (element_order(G, g) % p != 0) cand.push_back(g);
  int spent = 0;
  // closures of 1, 2, 3 elements in lexicographic order
  std::vector<int> pick;
  std::function<std::optional<Subgroup>(std::size_t, const Subgroup&, int)> rec =
      [&](std::size_t start, const Subgroup& cur, int depth) -> std::optional<Subgroup> {
    for (std::size_t i = start; i < cand.size(); ++i) {
      if (cur.contains(cand[i])) continue;
      if (++spent > search_budget) throw Error(ErrorKind::SearchBudgetExceeded, "complement search");
      pick.push_back(cand[i]);
      Subgroup C = subgroup_closure(G, pick);
      if (C.order() == target) return C;
      if (depth < 3 && target % C.order() == 0) {
        if (auto r = rec(i + 1, C, depth + 1)) return r;
      }
      pick.pop_back();
    }
    return std::nullopt;
  };
  if (auto r = rec(0, trivial_subgroup(), 1)) return *r;
  throw Error(ErrorKind::SearchBudgetExceeded, "no complement generated by at most 3 elements");
}

int local_index(const Subgroup& H, int g) {
  auto it = std::lower_bound(H.elements.begin(), H.elements.end(), g);
  if (it == H.elements.end() || *it != g) return -1;
  return static_cast<int>(it - H.elements.begin());
}

FiniteGroup subgroup_as_group(const FiniteGroup& G, const Subgroup& H) {
  const int m = H.order();
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      table[static_cast<std::size_t>(i) * m + j] = local_index(H, G.mul(H.elements[i], H.elements[j]));
  return from_trusted_table(m, std::move(table), G.label.empty() ? "" : "subgroup of " + G.label);
}

Subgroup to_local(const Subgroup& H, const Subgroup& K) {
  Subgroup L;
  for (int k : K.elements) {
    int i = local_index(H, k);
    if (i < 0) throw Error(ErrorKind::PreconditionFailed, "subgroup is not contained in H");
    L.elements.push_back(i);
  }
  std::sort(L.elements.begin(), L.elements.end());
  return L;
}

Subgroup to_parent(const Subgroup& H, const Subgroup& K) {
  Subgroup P;
  for (int k : K.elements) P.elements.push_back(H.elements[k]);
  std::sort(P.elements.begin(), P.elements.end());
  return P;
}

Quotient quotient_group(const FiniteGroup& G, const Subgroup& N) {
  if (!is_normal(G, N)) throw Error(ErrorKind::PreconditionFailed, "quotient by a non-normal subgroup");
  auto cosets = left_cosets(G, N);
  auto idx = left_coset_index(G, N);
  const int m = static_cast<int>(cosets.size());
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      table[static_cast<std::size_t>(i) * m + j] = idx[G.mul(cosets[i][0], cosets[j][0])];
  Quotient q{from_trusted_table(m, std::move(table), G.label + "/N"), idx};
  return q;
}

std::vector<int> extend_homomorphism(const FiniteGroup& src, const std::vector<int>& gens,
                                     const FiniteGroup& dst, const std::vector<int>& images) {
  std::vector<int> map(src.n, -1);
  map[0] = 0;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int g = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      int x = src.mul(g, gens[i]);
      int y = dst.mul(map[g], images[i]);
      if (map[x] < 0) {
        map[x] = y;
        queue.push_back(x);
      } else if (map[x] != y) {
        return {};
      }
    }
  }
  for (int g = 0; g < src.n; ++g)
    if (map[g] < 0) return {};
  return map;
}

std::string describe(const Subgroup& H) {
  std::string s = "{";
  for (std::size_t i = 0; i < H.elements.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(H.elements[i]);
  }
  return s + "}";
}

}  // namespace hnp
