#include "hnp/group_spec.hpp"

#include <deque>
#include <map>
#include <sstream>

#include "hnp/numbers.hpp"

namespace hnp {

namespace {

IntMat reduce(const IntMat& A, int p) {
  IntMat B = A;
  for (Eigen::Index i = 0; i < B.size(); ++i) B.data()[i] = mod(B.data()[i], p);
  return B;
}

std::int64_t det_mod(IntMat A, int p) {
  const int m = static_cast<int>(A.rows());
  std::int64_t det = 1;
  for (int c = 0; c < m; ++c) {
    int piv = -1;
    for (int r = c; r < m; ++r)
      if (mod(A(r, c), p) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      A.row(piv).swap(A.row(c));
      det = -det;
    }
    std::int64_t inv = inv_mod(A(c, c), p);
    det = mod(det * A(c, c), p);
    for (int r = c + 1; r < m; ++r) {
      std::int64_t f = mod(A(r, c) * inv, p);
      for (int k = c; k < m; ++k) A(r, k) = mod(A(r, k) - f * A(c, k), p);
    }
  }
  return mod(det, p);
}

FiniteGroup finish(int n, std::vector<int> table, const std::string& label, std::vector<int> gens) {
  FiniteGroup G = make_group(n, std::move(table), label, 0);
  if (!gens.empty()) {
    if (subgroup_closure(G, gens).order() != n)
      throw Error(ErrorKind::SpecInvalid, "declared generators do not generate the group");
    G.generators = std::move(gens);
  }
  return G;
}

FiniteGroup build_table(const GroupSpec& s, int bound) {
  if (s.n > bound) throw Error(ErrorKind::OrderBudgetExceeded, "table order " + std::to_string(s.n));
  FiniteGroup G = make_group(s.n, s.mul, s.label);
  if (!s.table_generators.empty()) {
    for (int g : s.table_generators)
      if (g < 0 || g >= s.n) throw Error(ErrorKind::SpecInvalid, "generator index out of range");
    if (subgroup_closure(G, s.table_generators).order() != s.n)
      throw Error(ErrorKind::SpecInvalid, "declared generators do not generate the group");
    G.generators = s.table_generators;
  }
  return G;
}

FiniteGroup build_permutations(const GroupSpec& s, int bound) {
  if (s.degree < 1) throw Error(ErrorKind::SpecInvalid, "permutation degree must be positive");
  std::vector<std::vector<int>> gens;
  for (const auto& c : s.cycles) gens.push_back(parse_cycles(c, s.degree));
  std::vector<int> id(s.degree);
  for (int i = 0; i < s.degree; ++i) id[i] = i;
  std::map<std::vector<int>, int> index{{id, 0}};
  std::vector<std::vector<int>> elems{id};
  auto compose = [&](const std::vector<int>& g, const std::vector<int>& h) {
    std::vector<int> r(s.degree);
    for (int i = 0; i < s.degree; ++i) r[i] = g[h[i]];
    return r;
  };
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : gens) {
      auto x = compose(elems[i], g);
      if (index.emplace(x, static_cast<int>(elems.size())).second) {
        elems.push_back(x);
        if (static_cast<int>(elems.size()) > bound)
          throw Error(ErrorKind::OrderBudgetExceeded, "permutation group exceeds order bound");
      }
    }
  const int n = static_cast<int>(elems.size());
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = index.at(compose(elems[a], elems[b]));
  std::vector<int> gen_idx;
  for (const auto& g : gens) gen_idx.push_back(index.at(g));
  return finish(n, std::move(table), s.label, gen_idx);
}

FiniteGroup build_semidirect(const GroupSpec& s, int bound) {
  if (!is_prime(s.p)) throw Error(ErrorKind::SpecInvalid, "semidirect: p must be prime");
  if (s.m < 1) throw Error(ErrorKind::SpecInvalid, "semidirect: m must be positive");
  if (s.children.size() != 1) throw Error(ErrorKind::SpecInvalid, "semidirect: exactly one acting group");
  FiniteGroup Q = build_group(s.children[0], bound);
  const int p = s.p, m = s.m;
  const std::int64_t vsize = ipow(p, m);
  if (vsize * Q.n > bound) throw Error(ErrorKind::OrderBudgetExceeded, "semidirect order exceeds bound");
  if (s.matrices.size() != Q.generators.size())
    throw Error(ErrorKind::SpecInvalid, "semidirect: need one matrix per generator of the acting group (" +
                                            std::to_string(Q.generators.size()) + ")");
  std::vector<IntMat> gm;
  for (const auto& M : s.matrices) {
    if (M.rows() != m || M.cols() != m) throw Error(ErrorKind::SpecInvalid, "semidirect: matrix has wrong shape");
    if (det_mod(M, p) == 0) throw Error(ErrorKind::SpecInvalid, "semidirect: matrix is not invertible mod p");
    gm.push_back(reduce(M, p));
  }
  // extend to a homomorphism Q -> GL_m(F_p)
  std::vector<IntMat> act(Q.n);
  std::vector<char> seen(Q.n, 0);
  act[0] = IntMat::Identity(m, m);
  seen[0] = 1;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int q = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < Q.generators.size(); ++i) {
      int x = Q.mul(q, Q.generators[i]);
      IntMat M = reduce(act[q] * gm[i], p);
      if (!seen[x]) {
        seen[x] = 1;
        act[x] = M;
        queue.push_back(x);
      } else if (act[x] != M) {
        throw Error(ErrorKind::SpecInvalid, "semidirect: matrices do not define a homomorphism");
      }
    }
  }
  const int n = static_cast<int>(vsize * Q.n);
  auto decode = [&](int v) {
    IntVec x(m);
    for (int i = 0; i < m; ++i) {
      x(i) = v % p;
      v /= p;
    }
    return x;
  };
  auto encode = [&](const IntVec& x) {
    int v = 0;
    for (int i = m - 1; i >= 0; --i) v = v * p + static_cast<int>(mod(x(i), p));
    return v;
  };
  std::vector<IntVec> vecs(vsize);
  for (int v = 0; v < vsize; ++v) vecs[v] = decode(v);
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    int va = static_cast<int>(a % vsize), qa = static_cast<int>(a / vsize);
    for (int b = 0; b < n; ++b) {
      int vb = static_cast<int>(b % vsize), qb = static_cast<int>(b / vsize);
      IntVec w = vecs[va] + act[qa] * vecs[vb];
      table[static_cast<std::size_t>(a) * n + b] = static_cast<int>(Q.mul(qa, qb) * vsize + encode(w));
    }
  }
  std::vector<int> gens;
  for (int i = 0; i < m; ++i) gens.push_back(static_cast<int>(ipow(p, i)));
  for (int g : Q.generators) gens.push_back(static_cast<int>(g * vsize));
  return finish(n, std::move(table), s.label, gens);
}

FiniteGroup build_product(const GroupSpec& s, int bound) {
  if (s.children.empty()) throw Error(ErrorKind::SpecInvalid, "product: no factors");
  std::vector<FiniteGroup> fs;
  std::int64_t n = 1;
  for (const auto& c : s.children) {
    fs.push_back(build_group(c, bound));
    n *= fs.back().n;
    if (n > bound) throw Error(ErrorKind::OrderBudgetExceeded, "product order exceeds bound");
  }
  const int N = static_cast<int>(n);
  auto split = [&](int x) {
    std::vector<int> d;
    for (const auto& f : fs) {
      d.push_back(x % f.n);
      x /= f.n;
    }
    return d;
  };
  auto join = [&](const std::vector<int>& d) {
    int x = 0;
    for (int i = static_cast<int>(fs.size()) - 1; i >= 0; --i) x = x * fs[i].n + d[i];
    return x;
  };
  std::vector<int> table(static_cast<std::size_t>(N) * N);
  for (int a = 0; a < N; ++a) {
    auto da = split(a);
    for (int b = 0; b < N; ++b) {
      auto db = split(b);
      std::vector<int> dc(fs.size());
      for (std::size_t i = 0; i < fs.size(); ++i) dc[i] = fs[i].mul(da[i], db[i]);
      table[static_cast<std::size_t>(a) * N + b] = join(dc);
    }
  }
  std::vector<int> gens;
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (int g : fs[i].generators) {
      std::vector<int> d(fs.size(), 0);
      d[i] = g;
      gens.push_back(join(d));
    }
  return finish(N, std::move(table), s.label, gens);
}

}  // namespace

std::vector<int> parse_cycles(const std::string& text, int degree) {
  std::vector<int> perm(degree);
  for (int i = 0; i < degree; ++i) perm[i] = i;
  std::vector<char> used(degree, 0);
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::SpecInvalid, "cycle notation '" + text + "': " + why);
  };
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(') fail("expected '('");
    std::size_t close = text.find(')', i);
    if (close == std::string::npos) fail("unbalanced parenthesis");
    std::istringstream in(text.substr(i + 1, close - i - 1));
    std::vector<int> cyc;
    std::string tok;
    while (in >> tok) {
      for (char& ch : tok)
        if (ch == ',') ch = ' ';
      std::istringstream t2(tok);
      int x;
      while (t2 >> x) {
        if (x < 1 || x > degree) fail("point out of range");
        if (used[x - 1]) fail("point repeated");
        used[x - 1] = 1;
        cyc.push_back(x - 1);
      }
    }
    for (std::size_t k = 0; k < cyc.size(); ++k) perm[cyc[k]] = cyc[(k + 1) % cyc.size()];
    i = close + 1;
  }
  return perm;
}

FiniteGroup build_group(const GroupSpec& spec, int order_bound) {
  switch (spec.kind) {
    case GroupSpec::Kind::Table: return build_table(spec, order_bound);
    case GroupSpec::Kind::Permutations: return build_permutations(spec, order_bound);
    case GroupSpec::Kind::Semidirect: return build_semidirect(spec, order_bound);
    case GroupSpec::Kind::Product: return build_product(spec, order_bound);
  }
  throw Error(ErrorKind::SpecInvalid, "unknown kind");
}

GroupSpec table_spec(int n, std::vector<int> mul, std::string label) {
  GroupSpec s;
  s.kind = GroupSpec::Kind::Table;
  s.n = n;
  s.mul = std::move(mul);
  s.label = std::move(label);
  return s;
}

GroupSpec cyclic_spec(int n) {
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  GroupSpec s = table_spec(n, std::move(mul), "Z/" + std::to_string(n));
  if (n > 1) s.table_generators = {1};
  return s;
}

GroupSpec permutation_spec(int degree, std::vector<std::string> cycles, std::string label) {
  GroupSpec s;
  s.kind = GroupSpec::Kind::Permutations;
  s.degree = degree;
  s.cycles = std::move(cycles);
  s.label = std::move(label);
  return s;
}

GroupSpec semidirect_spec(int p, int m, std::vector<IntMat> matrices, GroupSpec acting, std::string label) {
  GroupSpec s;
  s.kind = GroupSpec::Kind::Semidirect;
  s.p = p;
  s.m = m;
  s.matrices = std::move(matrices);
  s.children.push_back(std::move(acting));
  s.label = std::move(label);
  return s;
}

GroupSpec product_spec(std::vector<GroupSpec> factors, std::string label) {
  GroupSpec s;
  s.kind = GroupSpec::Kind::Product;
  s.children = std::move(factors);
  s.label = std::move(label);
  return s;
}

int semidirect_index(int p, int m, const std::vector<int>& v, int q) {
  int x = 0;
  for (int i = m - 1; i >= 0; --i) x = x * p + static_cast<int>(mod(v[i], p));
  return q * static_cast<int>(ipow(p, m)) + x;
}

}  // namespace hnp
