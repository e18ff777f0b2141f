#include "hnp/cohomology.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>
#include <string>

#include "hnp/local_smith.hpp"
#include "hnp/numbers.hpp"
#include "hnp/snf.hpp"

namespace hnp {

namespace {

void check_budget(int n, int rank, int degree, const Budget& b) {
  std::int64_t cols = rank;
  for (int i = 0; i < degree; ++i) cols *= (n - 1);
  if (cols > b.max_columns)
    throw Error(ErrorKind::BudgetExceeded, "cochain space (|G|-1)^" + std::to_string(degree) + "*rank = " +
                                               std::to_string(cols) + " exceeds budget " +
                                               std::to_string(b.max_columns) + " (|G|=" + std::to_string(n) +
                                               ", rank=" + std::to_string(rank) + ")");
}

std::int64_t centered(std::int64_t x, std::int64_t Q) {
  x = mod(x, Q);
  return x > Q / 2 ? x - Q : x;
}

// Rows (x, s, c) for x != 1, s in S; columns (g, c) for g != 1.
// (d f)(x, s) = x f(s) - f(x s) + f(x).
template <typename Sink>
void reduced_d1(const GLattice& M, const std::vector<int>& S, Sink&& put) {
  const auto& G = *M.group;
  const int r = M.rank;
  const int ns = static_cast<int>(S.size());
  for (int x = 1; x < G.n; ++x)
    for (int si = 0; si < ns; ++si) {
      const int s = S[si];
      const int xs = G.mul(x, s);
      const int row0 = ((x - 1) * ns + si) * r;
      const IntMat& A = M.action[x];
      for (int c = 0; c < r; ++c) {
        for (int c2 = 0; c2 < r; ++c2)
          if (A(c, c2) != 0) put(row0 + c, (s - 1) * r + c2, A(c, c2));
        if (xs != 0) put(row0 + c, (xs - 1) * r + c, -1);
        put(row0 + c, (x - 1) * r + c, 1);
      }
    }
}

std::vector<std::int64_t> project2(const GLattice& M, const std::vector<int>& S, const Cocycle& z) {
  const auto& G = *M.group;
  const int r = M.rank, ns = static_cast<int>(S.size());
  std::vector<std::int64_t> y(static_cast<std::size_t>(G.n - 1) * ns * r);
  for (int x = 1; x < G.n; ++x)
    for (int si = 0; si < ns; ++si)
      for (int c = 0; c < r; ++c)
        y[((x - 1) * ns + si) * r + c] = z.values((static_cast<Eigen::Index>(x) * G.n + S[si]) * r + c);
  return y;
}

struct LocalH2 {
  std::int64_t q;
  LocalSmith smith;
  std::vector<LocalSmith::Pivot> torsion;
};

LocalH2 local_h2(const GLattice& M, std::int64_t q) {
  const auto& G = *M.group;
  const auto& S = G.generators;
  const int r = M.rank;
  const int rows = (G.n - 1) * static_cast<int>(S.size()) * r;
  const int cols = (G.n - 1) * r;
  const int k = 2 * ord_p(G.n, q) + 1;
  LocalH2 out{q, LocalSmith(q, k, rows, cols), {}};
  reduced_d1(M, S, [&](int i, int j, std::int64_t v) { out.smith.add(i, j, v); });
  out.smith.run();
  out.torsion = out.smith.torsion();
  return out;
}

// Assembles canonical invariant factors from primary bases.
void assemble(const std::vector<PrimaryPart>& parts, const GLattice& M, int degree, FinAb& structure,
              std::vector<Cocycle>& gens) {
  std::size_t len = 0;
  std::vector<std::vector<std::size_t>> order;  // per prime, basis indices by exponent descending
  for (const auto& P : parts) {
    std::vector<std::size_t> idx(P.basis.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](auto a, auto b) { return P.exponents[a] > P.exponents[b]; });
    order.push_back(idx);
    len = std::max(len, idx.size());
  }
  std::vector<std::int64_t> factors(len, 1);
  gens.clear();
  const std::size_t vsize = static_cast<std::size_t>(degree == 2 ? M.group->n : 1) * M.group->n * M.rank;
  for (std::size_t t = 0; t < len; ++t) {
    Cocycle z{degree, M.group->n, M.rank, IntVec::Zero(static_cast<Eigen::Index>(vsize))};
    for (std::size_t p = 0; p < parts.size(); ++p) {
      if (t >= order[p].size()) continue;
      auto i = order[p][t];
      factors[t] *= ipow(parts[p].prime, parts[p].exponents[i]);
      z.values += parts[p].basis[i].values;
    }
    gens.push_back(std::move(z));
  }
  std::reverse(factors.begin(), factors.end());
  std::reverse(gens.begin(), gens.end());
  structure = FinAb{factors};
}

IntMat stacked_fixed_matrix(const GLattice& M) {
  const auto& S = M.group->generators;
  const int r = M.rank;
  IntMat A(static_cast<Eigen::Index>(S.size()) * r, r);
  for (std::size_t i = 0; i < S.size(); ++i)
    A.block(static_cast<Eigen::Index>(i) * r, 0, r, r) = M.action[S[i]] - IntMat::Identity(r, r);
  return A;
}

// Full 1-cocycle from its values on generators: f(h s) = f(h) + h f(s).
IntVec extend_1cocycle(const GLattice& M, const IntVec& on_gens) {
  const auto& G = *M.group;
  const auto& S = G.generators;
  const int r = M.rank;
  IntVec f = IntVec::Zero(static_cast<Eigen::Index>(G.n) * r);
  std::vector<char> seen(G.n, 0);
  seen[0] = 1;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int h = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < S.size(); ++i) {
      int x = G.mul(h, S[i]);
      if (seen[x]) continue;
      seen[x] = 1;
      f.segment(static_cast<Eigen::Index>(x) * r, r) =
          f.segment(static_cast<Eigen::Index>(h) * r, r) +
          M.action[h] * on_gens.segment(static_cast<Eigen::Index>(i) * r, r);
      queue.push_back(x);
    }
  }
  return f;
}

}  // namespace

Budget Budget::from_env() {
  Budget b;
  if (const char* s = std::getenv("SHA_BUDGET")) {
    try {
      b.max_columns = std::stoll(s);
    } catch (...) {
      throw Error(ErrorKind::SchemaError, std::string("SHA_BUDGET is not an integer: ") + s);
    }
  }
  return b;
}

Cocycle coboundary(const GLattice& M, const IntVec& f) {
  const auto& G = *M.group;
  const int r = M.rank, n = G.n;
  Cocycle z{2, n, r, IntVec::Zero(static_cast<Eigen::Index>(n) * n * r)};
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      auto out = z.values.segment((static_cast<Eigen::Index>(g) * n + h) * r, r);
      out = M.action[g] * f.segment(static_cast<Eigen::Index>(h) * r, r) -
            f.segment(static_cast<Eigen::Index>(G.mul(g, h)) * r, r) + f.segment(static_cast<Eigen::Index>(g) * r, r);
    }
  return z;
}

bool is_cocycle(const GLattice& M, const Cocycle& z) {
  const auto& G = *M.group;
  const int n = G.n;
  if (z.group_order != n || z.rank != M.rank) return false;
  if (z.degree == 0) {
    for (int g = 0; g < n; ++g)
      if (M.action[g] * z.values != z.values) return false;
    return true;
  }
  if (z.degree == 1) {
    for (int g = 0; g < n; ++g)
      for (int h = 0; h < n; ++h)
        if (z.at(G.mul(g, h)) != z.at(g) + M.action[g] * z.at(h)) return false;
    return true;
  }
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      IntVec zgh = z.at(g, h);
      for (int k = 0; k < n; ++k) {
        IntVec lhs = M.action[g] * z.at(h, k) - z.at(G.mul(g, h), k) + z.at(g, G.mul(h, k)) - zgh;
        if (!lhs.isZero()) return false;
      }
    }
  return true;
}

CohomologyGroup cohomology(const FiniteGroup& G, const GLattice& M, int degree, const Budget& budget) {
  if (G.n != M.group->n || G.table != M.group->table)
    throw Error(ErrorKind::GroupMismatch, "lattice is over a different group");
  return cohomology(M, degree, budget);
}

CohomologyGroup cohomology(const GLattice& M, int degree, const Budget& budget) {
  if (degree < 0 || degree > 2) throw Error(ErrorKind::PreconditionFailed, "degree must be 0, 1 or 2");
  const auto& G = *M.group;
  const int r = M.rank, n = G.n;
  check_budget(n, r, degree, budget);
  CohomologyGroup H;
  H.degree = degree;
  H.lattice = M;
  if (degree == 0) {
    IntMat K = n == 1 ? IntMat(IntMat::Identity(r, r)) : integer_kernel(stacked_fixed_matrix(M));
    H.free_rank = static_cast<int>(K.cols());
    for (Eigen::Index j = 0; j < K.cols(); ++j) H.generators.push_back(Cocycle{0, n, r, K.col(j)});
    return H;
  }
  if (n == 1 || r == 0) return H;
  if (degree == 1) {
    Cokernel ck = cokernel(stacked_fixed_matrix(M));
    std::vector<std::int64_t> orders;
    for (std::size_t j = 0; j < ck.orders.size(); ++j) {
      H.generators.push_back(Cocycle{1, n, r, extend_1cocycle(M, ck.generators.col(static_cast<Eigen::Index>(j)))});
      orders.push_back(ck.orders[j]);
    }
    H.structure = FinAb{orders};
    return H;
  }
  for (auto q : prime_divisors(n)) {
    LocalH2 L = local_h2(M, q);
    PrimaryPart P;
    P.prime = q;
    const std::int64_t Q = L.smith.modulus();
    for (const auto& piv : L.torsion) {
      auto w = L.smith.v_column(piv.col);
      IntVec f = IntVec::Zero(static_cast<Eigen::Index>(n) * r);
      for (int j = 0; j < (n - 1) * r; ++j) f(r + j) = centered(w[j], Q);
      Cocycle z = coboundary(M, f);
      const std::int64_t qv = ipow(q, piv.val);
      for (Eigen::Index i = 0; i < z.values.size(); ++i) {
        if (z.values(i) % qv != 0) throw Error(ErrorKind::PreconditionFailed, "internal: coboundary not divisible");
        z.values(i) /= qv;
      }
      P.basis.push_back(std::move(z));
      P.exponents.push_back(piv.val);
    }
    if (!P.basis.empty()) H.primary.push_back(std::move(P));
  }
  assemble(H.primary, M, 2, H.structure, H.generators);
  return H;
}

Cocycle restriction_class(const FiniteGroup& G, const Cocycle& z, const Subgroup& D) {
  const int m = D.order(), r = z.rank;
  Cocycle out{z.degree, m, r, IntVec::Zero(static_cast<Eigen::Index>(z.degree == 2 ? m : 1) * m * r)};
  (void)G;
  if (z.degree == 2) {
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        out.values.segment((static_cast<Eigen::Index>(a) * m + b) * r, r) = z.at(D.elements[a], D.elements[b]);
  } else if (z.degree == 1) {
    for (int a = 0; a < m; ++a) out.values.segment(static_cast<Eigen::Index>(a) * r, r) = z.at(D.elements[a]);
  } else {
    out.values = z.values;
  }
  return out;
}

CoboundaryTest is_coboundary(const GLattice& M, const Cocycle& c, bool want_witness) {
  const auto& G = *M.group;
  const int n = G.n, r = M.rank;
  CoboundaryTest out;
  if (n == 1 || r == 0 || c.values.isZero()) {
    out.is_coboundary = true;
    out.witness = IntVec::Zero(static_cast<Eigen::Index>(n) * r);
    return out;
  }
  const auto& S = G.generators;
  auto y = project2(M, S, c);
  out.is_coboundary = true;
  for (auto q : prime_divisors(n)) {
    LocalH2 L = local_h2(M, q);
    auto u = L.smith.apply_u(y);
    for (const auto& piv : L.torsion)
      if (u[piv.row] % ipow(q, piv.val) != 0) out.is_coboundary = false;
  }
  if (!out.is_coboundary || !want_witness) return out;

  IntVec b = IntVec::Zero(static_cast<Eigen::Index>(n) * r);
  int sigma = -1;
  for (int g = 1; g < n && sigma < 0; ++g)
    if (element_order(G, g) == n) sigma = g;
  if (sigma >= 0) {
    // b(s^{k}) = P_k x - w_k; b(s^n) = 0 forces N x = w_n
    IntMat P = IntMat::Identity(r, r), N = IntMat::Identity(r, r);
    IntVec w = IntVec::Zero(r);
    int cur = sigma;
    for (int k = 1; k < n; ++k) {
      w += c.at(cur, sigma);
      P = M.action[cur] + P;
      cur = G.mul(cur, sigma);
    }
    N = P;
    auto x = solve_integer(N, w);
    if (x) {
      IntMat Pk = IntMat::Identity(r, r);
      IntVec wk = IntVec::Zero(r);
      cur = sigma;
      for (int k = 1; k < n; ++k) {
        b.segment(static_cast<Eigen::Index>(cur) * r, r) = Pk * (*x) - wk;
        wk += c.at(cur, sigma);
        Pk = M.action[cur] + Pk;
        cur = G.mul(cur, sigma);
      }
    }
  } else {
    const int rows = static_cast<int>(y.size()), cols = (n - 1) * r;
    IntMat A = IntMat::Zero(rows, cols);
    reduced_d1(M, S, [&](int i, int j, std::int64_t v) { A(i, j) += v; });
    IntVec rhs(rows);
    for (int i = 0; i < rows; ++i) rhs(i) = y[i];
    if (auto x = solve_integer(A, rhs)) b.segment(r, cols) = *x;
  }
  if (coboundary(M, b).values == c.values) out.witness = b;
  return out;
}

std::vector<Subgroup> close_dset(const FiniteGroup& G, const std::vector<Subgroup>& raw) {
  std::set<Subgroup> all(raw.begin(), raw.end());
  for (auto& C : cyclic_subgroups(G)) all.insert(C);
  return {all.begin(), all.end()};
}

ShaGroup sha(const GLattice& M, const std::vector<Subgroup>& dset, const Budget& budget) {
  const auto& G = *M.group;
  for (const auto& D : dset)
    if (!is_subgroup(G, D.elements)) throw Error(ErrorKind::PreconditionFailed, "dset member is not a subgroup");
  ShaGroup out;
  out.raw_dset = dset;
  out.dset = close_dset(G, dset);
  out.base = cohomology(M, 2, budget);
  const bool has_whole = std::any_of(out.dset.begin(), out.dset.end(), [&](auto& D) { return D.order() == G.n; });
  if (has_whole) return out;
  const int r = M.rank;

  std::vector<PrimaryPart> parts;
  for (const auto& P : out.base.primary) {
    const std::int64_t q = P.prime;
    const int t = static_cast<int>(P.basis.size());
    std::vector<std::vector<std::int64_t>> rows;  // constraint coefficient rows
    std::vector<std::int64_t> mods;
    for (const auto& D : out.dset) {
      if (D.order() == 1 || D.order() % q != 0) continue;
      GLattice MD = restrict(M, D);
      LocalH2 L = local_h2(MD, q);
      if (L.torsion.empty()) continue;
      std::vector<std::vector<std::int64_t>> coords(t);
      for (int i = 0; i < t; ++i) {
        Cocycle zi = restriction_class(G, P.basis[i], D);
        coords[i] = L.smith.apply_u(project2(MD, MD.group->generators, zi));
      }
      for (const auto& piv : L.torsion) {
        const std::int64_t mv = ipow(q, piv.val);
        std::vector<std::int64_t> row(t);
        for (int i = 0; i < t; ++i) row[i] = mod(coords[i][piv.row], mv);
        rows.push_back(row);
        mods.push_back(mv);
      }
    }
    const int J = static_cast<int>(rows.size());
    // K = {a : C a = 0 mod mods}; basis from the kernel of [C | diag(mods)]
    IntMat B;
    if (J == 0) {
      B = IntMat::Identity(t, t);
    } else {
      IntMat big = IntMat::Zero(J, t + J);
      for (int j = 0; j < J; ++j) {
        for (int i = 0; i < t; ++i) big(j, i) = rows[j][i];
        big(j, t + j) = mods[j];
      }
      B = integer_kernel(big).topRows(t);
    }
    IntMat X(t, t);
    for (int i = 0; i < t; ++i) {
      IntVec e = IntVec::Zero(t);
      e(i) = ipow(q, P.exponents[i]);
      auto x = solve_integer(B, e);
      if (!x) throw Error(ErrorKind::PreconditionFailed, "internal: relation lattice not inside kernel");
      X.col(i) = *x;
    }
    Cokernel ck = cokernel(X);
    PrimaryPart S;
    S.prime = q;
    for (std::size_t j = 0; j < ck.orders.size(); ++j) {
      IntVec a = B * ck.generators.col(static_cast<Eigen::Index>(j));
      Cocycle z{2, G.n, r, IntVec::Zero(static_cast<Eigen::Index>(G.n) * G.n * r)};
      for (int i = 0; i < t; ++i) z.values += mod(a(i), ipow(q, P.exponents[i])) * P.basis[i].values;
      S.basis.push_back(std::move(z));
      S.exponents.push_back(ord_p(ck.orders[j], q));
    }
    if (!S.basis.empty()) parts.push_back(std::move(S));
  }
  assemble(parts, M, 2, out.structure, out.generators);
  return out;
}

FinAb tate_cyclic(const GLattice& M, int j, int sigma) {
  const auto& G = *M.group;
  const int n = G.n, r = M.rank;
  if (sigma < 0) {
    for (int g = 0; g < n && sigma < 0; ++g)
      if (element_order(G, g) == n) sigma = g;
    if (sigma < 0) throw Error(ErrorKind::NotCyclic, "group is not cyclic");
  } else if (element_order(G, sigma) != n) {
    throw Error(ErrorKind::NotCyclic, "sigma does not generate the group");
  }
  if (r == 0) return {};
  IntMat N = IntMat::Zero(r, r);
  for (int g = 0; g < n; ++g) N += M.action[g];
  IntMat T = M.action[sigma] - IntMat::Identity(r, r);
  const bool even = ((j % 2) + 2) % 2 == 0;
  IntMat K = integer_kernel(even ? T : N);
  IntMat image = even ? N : T;
  if (K.cols() == 0) return {};
  IntMat X(K.cols(), image.cols());
  for (Eigen::Index c = 0; c < image.cols(); ++c) {
    auto x = solve_integer(K, image.col(c));
    if (!x) throw Error(ErrorKind::PreconditionFailed, "internal: image not inside kernel");
    X.col(c) = *x;
  }
  return cokernel(X).torsion();
}

FinAb h1_j_formula(const FiniteGroup& G, const std::vector<std::pair<Subgroup, int>>& pairs) {
  if (pairs.empty()) throw Error(ErrorKind::EmptyFamily, "h1_j_formula needs at least one subgroup");
  auto ab = abelianization(G);
  const int k = static_cast<int>(ab.structure.factors.size());
  if (k == 0) return {};
  std::vector<IntVec> cols;
  for (int i = 0; i < k; ++i) {
    IntVec e = IntVec::Zero(k);
    e(i) = ab.structure.factors[i];
    cols.push_back(e);
  }
  for (const auto& [H, e] : pairs)
    for (int h : generating_set(G, H)) {
      IntVec v(k);
      for (int i = 0; i < k; ++i) v(i) = ab.image[h][i];
      cols.push_back(v);
    }
  IntMat R(k, static_cast<Eigen::Index>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) R.col(static_cast<Eigen::Index>(c)) = cols[c];
  return cokernel(R).torsion();
}

}  // namespace hnp
