#include "hnp/lattice.hpp"

#include <deque>

#include "hnp/snf.hpp"

namespace hnp {

GroupPtr share(FiniteGroup G) { return std::make_shared<const FiniteGroup>(std::move(G)); }

bool is_unimodular(const IntMat& A) {
  if (A.rows() != A.cols()) return false;
  if (A.rows() == 0) return true;
  auto d = smith_diagonal(A);
  for (auto x : d)
    if (x != 1) return false;
  return true;
}

GLattice lattice_from_generators(GroupPtr G, const std::vector<IntMat>& images) {
  if (images.size() != G->generators.size())
    throw Error(ErrorKind::SpecInvalid, "need one matrix per group generator");
  const int r = images.empty() ? 0 : static_cast<int>(images[0].rows());
  for (const auto& A : images)
    if (A.rows() != r || A.cols() != r) throw Error(ErrorKind::SpecInvalid, "action matrices differ in shape");
  GLattice M{G, r, std::vector<IntMat>(G->n)};
  std::vector<char> seen(G->n, 0);
  M.action[0] = IntMat::Identity(r, r);
  seen[0] = 1;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int g = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < images.size(); ++i) {
      int x = G->mul(g, G->generators[i]);
      IntMat A = M.action[g] * images[i];
      if (!seen[x]) {
        seen[x] = 1;
        M.action[x] = A;
        queue.push_back(x);
      } else if (M.action[x] != A) {
        throw Error(ErrorKind::SpecInvalid, "action matrices do not define a homomorphism");
      }
    }
  }
  for (const auto& A : images)
    if (!is_unimodular(A)) throw Error(ErrorKind::SpecInvalid, "action matrix is not unimodular");
  return M;
}

bool is_valid_lattice(const GLattice& M) {
  const auto& G = *M.group;
  if (static_cast<int>(M.action.size()) != G.n) return false;
  if (M.action[0] != IntMat::Identity(M.rank, M.rank)) return false;
  for (int a = 0; a < G.n; ++a) {
    if (!is_unimodular(M.action[a])) return false;
    for (int b = 0; b < G.n; ++b)
      if (M.action[a] * M.action[b] != M.action[G.mul(a, b)]) return false;
  }
  return true;
}

bool is_equivariant(const LatticeMap& f) {
  if (f.source.group->n != f.target.group->n) return false;
  for (int g = 0; g < f.source.group->n; ++g)
    if (f.target.action[g] * f.matrix != f.matrix * f.source.action[g]) return false;
  return true;
}

GLattice trivial_lattice(GroupPtr G, int rank) {
  return GLattice{G, rank, std::vector<IntMat>(G->n, IntMat::Identity(rank, rank))};
}

InducedLattice induced_perm_lattice(GroupPtr G, const Subgroup& H) {
  InducedLattice out;
  out.cosets = left_cosets(*G, H);
  auto idx = left_coset_index(*G, H);
  const int r = static_cast<int>(out.cosets.size());
  out.lattice = GLattice{G, r, std::vector<IntMat>(G->n)};
  for (int g = 0; g < G->n; ++g) {
    IntMat P = IntMat::Zero(r, r);
    for (int i = 0; i < r; ++i) P(idx[G->mul(g, out.cosets[i][0])], i) = 1;
    out.lattice.action[g] = P;
  }
  return out;
}

GLattice direct_sum(const GLattice& M, const GLattice& N) {
  if (M.group->n != N.group->n || M.group->table != N.group->table)
    throw Error(ErrorKind::GroupMismatch, "direct_sum over different groups");
  GLattice S{M.group, M.rank + N.rank, std::vector<IntMat>(M.group->n)};
  for (int g = 0; g < M.group->n; ++g) {
    IntMat A = IntMat::Zero(S.rank, S.rank);
    A.topLeftCorner(M.rank, M.rank) = M.action[g];
    A.bottomRightCorner(N.rank, N.rank) = N.action[g];
    S.action[g] = A;
  }
  return S;
}

JLattice j_lattice(GroupPtr G, const std::vector<std::pair<Subgroup, int>>& pairs) {
  if (pairs.empty()) throw Error(ErrorKind::EmptyFamily, "j_lattice needs at least one subgroup");
  GLattice amb = trivial_lattice(G, 0);
  for (const auto& [H, e] : pairs) {
    if (e < 1) throw Error(ErrorKind::PreconditionFailed, "multiplicity must be positive");
    if (!is_subgroup(*G, H.elements)) throw Error(ErrorKind::PreconditionFailed, "not a subgroup");
    GLattice ind = induced_perm_lattice(G, H).lattice;
    for (int i = 0; i < e; ++i) amb = direct_sum(amb, ind);
  }
  IntMat ones = IntMat::Ones(amb.rank, 1);
  auto q = quotient_by_saturated(ones);
  JLattice J;
  J.ambient = amb;
  J.section = q.section;
  J.lattice = GLattice{G, amb.rank - 1, std::vector<IntMat>(G->n)};
  for (int g = 0; g < G->n; ++g) J.lattice.action[g] = q.proj * amb.action[g] * q.section;
  J.quotient = LatticeMap{amb, J.lattice, q.proj};
  return J;
}

GLattice restrict(const GLattice& M, const Subgroup& D) {
  GLattice R{share(subgroup_as_group(*M.group, D)), M.rank, {}};
  for (int d : D.elements) R.action.push_back(M.action[d]);
  return R;
}

GLattice twist(const FiniteGroup& G, const Subgroup& H, const GLattice& M, int g) {
  Subgroup K = conjugate(G, H, g);
  GLattice T{share(subgroup_as_group(G, K)), M.rank, {}};
  const int gi = G.inv(g);
  for (int x : K.elements) T.action.push_back(M.action[local_index(H, G.conj(gi, x))]);
  return T;
}

MackeyDecomposition mackey_decompose(GroupPtr G, const Subgroup& H, const Subgroup& D) {
  InducedLattice ind = induced_perm_lattice(G, H);
  GLattice src = restrict(ind.lattice, D);
  GroupPtr DG = src.group;
  auto coset_of = left_coset_index(*G, H);
  MackeyDecomposition out;
  GLattice sum = trivial_lattice(DG, 0);
  IntMat P = IntMat::Zero(src.rank, src.rank);
  int offset = 0;
  for (const auto& dc : double_cosets(*G, D, H)) {
    const int g = dc.representative;
    Subgroup I = intersection(D, conjugate(*G, H, g));
    Subgroup Iloc = to_local(D, I);
    InducedLattice piece = induced_perm_lattice(DG, Iloc);
    // coset d I of D  <->  coset d g H of G
    for (std::size_t j = 0; j < piece.cosets.size(); ++j) {
      int d = D.elements[piece.cosets[j][0]];
      P(offset + static_cast<int>(j), coset_of[G->mul(d, g)]) = 1;
    }
    offset += piece.lattice.rank;
    sum = direct_sum(sum, piece.lattice);
    out.summands.push_back(MackeySummand{g, I, piece.lattice});
  }
  out.iso = LatticeMap{src, sum, P};
  return out;
}

GLattice inflate(const GLattice& M, GroupPtr G, const std::vector<int>& projection) {
  GLattice R{G, M.rank, std::vector<IntMat>(G->n)};
  for (int g = 0; g < G->n; ++g) R.action[g] = M.action[projection[g]];
  return R;
}

}  // namespace hnp
