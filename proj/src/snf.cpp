#include "hnp/snf.hpp"

namespace hnp {

std::vector<std::int64_t> smith_diagonal(const IntMat& A) {
  return with_bignum_fallback([&](auto tag) {
    using S = decltype(tag);
    auto s = smith<S>(widen<S>(A), false);
    std::vector<std::int64_t> d;
    for (auto& x : s.diag) d.push_back(narrow(x));
    return d;
  });
}

int integer_rank(const IntMat& A) {
  int r = 0;
  for (auto d : smith_diagonal(A)) r += d != 0;
  return r;
}

IntMat integer_kernel(const IntMat& A) {
  return with_bignum_fallback([&](auto tag) {
    using S = decltype(tag);
    auto s = smith<S>(widen<S>(A));
    const int n = static_cast<int>(A.cols());
    IntMat K(n, n - s.rank);
    for (int j = s.rank; j < n; ++j)
      for (int i = 0; i < n; ++i) K(i, j - s.rank) = narrow(s.V(i, j));
    return K;
  });
}

std::optional<IntVec> solve_integer(const IntMat& A, const IntVec& b) {
  return with_bignum_fallback([&](auto tag) -> std::optional<IntVec> {
    using S = decltype(tag);
    auto s = smith<S>(widen<S>(A));
    const int m = static_cast<int>(A.rows()), n = static_cast<int>(A.cols());
    Vec<S> c = Vec<S>::Zero(m);
    for (int i = 0; i < m; ++i)
      for (int k = 0; k < m; ++k)
        if (s.U(i, k) != 0 && b(k) != 0) c(i) += s.U(i, k) * S(b(k));
    Vec<S> y = Vec<S>::Zero(n);
    for (int i = 0; i < m; ++i) {
      if (i < s.rank) {
        if (c(i) % s.diag[i] != 0) return std::nullopt;
        y(i) = c(i) / s.diag[i];
      } else if (c(i) != 0) {
        return std::nullopt;
      }
    }
    IntVec x(n);
    for (int i = 0; i < n; ++i) {
      S acc = 0;
      for (int k = 0; k < s.rank; ++k)
        if (s.V(i, k) != 0) acc += s.V(i, k) * y(k);
      x(i) = narrow(acc);
    }
    return x;
  });
}

Cokernel cokernel(const IntMat& A) {
  return with_bignum_fallback([&](auto tag) {
    using S = decltype(tag);
    auto s = smith<S>(widen<S>(A));
    const int m = static_cast<int>(A.rows());
    Cokernel out;
    std::vector<int> pos;
    for (int i = 0; i < s.rank; ++i)
      if (s.diag[i] != 1) pos.push_back(i);
    out.generators.resize(m, static_cast<Eigen::Index>(pos.size()));
    out.coordinates.resize(static_cast<Eigen::Index>(pos.size()), m);
    for (std::size_t k = 0; k < pos.size(); ++k) {
      out.orders.push_back(narrow(s.diag[pos[k]]));
      for (int i = 0; i < m; ++i) {
        out.generators(i, k) = narrow(s.Uinv(i, pos[k]));
        out.coordinates(k, i) = narrow(s.U(pos[k], i));
      }
    }
    out.free_rank = m - s.rank;
    return out;
  });
}

SaturatedQuotient quotient_by_saturated(const IntMat& B) {
  return with_bignum_fallback([&](auto tag) {
    using S = decltype(tag);
    auto s = smith<S>(widen<S>(B));
    const int m = static_cast<int>(B.rows());
    for (int i = 0; i < s.rank; ++i)
      if (s.diag[i] != 1) throw Error(ErrorKind::PreconditionFailed, "sublattice is not saturated");
    SaturatedQuotient q;
    q.proj.resize(m - s.rank, m);
    q.section.resize(m, m - s.rank);
    for (int i = s.rank; i < m; ++i)
      for (int k = 0; k < m; ++k) {
        q.proj(i - s.rank, k) = narrow(s.U(i, k));
        q.section(k, i - s.rank) = narrow(s.Uinv(k, i));
      }
    return q;
  });
}

}  // namespace hnp
