#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include "hnp/finab.hpp"
#include "hnp/types.hpp"

namespace hnp {

using BigInt = boost::multiprecision::cpp_int;

namespace checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "int64 add");
  return r;
}
inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "int64 mul");
  return r;
}
inline std::int64_t neg(std::int64_t a) { return mul(a, -1); }
inline std::int64_t abs(std::int64_t a) { return a < 0 ? neg(a) : a; }

inline BigInt add(const BigInt& a, const BigInt& b) { return a + b; }
inline BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt neg(const BigInt& a) { return -a; }
inline BigInt abs(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

}  // namespace checked

// U * A * V = diag(d_0, ..., d_{k-1}, 0, ...), d_i > 0 and d_i | d_{i+1}.
template <typename Scalar>
struct Smith {
  Mat<Scalar> U, Uinv, V;
  std::vector<Scalar> diag;
  int rank = 0;
};

template <typename Scalar>
Smith<Scalar> smith(Mat<Scalar> A, bool transforms = true) {
  using namespace checked;
  const int m = static_cast<int>(A.rows()), n = static_cast<int>(A.cols());
  Smith<Scalar> s;
  if (transforms) {
    s.U = Mat<Scalar>::Identity(m, m);
    s.Uinv = Mat<Scalar>::Identity(m, m);
    s.V = Mat<Scalar>::Identity(n, n);
  }
  // row_i += c * row_j
  auto row_add = [&](int i, int j, const Scalar& c, int from) {
    for (int k = from; k < n; ++k)
      if (A(j, k) != 0) A(i, k) = add(A(i, k), mul(c, A(j, k)));
    if (transforms) {
      for (int k = 0; k < m; ++k)
        if (s.U(j, k) != 0) s.U(i, k) = add(s.U(i, k), mul(c, s.U(j, k)));
      for (int k = 0; k < m; ++k)
        if (s.Uinv(k, i) != 0) s.Uinv(k, j) = add(s.Uinv(k, j), neg(mul(c, s.Uinv(k, i))));
    }
  };
  // col_i += c * col_j
  auto col_add = [&](int i, int j, const Scalar& c, int from) {
    for (int k = from; k < m; ++k)
      if (A(k, j) != 0) A(k, i) = add(A(k, i), mul(c, A(k, j)));
    if (transforms)
      for (int k = 0; k < n; ++k)
        if (s.V(k, j) != 0) s.V(k, i) = add(s.V(k, i), mul(c, s.V(k, j)));
  };
  auto row_swap = [&](int i, int j) {
    if (i == j) return;
    A.row(i).swap(A.row(j));
    if (transforms) {
      s.U.row(i).swap(s.U.row(j));
      s.Uinv.col(i).swap(s.Uinv.col(j));
    }
  };
  auto col_swap = [&](int i, int j) {
    if (i == j) return;
    A.col(i).swap(A.col(j));
    if (transforms) s.V.col(i).swap(s.V.col(j));
  };

  const int kmax = std::min(m, n);
  int t = 0;
  for (; t < kmax; ++t) {
    int bi = -1, bj = -1;
    Scalar best = 0;
    for (int j = t; j < n; ++j)
      for (int i = t; i < m; ++i)
        if (A(i, j) != 0 && (bi < 0 || abs(A(i, j)) < best)) {
          best = abs(A(i, j));
          bi = i;
          bj = j;
        }
    if (bi < 0) break;
    row_swap(t, bi);
    col_swap(t, bj);
    for (;;) {
      bool clean = true;
      for (int i = t + 1; i < m; ++i)
        if (A(i, t) != 0) {
          Scalar q = A(i, t) / A(t, t);
          if (q != 0) row_add(i, t, neg(q), t);
          if (A(i, t) != 0) clean = false;
        }
      for (int j = t + 1; j < n; ++j)
        if (A(t, j) != 0) {
          Scalar q = A(t, j) / A(t, t);
          if (q != 0) col_add(j, t, neg(q), t);
          if (A(t, j) != 0) clean = false;
        }
      if (!clean) {
        int ri = -1, cj = -1;
        Scalar b = abs(A(t, t));
        for (int i = t + 1; i < m; ++i)
          if (A(i, t) != 0 && abs(A(i, t)) < b) {
            b = abs(A(i, t));
            ri = i;
            cj = -1;
          }
        for (int j = t + 1; j < n; ++j)
          if (A(t, j) != 0 && abs(A(t, j)) < b) {
            b = abs(A(t, j));
            cj = j;
            ri = -1;
          }
        if (ri >= 0) row_swap(t, ri);
        if (cj >= 0) col_swap(t, cj);
        continue;
      }
      int di = -1;
      for (int i = t + 1; i < m && di < 0; ++i)
        for (int j = t + 1; j < n; ++j)
          if (A(i, j) % A(t, t) != 0) {
            di = i;
            break;
          }
      if (di < 0) break;
      row_add(t, di, Scalar(1), t);
    }
    if (A(t, t) < 0) {
      for (int k = t; k < n; ++k) A(t, k) = neg(A(t, k));
      if (transforms) {
        for (int k = 0; k < m; ++k) s.U(t, k) = neg(s.U(t, k));
        for (int k = 0; k < m; ++k) s.Uinv(k, t) = neg(s.Uinv(k, t));
      }
    }
  }
  s.rank = t;
  s.diag.resize(kmax, Scalar(0));
  for (int i = 0; i < t; ++i) s.diag[i] = A(i, i);
  return s;
}

template <typename Scalar>
Mat<Scalar> widen(const IntMat& A) {
  Mat<Scalar> B(A.rows(), A.cols());
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j) B(i, j) = Scalar(A(i, j));
  return B;
}

inline std::int64_t narrow(std::int64_t x) { return x; }
inline std::int64_t narrow(const BigInt& x) {
  if (x > BigInt(INT64_MAX) || x < BigInt(INT64_MIN))
    throw Error(ErrorKind::Overflow, "result does not fit in int64");
  return static_cast<std::int64_t>(x);
}

template <typename Scalar>
IntMat narrow(const Mat<Scalar>& A) {
  IntMat B(A.rows(), A.cols());
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j) B(i, j) = narrow(A(i, j));
  return B;
}

// Runs f with an int64 scalar tag and retries with a bignum tag on overflow.
template <typename F>
auto with_bignum_fallback(F&& f) {
  try {
    return f(std::int64_t{});
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Overflow) throw;
  }
  return f(BigInt{});
}

// Integer-valued front ends (exact, bignum fallback inside).

std::vector<std::int64_t> smith_diagonal(const IntMat& A);
int integer_rank(const IntMat& A);
// columns form a Z-basis of {x : A x = 0}
IntMat integer_kernel(const IntMat& A);
std::optional<IntVec> solve_integer(const IntMat& A, const IntVec& b);

// Z^m / A Z^n = torsion (+) Z^free_rank; generators[:, i] has order orders[i].
struct Cokernel {
  std::vector<std::int64_t> orders;
  IntMat generators;
  int free_rank = 0;
  // coordinates of the torsion part: row i of this matrix, taken mod orders[i]
  IntMat coordinates;
  FinAb torsion() const { return FinAb::from_cyclic_orders(orders); }
};
Cokernel cokernel(const IntMat& A);

// For B whose columns span a saturated sublattice L of Z^m:
// proj: Z^m -> Z^{m-k} with kernel exactly L, section with proj * section = I.
struct SaturatedQuotient {
  IntMat proj;
  IntMat section;
};
SaturatedQuotient quotient_by_saturated(const IntMat& B);

}  // namespace hnp
