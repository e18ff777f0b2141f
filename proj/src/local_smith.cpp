#include "hnp/local_smith.hpp"

#include "hnp/numbers.hpp"
#include "hnp/types.hpp"

namespace hnp {

LocalSmith::LocalSmith(std::int64_t q, int k, int rows, int cols)
    : q_(q), k_(k), Q_(ipow(q, k)), m_(rows), n_(cols) {
  if (Q_ >= (std::int64_t{1} << 31))
    throw Error(ErrorKind::BudgetExceeded, "local modulus q^k exceeds 2^31");
  a_.assign(static_cast<std::size_t>(m_) * n_, 0);
  row_done_.assign(m_, 0);
  col_done_.assign(n_, 0);
}

void LocalSmith::add(int r, int c, std::int64_t v) {
  auto& x = at(r, c);
  x = static_cast<std::uint32_t>(mod(static_cast<std::int64_t>(x) + v, Q_));
}

int LocalSmith::valuation(std::uint32_t x) const {
  if (x == 0) return k_;
  int v = 0;
  while (x % q_ == 0) {
    x = static_cast<std::uint32_t>(x / q_);
    ++v;
  }
  return v;
}

void LocalSmith::eliminate(int r, int c, int v) {
  const std::uint64_t Q = static_cast<std::uint64_t>(Q_);
  const std::int64_t qv = ipow(q_, v);
  const std::uint32_t piv = at(r, c);
  const std::uint64_t uinv = static_cast<std::uint64_t>(inv_mod(piv / qv, Q_));
  std::vector<int> nz;
  for (int j = 0; j < n_; ++j)
    if (!col_done_[j] && j != c && at(r, j) != 0) nz.push_back(j);
  const std::uint32_t* prow = &a_[static_cast<std::size_t>(r) * n_];
  // clear column c with row operations
  for (int i = 0; i < m_; ++i) {
    if (row_done_[i] || i == r) continue;
    std::uint32_t x = at(i, c);
    if (x == 0) continue;
    // row_i += f * row_r with f = -(x / q^v) * u^-1
    std::uint64_t f = (Q - (static_cast<std::uint64_t>(x / qv) * uinv) % Q) % Q;
    std::uint32_t* irow = &a_[static_cast<std::size_t>(i) * n_];
    irow[c] = 0;
    for (int j : nz) irow[j] = static_cast<std::uint32_t>((irow[j] + f * prow[j]) % Q);
    row_ops_.push_back({i, r, static_cast<std::uint32_t>(f)});
  }
  // clear row r with column operations; only row r changes in A
  for (int j : nz) {
    std::uint64_t f = (Q - (static_cast<std::uint64_t>(prow[j] / qv) * uinv) % Q) % Q;
    col_ops_.push_back({j, c, static_cast<std::uint32_t>(f)});
    at(r, j) = 0;
  }
  row_done_[r] = 1;
  col_done_[c] = 1;
  pivots_.push_back({r, c, v});
}

void LocalSmith::run() {
  for (int v = 0; v < k_; ++v) {
    bool progress = true;
    while (progress) {
      progress = false;
      for (int c = 0; c < n_; ++c) {
        if (col_done_[c]) continue;
        for (int i = 0; i < m_; ++i) {
          if (row_done_[i]) continue;
          std::uint32_t x = at(i, c);
          if (x != 0 && valuation(x) == v) {
            eliminate(i, c, v);
            progress = true;
            break;
          }
        }
      }
    }
  }
}

std::vector<LocalSmith::Pivot> LocalSmith::torsion() const {
  std::vector<Pivot> out;
  for (const auto& p : pivots_)
    if (p.val > 0) out.push_back(p);
  return out;
}

std::vector<std::int64_t> LocalSmith::apply_u(std::vector<std::int64_t> y) const {
  const std::uint64_t Q = static_cast<std::uint64_t>(Q_);
  for (auto& x : y) x = mod(x, Q_);
  for (const auto& op : row_ops_)
    y[op.target] = static_cast<std::int64_t>(
        (static_cast<std::uint64_t>(y[op.target]) + op.factor * static_cast<std::uint64_t>(y[op.source])) % Q);
  return y;
}

std::vector<std::int64_t> LocalSmith::v_column(int col) const {
  const std::uint64_t Q = static_cast<std::uint64_t>(Q_);
  std::vector<std::int64_t> x(n_, 0);
  x[col] = 1;
  // V = E_1 E_2 ... E_T with E_t = I + f e_source e_target^T
  for (auto it = col_ops_.rbegin(); it != col_ops_.rend(); ++it)
    x[it->source] = static_cast<std::int64_t>(
        (static_cast<std::uint64_t>(x[it->source]) + it->factor * static_cast<std::uint64_t>(x[it->target])) % Q);
  return x;
}

}  // namespace hnp
