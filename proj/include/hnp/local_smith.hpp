#pragma once

#include <cstdint>
#include <vector>

namespace hnp {

// Smith reduction of an integer matrix over Z/q^k. Row and column operations
// are logged so that U (left) and V (right) can be applied to vectors later.
// After run(): U * A * V has exactly one nonzero entry per pivot, at
// (pivot.row, pivot.col), of q-valuation pivot.val; all other rows are zero mod q^k.
class LocalSmith {
 public:
  struct Pivot {
    int row;
    int col;
    int val;
  };

  LocalSmith(std::int64_t q, int k, int rows, int cols);

  std::int64_t modulus() const { return Q_; }
  int rows() const { return m_; }
  int cols() const { return n_; }
  void add(int r, int c, std::int64_t v);

  void run();

  const std::vector<Pivot>& pivots() const { return pivots_; }
  // pivots with 0 < val < k, i.e. the q-torsion of the cokernel
  std::vector<Pivot> torsion() const;
  // U y mod q^k, y of length rows()
  std::vector<std::int64_t> apply_u(std::vector<std::int64_t> y) const;
  // V e_col mod q^k, of length cols()
  std::vector<std::int64_t> v_column(int col) const;

 private:
  struct RowOp {
    int target;
    int source;
    std::uint32_t factor;
  };
  struct ColOp {
    int target;
    int source;
    std::uint32_t factor;
  };

  std::uint32_t& at(int r, int c) { return a_[static_cast<std::size_t>(r) * n_ + c]; }
  int valuation(std::uint32_t x) const;
  void eliminate(int r, int c, int v);

  std::int64_t q_;
  int k_;
  std::int64_t Q_;
  int m_, n_;
  std::vector<std::uint32_t> a_;
  std::vector<Pivot> pivots_;
  std::vector<RowOp> row_ops_;
  std::vector<ColOp> col_ops_;
  std::vector<char> row_done_, col_done_;
};

}  // namespace hnp
