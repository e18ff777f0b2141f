#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hnp {

// Finite abelian group in invariant-factor form d_1 | d_2 | ... | d_k, all d_i >= 2.
struct FinAb {
  std::vector<std::int64_t> factors;

  // Canonicalizes any list of cyclic orders; entries 0 and 1 are dropped
  // (callers account for free parts separately).
  static FinAb from_cyclic_orders(const std::vector<std::int64_t>& orders);
  static FinAb cyclic(std::int64_t n);
  static FinAb elementary(std::int64_t p, int rank);

  bool trivial() const { return factors.empty(); }
  std::int64_t order() const;
  std::int64_t exponent() const;
  FinAb p_part(std::int64_t p) const;
  // all primary parts except p
  FinAb prime_to(std::int64_t p) const;
  std::string str() const;

  bool operator==(const FinAb& o) const { return factors == o.factors; }
  bool operator!=(const FinAb& o) const { return !(*this == o); }
};

FinAb direct_sum(const FinAb& a, const FinAb& b);

}  // namespace hnp
