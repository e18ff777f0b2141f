#include "hnp/finab.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "hnp/numbers.hpp"

namespace hnp {

FinAb FinAb::from_cyclic_orders(const std::vector<std::int64_t>& orders) {
  // collect elementary divisors per prime, largest first
  std::map<std::int64_t, std::vector<std::int64_t>> by_prime;
  for (std::int64_t d : orders) {
    if (d < 0) d = -d;
    if (d <= 1) continue;
    for (auto [q, e] : factorize(d)) by_prime[q].push_back(ipow(q, e));
  }
  std::size_t len = 0;
  for (auto& [q, v] : by_prime) {
    std::sort(v.begin(), v.end(), std::greater<>());
    len = std::max(len, v.size());
  }
  std::vector<std::int64_t> out(len, 1);
  for (auto& [q, v] : by_prime)
    for (std::size_t i = 0; i < v.size(); ++i) out[len - 1 - i] *= v[i];
  return FinAb{out};
}

FinAb FinAb::cyclic(std::int64_t n) { return from_cyclic_orders({n}); }

FinAb FinAb::elementary(std::int64_t p, int rank) {
  return from_cyclic_orders(std::vector<std::int64_t>(std::max(rank, 0), p));
}

std::int64_t FinAb::order() const {
  std::int64_t o = 1;
  for (auto d : factors) o *= d;
  return o;
}

std::int64_t FinAb::exponent() const { return factors.empty() ? 1 : factors.back(); }

FinAb FinAb::p_part(std::int64_t p) const {
  std::vector<std::int64_t> v;
  for (auto d : factors) v.push_back(ipow(p, ord_p(d, p)));
  return from_cyclic_orders(v);
}

FinAb FinAb::prime_to(std::int64_t p) const {
  std::vector<std::int64_t> v;
  for (auto d : factors) v.push_back(d / ipow(p, ord_p(d, p)));
  return from_cyclic_orders(v);
}

std::string FinAb::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(factors[i]);
  }
  return s + "]";
}

FinAb direct_sum(const FinAb& a, const FinAb& b) {
  std::vector<std::int64_t> v = a.factors;
  v.insert(v.end(), b.factors.begin(), b.factors.end());
  return FinAb::from_cyclic_orders(v);
}

}  // namespace hnp
