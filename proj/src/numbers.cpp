#include "hnp/numbers.hpp"

#include <numeric>

#include "hnp/types.hpp"

namespace hnp {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::SpecInvalid: return "SpecInvalid";
    case ErrorKind::OrderBudgetExceeded: return "OrderBudgetExceeded";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorKind::EmptyFamily: return "EmptyFamily";
    case ErrorKind::GroupMismatch: return "GroupMismatch";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotCyclic: return "NotCyclic";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::CertificateUnavailable: return "CertificateUnavailable";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::Overflow: return "Overflow";
  }
  return "Unknown";
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> out;
  if (n < 0) n = -n;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::int64_t> prime_divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (auto [q, e] : factorize(n)) out.push_back(q);
  return out;
}

int ord_p(std::int64_t n, std::int64_t p) {
  int e = 0;
  if (n == 0) return 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  a %= m;
  return a < 0 ? a + m : a;
}

std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t m) {
  std::int64_t r = 1 % m;
  b = mod(b, m);
  while (e > 0) {
    if (e & 1) r = static_cast<std::int64_t>((__int128)r * b % m);
    b = static_cast<std::int64_t>((__int128)b * b % m);
    e >>= 1;
  }
  return r;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t m) {
  std::int64_t g = m, x = 0, g1 = mod(a, m), x1 = 1;
  while (g1 != 0) {
    std::int64_t q = g / g1;
    std::int64_t t = g - q * g1;
    g = g1;
    g1 = t;
    t = x - q * x1;
    x = x1;
    x1 = t;
  }
  if (g != 1) throw Error(ErrorKind::PreconditionFailed, "inv_mod: not invertible");
  return mod(x, m);
}

bool is_power_of_two(std::int64_t n) { return n >= 1 && (n & (n - 1)) == 0; }

}  // namespace hnp
