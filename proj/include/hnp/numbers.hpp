#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace hnp {

bool is_prime(std::int64_t n);
// prime factorization as (prime, exponent), primes ascending
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);
std::vector<std::int64_t> prime_divisors(std::int64_t n);
// exponent of p in n (n != 0)
int ord_p(std::int64_t n, std::int64_t p);
std::int64_t ipow(std::int64_t b, int e);
std::int64_t mod(std::int64_t a, std::int64_t m);
std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t m);
// inverse of a modulo m, a coprime to m
std::int64_t inv_mod(std::int64_t a, std::int64_t m);
bool is_power_of_two(std::int64_t n);

}  // namespace hnp
