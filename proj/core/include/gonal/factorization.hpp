#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace gonal {

// Prime factorization of a positive integer, primes ascending.
struct Factorization {
  std::int64_t n = 1;
  std::vector<std::pair<std::int64_t, int>> factors;  // (prime, exponent), exponent >= 1
};

// Trial division; ample for the intended level range (n <= ~1e7, and far
// beyond with patience).  Throws std::invalid_argument for n < 1.
Factorization factorize(std::int64_t n);

bool is_prime(std::int64_t n);

// Number of distinct prime divisors (0 for n = 1).
int distinct_prime_count(std::int64_t n);
int distinct_prime_count(const Factorization& f);

// All positive divisors, ascending.
std::vector<std::int64_t> divisors(const Factorization& f);
inline std::vector<std::int64_t> divisors(std::int64_t n) { return divisors(factorize(n)); }

// Euler totient.
std::int64_t euler_phi(std::int64_t n);

}  // namespace gonal
